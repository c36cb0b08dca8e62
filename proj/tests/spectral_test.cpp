#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "artin/qanalog.hpp"
#include "artin/spectral.hpp"

using namespace artin;

namespace {

const E1Entry* find_entry(const E1Page& page, int s, int r) {
  for (const auto& e : page.entries)
    if (e.s == s && e.r == r) return &e;
  return nullptr;
}

BiLaurent eval_q_minus_one(const BiLaurent& b) {
  BiLaurent out;
  for (const auto& [key, c] : b.terms()) {
    auto [a, e] = key;
    out += BiLaurent::monomial(a % 2 == 0 ? c : -c, 0, e);
  }
  return out;
}

}  // namespace

TEST_CASE("first page of the rank four complex") {
  auto page = e1_prediction(4);
  CHECK(page.n == 4);
  REQUIRE(page.entries.size() == 6);
  CHECK(find_entry(page, 0, 1)->ms == std::vector<long>{2});
  CHECK(find_entry(page, 0, 2)->ms == std::vector<long>{3});
  CHECK(find_entry(page, 0, 3)->ms == std::vector<long>{4});
  CHECK(find_entry(page, 1, 1)->ms == std::vector<long>{2});
  CHECK(find_entry(page, 1, 2)->ms == std::vector<long>{3});
  CHECK(find_entry(page, 2, 1)->ms == std::vector<long>{2});
  CHECK(page.free_positions == std::vector<std::pair<int, int>>{{3, 0}, {4, 0}});
}

TEST_CASE("first page of the rank two complex") {
  auto page = e1_prediction(2);
  REQUIRE(page.entries.size() == 1);
  CHECK(find_entry(page, 0, 1)->ms == std::vector<long>{2});
  CHECK(page.free_positions == std::vector<std::pair<int, int>>{{1, 0}, {2, 0}});
  CHECK_THROWS_AS(e1_prediction(1), std::invalid_argument);
}

TEST_CASE("page structure invariants") {
  for (int n = 2; n <= 7; ++n) {
    auto page = e1_prediction(n);
    for (std::size_t k = 0; k + 1 < page.entries.size(); ++k) {
      const auto& a = page.entries[k];
      const auto& b = page.entries[k + 1];
      CHECK((a.s < b.s || (a.s == b.s && a.r < b.r)));
    }
    for (const auto& e : page.entries) {
      CHECK(e.r >= 1);  // torsion never reaches the bottom row
      CHECK(e.s >= 0);
      CHECK(e.s <= n - 2);
      for (long m : e.ms) CHECK(m >= 2);
      for (std::size_t i = 0; i < e.ms.size(); ++i)
        for (std::size_t j = i + 1; j < e.ms.size(); ++j)
          CHECK(std::gcd(e.ms[i], e.ms[j]) == 1);
    }
  }
}

TEST_CASE("page matches cohomology over the q-ring") {
  for (int n = 2; n <= 5; ++n) {
    auto rep = verify_e1(n);
    CHECK(rep.n == n);
    CHECK(rep.all_match);
    for (const auto& c : rep.checks) CHECK(c.match);
  }
}

TEST_CASE("first differential closed form") {
  for (int s = 0; s <= 4; ++s) {
    BiLaurent expected =
        q_number(s + 1) * (BiLaurent(1) + BiLaurent::monomial(Rational(1), s, 1));
    CHECK(d1_coefficient(5, s) == expected);
  }
  CHECK_THROWS_AS(d1_coefficient(5, 5), std::invalid_argument);
  CHECK_THROWS_AS(d1_coefficient(0, 0), std::invalid_argument);
}

TEST_CASE("first differential parity at q = -1") {
  for (int s = 0; s <= 6; ++s) {
    BiLaurent value = eval_q_minus_one(d1_coefficient(7, s));
    if (s % 2 == 1)
      CHECK(value.is_zero());
    else
      CHECK(value == BiLaurent(1) + BiLaurent::t(1));
  }
}

TEST_CASE("second differential factors through (1+t)(1-t)") {
  for (long s = 0; s <= 5; ++s) CHECK(d2_identity_at_minus_one(s));
  CHECK_THROWS_AS(d2_identity_at_minus_one(-1), std::invalid_argument);
}
