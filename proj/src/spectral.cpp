#include "artin/spectral.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "artin/cohomology.hpp"
#include "artin/cyclotomic.hpp"
#include "artin/qanalog.hpp"
#include "artin/salvetti.hpp"

namespace artin {

namespace {

LaurentPoly<Rational> at_q_minus_one(const BiLaurent& b) {
  LaurentPoly<Rational> out;
  for (const auto& [key, c] : b.terms()) {
    auto [a, e] = key;
    Rational scaled = a % 2 == 0 ? c : -c;
    out += LaurentPoly<Rational>::monomial(scaled, e);
  }
  return out;
}

}  // namespace

E1Page e1_prediction(int n) {
  if (n < 2) throw std::invalid_argument("e1_prediction: rank must be >= 2");
  std::map<std::pair<int, int>, std::vector<long>> at;
  for (int s = 0; s <= n - 2; ++s) {
    long inner = n - s - 1;
    for (long m = 2; m <= inner; ++m)
      if (inner % m == 0) at[{s, static_cast<int>(n - s - 2 * inner / m)}].push_back(m);
    long outer = n - s;
    for (long m = 2; m <= outer; ++m)
      if (outer % m == 0) at[{s, static_cast<int>(n - s + 1 - 2 * outer / m)}].push_back(m);
  }
  E1Page page;
  page.n = n;
  for (auto& [pos, ms] : at) {
    if (pos.second < 0) throw std::logic_error("e1_prediction: negative row");
    std::sort(ms.begin(), ms.end());
    page.entries.push_back({pos.first, pos.second, ms});
  }
  page.free_positions = {{n - 1, 0}, {n, 0}};
  return page;
}

E1Report verify_e1(int n) {
  E1Page page = e1_prediction(n);
  E1Report report;
  report.n = n;
  report.all_match = true;
  for (int s = 0; s <= n - 2; ++s) {
    auto braid = specialize_t_value(build_complex(Family::A, n - s - 1), Rational(1));
    auto h = complex_cohomology(braid);
    for (int r = 0; r <= n - s - 1; ++r) {
      Poly<Rational> computed(1);
      auto ru = static_cast<std::size_t>(r);
      for (const auto& f : h[ru].torsion) computed *= f;
      Poly<Rational> expected(1);
      for (const auto& e : page.entries)
        if (e.s == s && e.r == r)
          for (long m : e.ms) expected *= cyclotomic(m);
      E1Check check;
      check.s = s;
      check.r = r;
      check.computed = computed.str("q");
      check.expected = expected.str("q");
      check.match = h[ru].free_rank == 0 && computed == expected;
      if (!check.match) report.all_match = false;
      report.checks.push_back(check);
    }
  }
  return report;
}

BiLaurent d1_coefficient(int n, int s) {
  if (n < 1) throw std::invalid_argument("d1_coefficient: rank must be positive");
  if (s < 0 || s > n - 1) throw std::invalid_argument("d1_coefficient: column out of range");
  std::uint32_t gamma = ((1u << s) - 1u) << (n - s);
  CoboundaryStep step = coboundary_coefficient(Family::B, n, gamma, n - s);
  BiLaurent closed =
      q_number(s + 1) * (BiLaurent(1) + BiLaurent::monomial(Rational(1), s, 1));
  if (step.sign != 1 || step.coeff != closed)
    throw std::logic_error("d1_coefficient: complex disagrees with the closed form");
  return closed;
}

bool d2_identity_at_minus_one(long s) {
  if (s < 0) throw std::invalid_argument("d2_identity_at_minus_one: negative column");
  LaurentPoly<Rational> value = at_q_minus_one(qt_binomial_mod(s + 2, s));
  LaurentPoly<Rational> target(Poly<Rational>(1) - Poly<Rational>::x() * Poly<Rational>::x());
  auto [quo, rem] = LaurentPoly<Rational>::divmod(value, target);
  return rem.is_zero() && quo.is_unit();
}

}  // namespace artin
