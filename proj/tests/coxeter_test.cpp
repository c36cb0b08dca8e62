#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "artin/coxeter.hpp"
#include "artin/qanalog.hpp"

using namespace artin;

TEST_CASE("path diagram shapes") {
  auto a3 = CoxeterDiagram::type_a(3);
  CHECK(a3.rank() == 3);
  CHECK(a3.vertices == std::vector<std::string>{"s1", "s2", "s3"});
  CHECK(a3.bond(0, 1) == 3);
  CHECK(a3.bond(1, 2) == 3);
  CHECK(a3.bond(0, 2) == 2);
  CHECK(a3.bond(1, 1) == 1);
  CHECK(std::all_of(a3.weights.begin(), a3.weights.end(),
                    [](Weight w) { return w == Weight::Q; }));

  auto b3 = CoxeterDiagram::type_b(3);
  CHECK(b3.bond(0, 1) == 3);
  CHECK(b3.bond(1, 2) == 4);
  CHECK(b3.weights[0] == Weight::Q);
  CHECK(b3.weights[1] == Weight::Q);
  CHECK(b3.weights[2] == Weight::T);
}

TEST_CASE("affine diagram shapes") {
  auto at2 = CoxeterDiagram::affine_a(2);
  CHECK(at2.rank() == 3);
  CHECK(at2.bond(0, 1) == 3);
  CHECK(at2.bond(1, 2) == 3);
  CHECK(at2.bond(0, 2) == 3);

  auto at3 = CoxeterDiagram::affine_a(3);
  CHECK(at3.rank() == 4);
  CHECK(at3.bond(0, 3) == 3);
  CHECK(at3.bond(0, 2) == 2);

  auto ct3 = CoxeterDiagram::affine_c(3);
  CHECK(ct3.rank() == 4);
  CHECK(ct3.bond(0, 1) == 4);
  CHECK(ct3.bond(1, 2) == 3);
  CHECK(ct3.bond(2, 3) == 4);
}

TEST_CASE("shorthand parsing") {
  CHECK(CoxeterDiagram::from_shorthand("A:4").rank() == 4);
  CHECK(CoxeterDiagram::from_shorthand("B:3").bond(1, 2) == 4);
  CHECK(CoxeterDiagram::from_shorthand("Atilde:2").rank() == 3);
  CHECK(CoxeterDiagram::from_shorthand("Ctilde:2").rank() == 3);
  CHECK_THROWS_AS(CoxeterDiagram::from_shorthand("Q:2"), std::invalid_argument);
  CHECK_THROWS_AS(CoxeterDiagram::from_shorthand("A:x"), std::invalid_argument);
  CHECK_THROWS_AS(CoxeterDiagram::from_shorthand("A"), std::invalid_argument);
}

TEST_CASE("induced subdiagrams") {
  auto b4 = CoxeterDiagram::type_b(4);
  auto sub = b4.induced({0, 2, 3});
  CHECK(sub.rank() == 3);
  CHECK(sub.vertices == std::vector<std::string>{"s1", "s3", "s4"});
  CHECK(sub.bond(0, 1) == 2);
  CHECK(sub.bond(1, 2) == 4);
  CHECK(sub.weights[2] == Weight::T);
}

TEST_CASE("components split at 2-bonds") {
  auto a5 = CoxeterDiagram::type_a(5);
  auto sub = a5.induced({0, 1, 3});
  auto comps = sub.components();
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == std::vector<int>{0, 1});
  CHECK(comps[1] == std::vector<int>{2});
}

TEST_CASE("finite type classification") {
  CHECK(is_finite_type(CoxeterDiagram::type_a(7)));
  CHECK(is_finite_type(CoxeterDiagram::type_b(6)));
  CHECK_FALSE(is_finite_type(CoxeterDiagram::affine_a(2)));
  CHECK_FALSE(is_finite_type(CoxeterDiagram::affine_a(5)));
  CHECK_FALSE(is_finite_type(CoxeterDiagram::affine_c(3)));

  auto res = classify_finite_type(CoxeterDiagram::type_b(4).induced({0, 1, 3}));
  REQUIRE(res.finite);
  CHECK(res.component_types == std::vector<std::string>{"A2", "A1"});

  CoxeterDiagram pent{{"a", "b"}, {{1, 5}, {5, 1}}, {Weight::Q, Weight::Q}};
  auto ires = classify_finite_type(pent);
  REQUIRE(ires.finite);
  CHECK(ires.component_types == std::vector<std::string>{"I2(5)"});

  CoxeterDiagram inf{{"a", "b"},
                     {{1, CoxeterDiagram::kInfiniteBond}, {CoxeterDiagram::kInfiniteBond, 1}},
                     {Weight::Q, Weight::Q}};
  CHECK_FALSE(is_finite_type(inf));
}

TEST_CASE("validate rejects malformed diagrams") {
  CoxeterDiagram dup{{"a", "a"}, {{1, 3}, {3, 1}}, {Weight::Q, Weight::Q}};
  CHECK_THROWS_AS(dup.validate(), std::invalid_argument);
  CoxeterDiagram asym{{"a", "b"}, {{1, 3}, {4, 1}}, {Weight::Q, Weight::Q}};
  CHECK_THROWS_AS(asym.validate(), std::invalid_argument);
  CoxeterDiagram low{{"a", "b"}, {{1, 1}, {1, 1}}, {Weight::Q, Weight::Q}};
  CHECK_THROWS_AS(low.validate(), std::invalid_argument);
}

TEST_CASE("poincare oracle small groups") {
  CHECK(group_poincare_oracle(CoxeterDiagram::type_a(1)) == BiLaurent::parse("1 + q"));
  CHECK(group_poincare_oracle(CoxeterDiagram::type_a(2)) ==
        BiLaurent::parse("1 + 2*q + 2*q^2 + q^3"));
  CHECK(group_poincare_oracle(CoxeterDiagram::type_b(2)) ==
        BiLaurent::parse("1 + t + q + 2*q*t + q*t^2 + q^2*t + q^2*t^2"));
}

TEST_CASE("poincare oracle matches closed forms") {
  for (int n = 1; n <= 4; ++n)
    CHECK(group_poincare_oracle(CoxeterDiagram::type_a(n)) == q_factorial(n + 1));
  for (int n = 2; n <= 4; ++n)
    CHECK(group_poincare_oracle(CoxeterDiagram::type_b(n)) == qt_double_factorial(n));
}

TEST_CASE("oracle budget") {
  CHECK_THROWS_AS(group_poincare_oracle(CoxeterDiagram::type_b(6)), BudgetError);
  CHECK_THROWS_AS(group_poincare_oracle(CoxeterDiagram::affine_a(2), 100), BudgetError);
}

TEST_CASE("parabolic poincare splits over runs") {
  CHECK(parabolic_poincare(Family::A, 5, {}) == BiLaurent(1));
  CHECK(parabolic_poincare(Family::A, 5, {2}) == BiLaurent::parse("1 + q"));
  CHECK(parabolic_poincare(Family::A, 5, {1, 2, 4}) == q_factorial(3) * q_factorial(2));
  CHECK(parabolic_poincare(Family::B, 3, {3}) == BiLaurent::parse("1 + t"));
  CHECK(parabolic_poincare(Family::B, 3, {2, 3}) == qt_double_factorial(2));
  CHECK(parabolic_poincare(Family::B, 4, {1, 3, 4}) ==
        q_factorial(2) * qt_double_factorial(2));
  CHECK(parabolic_poincare(Family::B, 4, {1, 2, 3, 4}) == qt_double_factorial(4));
}
