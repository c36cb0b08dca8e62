#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "artin/orbit.hpp"

using namespace artin;

TEST_CASE("finite subsets of the affine triangle") {
  auto k = finite_parabolic_subsets(CoxeterDiagram::affine_a(2));
  CHECK(k.f_vector == std::vector<long>{1, 3, 3});
  // every proper subset appears, the full vertex set does not
  REQUIRE(k.subsets.size() == 7);
  CHECK(k.subsets[0].empty());
  CHECK(k.subsets[1] == std::vector<int>{0});
  CHECK(k.subsets[4] == std::vector<int>{0, 1});
  CHECK(euler_characteristic(CoxeterDiagram::affine_a(2)) == 1);
}

TEST_CASE("finite subsets of the affine square") {
  auto k = finite_parabolic_subsets(CoxeterDiagram::affine_a(3));
  CHECK(k.f_vector == std::vector<long>{1, 4, 6, 4});
  CHECK(euler_characteristic(CoxeterDiagram::affine_a(3)) == -1);
}

TEST_CASE("finite diagrams keep every subset") {
  auto k = finite_parabolic_subsets(CoxeterDiagram::type_b(3));
  CHECK(k.f_vector == std::vector<long>{1, 3, 3, 1});
  CHECK(euler_characteristic(CoxeterDiagram::type_b(3)) == 0);
  for (int n = 1; n <= 5; ++n) CHECK(euler_characteristic(CoxeterDiagram::type_a(n)) == 0);
}

TEST_CASE("affine families alternate sign") {
  for (int kk = 2; kk <= 6; ++kk) {
    long expected = kk % 2 == 0 ? 1 : -1;
    CHECK(euler_characteristic(CoxeterDiagram::affine_a(kk)) == expected);
    CHECK(euler_characteristic(CoxeterDiagram::affine_c(kk)) == expected);
  }
}

TEST_CASE("free group has only singletons") {
  const int inf = CoxeterDiagram::kInfiniteBond;
  CoxeterDiagram d{{"a", "b", "c"},
                   {{1, inf, inf}, {inf, 1, inf}, {inf, inf, 1}},
                   {Weight::Q, Weight::Q, Weight::Q}};
  auto k = finite_parabolic_subsets(d);
  CHECK(k.f_vector == std::vector<long>{1, 3});
  CHECK(euler_characteristic(d) == -2);
}

TEST_CASE("subset enumeration is closed under faces") {
  auto k = finite_parabolic_subsets(CoxeterDiagram::affine_c(3));
  for (const auto& subset : k.subsets) {
    if (subset.empty()) continue;
    // drop one element at a time; the face must be present
    for (std::size_t skip = 0; skip < subset.size(); ++skip) {
      std::vector<int> face;
      for (std::size_t i = 0; i < subset.size(); ++i)
        if (i != skip) face.push_back(subset[i]);
      CHECK(std::find(k.subsets.begin(), k.subsets.end(), face) != k.subsets.end());
    }
  }
}

TEST_CASE("presentation of the four-bond pair") {
  auto p = artin_presentation(CoxeterDiagram::type_b(2));
  CHECK(p.generators == std::vector<std::string>{"s1", "s2"});
  REQUIRE(p.relations.size() == 1);
  CHECK(p.relations[0].first == "s1 s2 s1 s2");
  CHECK(p.relations[0].second == "s2 s1 s2 s1");
}

TEST_CASE("presentation of the affine triangle") {
  auto p = artin_presentation(CoxeterDiagram::affine_a(2));
  REQUIRE(p.relations.size() == 3);
  for (const auto& [lhs, rhs] : p.relations) {
    CHECK(lhs.size() == rhs.size());
    CHECK(lhs != rhs);
  }
}

TEST_CASE("infinite bonds impose no relation") {
  const int inf = CoxeterDiagram::kInfiniteBond;
  CoxeterDiagram d{{"x", "y"}, {{1, inf}, {inf, 1}}, {Weight::Q, Weight::Q}};
  auto p = artin_presentation(d);
  CHECK(p.generators == std::vector<std::string>{"x", "y"});
  CHECK(p.relations.empty());
}

TEST_CASE("commuting pair") {
  auto p = artin_presentation(CoxeterDiagram::type_a(3));
  REQUIRE(p.relations.size() == 3);
  CHECK(p.relations[1].first == "s1 s3");
  CHECK(p.relations[1].second == "s3 s1");
}
