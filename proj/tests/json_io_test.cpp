#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>

#include "artin/closed_form.hpp"
#include "artin/json_io.hpp"
#include "artin/orbit.hpp"
#include "artin/salvetti.hpp"
#include "artin/spectral.hpp"

using namespace artin;
using nlohmann::json;

namespace {

bool same_diagram(const CoxeterDiagram& a, const CoxeterDiagram& b) {
  return a.vertices == b.vertices && a.bonds == b.bonds && a.weights == b.weights;
}

}  // namespace

TEST_CASE("diagram round trip") {
  for (const char* name : {"A:4", "B:3", "Atilde:2", "Ctilde:3"}) {
    auto d = CoxeterDiagram::from_shorthand(name);
    CHECK(same_diagram(d, diagram_from_json(diagram_to_json(d))));
  }

  const int inf = CoxeterDiagram::kInfiniteBond;
  CoxeterDiagram free2{{"x", "y"}, {{1, inf}, {inf, 1}}, {Weight::Q, Weight::T}};
  auto j = diagram_to_json(free2);
  CHECK(j["edges"][0]["m"] == "inf");
  CHECK(j["edges"][0]["a"] == 0);
  CHECK(j["edges"][0]["b"] == 1);
  CHECK(same_diagram(free2, diagram_from_json(j)));
}

TEST_CASE("diagram edges accept names or indices") {
  json j = {{"vertices", {"a", "b", "c"}},
            {"edges", {{{"a", 0}, {"b", 1}, {"m", 3}}, {{"a", "b"}, {"b", "c"}, {"m", 4}}}},
            {"weights", {{"c", "t"}}}};
  auto d = diagram_from_json(j);
  CHECK(d.bond(0, 1) == 3);
  CHECK(d.bond(1, 2) == 4);
  CHECK(d.bond(0, 2) == 2);
  CHECK(d.weights[2] == Weight::T);
  CHECK(d.weights[0] == Weight::Q);
}

TEST_CASE("diagram validation failures") {
  CHECK_THROWS_AS(diagram_from_json(json::array()), std::invalid_argument);
  CHECK_THROWS_AS(diagram_from_json(json{{"edges", json::array()}}), std::invalid_argument);
  json dup = {{"vertices", {"a", "a"}}};
  CHECK_THROWS_AS(diagram_from_json(dup), std::invalid_argument);
  json bad_m = {{"vertices", {"a", "b"}}, {"edges", {{{"a", 0}, {"b", 1}, {"m", 1}}}}};
  CHECK_THROWS_AS(diagram_from_json(bad_m), std::invalid_argument);
  json bad_inf = {{"vertices", {"a", "b"}}, {"edges", {{{"a", 0}, {"b", 1}, {"m", "infinite"}}}}};
  CHECK_THROWS_AS(diagram_from_json(bad_inf), std::invalid_argument);
  json out_of_range = {{"vertices", {"a", "b"}}, {"edges", {{{"a", 0}, {"b", 5}, {"m", 3}}}}};
  CHECK_THROWS_AS(diagram_from_json(out_of_range), std::invalid_argument);
  json bad_weight = {{"vertices", {"a"}}, {"weights", {{"a", "z"}}}};
  CHECK_THROWS_AS(diagram_from_json(bad_weight), std::invalid_argument);
  json loop = {{"vertices", {"a", "b"}}, {"edges", {{{"a", 0}, {"b", 0}, {"m", 3}}}}};
  CHECK_THROWS_AS(diagram_from_json(loop), std::invalid_argument);
}

TEST_CASE("diagram spec strings") {
  CHECK(same_diagram(diagram_from_spec("B:3"), CoxeterDiagram::type_b(3)));

  const std::string path = "diagram_roundtrip_test.json";
  {
    std::ofstream out(path);
    out << diagram_to_json(CoxeterDiagram::affine_a(3)).dump();
  }
  CHECK(same_diagram(diagram_from_spec(path), CoxeterDiagram::affine_a(3)));
  std::remove(path.c_str());

  CHECK_THROWS_AS(diagram_from_spec("no_such_file.json"), std::invalid_argument);
  {
    std::ofstream out(path);
    out << "{ not json";
  }
  CHECK_THROWS_AS(diagram_from_spec(path), std::invalid_argument);
  std::remove(path.c_str());
}

TEST_CASE("complex emission round trips the matrices") {
  auto c = build_complex(Family::B, 2);
  auto j = complex_to_json(c);
  CHECK(j["ring"] == c.ring);
  CHECK(j["ranks"] == json(c.ranks));
  CHECK(j["basis"][1] == json::parse("[[2],[1]]"));
  REQUIRE(j["delta"].size() == 2);
  for (std::size_t k = 0; k < c.delta.size(); ++k) {
    const auto& m = c.delta[k];
    for (Index r = 0; r < m.rows(); ++r)
      for (Index cc = 0; cc < m.cols(); ++cc) {
        auto parsed = BiLaurent::parse(j["delta"][k][static_cast<std::size_t>(r)]
                                        [static_cast<std::size_t>(cc)].get<std::string>());
        CHECK(parsed == m(r, cc));
      }
  }
}

TEST_CASE("prediction schema") {
  auto p = predict_qt(3);
  auto j = prediction_to_json(p);
  CHECK(j["n"] == 3);
  REQUIRE(j["degrees"].size() == 4);
  CHECK(j["degrees"][0]["degree"] == 0);
  CHECK(j["degrees"][0]["summands"].empty());
  CHECK(j["degrees"][2]["summands"] == json::parse(R"([{"i":2,"m":2}])"));
  CHECK(j["degrees"][3]["summands"] ==
        json::parse(R"([{"i":2,"m":1},{"i":0,"m":3},{"i":1,"m":3}])"));

  // rebuild from the emitted document and compare
  CohomologyPrediction back;
  back.n = j["n"].get<int>();
  back.by_degree.resize(j["degrees"].size());
  for (const auto& deg : j["degrees"])
    for (const auto& s : deg["summands"])
      back.by_degree[deg["degree"].get<std::size_t>()].push_back(
          {s["m"].get<long>(), s["i"].get<long>()});
  CHECK(back.by_degree == p.by_degree);
}

TEST_CASE("affine prediction schema") {
  auto j = affine_to_json(predict_affine(3));
  CHECK(j["n"] == 3);
  REQUIRE(j["degrees"].size() == 3);
  for (std::size_t d = 0; d < 3; ++d) CHECK(j["degrees"][d]["betti"] == 1);
  CHECK(j["degrees"][2]["q_free_rank"] == 1);
  CHECK(j["degrees"][2]["q_torsion"] == json({3, 3}));
  CHECK(j["degrees"][1]["q_torsion"] == json({2}));
}

TEST_CASE("first page schema") {
  auto page = e1_prediction(3);
  auto j = e1_to_json(page);
  CHECK(j["n"] == 3);
  REQUIRE(j["entries"].size() == page.entries.size());
  for (std::size_t k = 0; k < page.entries.size(); ++k) {
    CHECK(j["entries"][k]["s"] == page.entries[k].s);
    CHECK(j["entries"][k]["r"] == page.entries[k].r);
    CHECK(j["entries"][k]["m"] == json(page.entries[k].ms));
  }
  REQUIRE(j["free"].size() == 2);
  CHECK(j["free"][0]["s"] == 2);
  CHECK(j["free"][0]["r"] == 0);
}

TEST_CASE("cohomology groups schema") {
  auto h = complex_cohomology(specialize_q_minus_one(build_complex(Family::B, 2)));
  auto j = cohomology_to_json("Q[t^+-1]", h);
  CHECK(j["ring"] == "Q[t^+-1]");
  REQUIRE(j["groups"].size() == 3);
  CHECK(j["groups"][0]["free_rank"] == 0);
  CHECK(j["groups"][0]["torsion"].empty());
  CHECK(j["groups"][1]["torsion"] == json({"1 + t"}));
  CHECK(j["groups"][2]["torsion"] == json({"-1 + t^2"}));
}

TEST_CASE("presentation schema") {
  auto j = presentation_to_json(artin_presentation(CoxeterDiagram::type_b(2)));
  CHECK(j["generators"] == json({"s1", "s2"}));
  REQUIRE(j["relations"].size() == 1);
  CHECK(j["relations"][0]["lhs"] == "s1 s2 s1 s2");
  CHECK(j["relations"][0]["rhs"] == "s2 s1 s2 s1");
}

TEST_CASE("comparison report schema") {
  auto h = specialize_prediction(predict_qt(2), Rational(-1));
  auto rep = compare_cohomology(h, predict_t(2));
  auto j = compare_to_json(rep);
  CHECK(j["all_match"] == true);
  REQUIRE(j["degrees"].size() == 3);
  CHECK(j["degrees"][2]["match"] == true);
}
