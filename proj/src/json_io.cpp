#include "artin/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace artin {

using nlohmann::json;

json diagram_to_json(const CoxeterDiagram& d) {
  json out;
  out["vertices"] = d.vertices;
  out["edges"] = json::array();
  for (int a = 0; a < d.rank(); ++a)
    for (int b = a + 1; b < d.rank(); ++b) {
      int m = d.bond(a, b);
      if (m == 2) continue;
      json edge;
      edge["a"] = a;
      edge["b"] = b;
      if (m == CoxeterDiagram::kInfiniteBond)
        edge["m"] = "inf";
      else
        edge["m"] = m;
      out["edges"].push_back(edge);
    }
  out["weights"] = json::object();
  for (int v = 0; v < d.rank(); ++v)
    out["weights"][d.vertices[static_cast<std::size_t>(v)]] =
        d.weights[static_cast<std::size_t>(v)] == Weight::T ? "t" : "q";
  return out;
}

CoxeterDiagram diagram_from_json(const json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
    throw std::invalid_argument("diagram JSON needs a \"vertices\" array");
  CoxeterDiagram d;
  for (const auto& v : j["vertices"]) {
    if (!v.is_string()) throw std::invalid_argument("diagram vertices must be strings");
    d.vertices.push_back(v.get<std::string>());
  }
  const int n = d.rank();
  auto index_of = [&d](const json& ref) {
    if (ref.is_number_integer()) {
      int v = ref.get<int>();
      if (v < 0 || v >= d.rank())
        throw std::invalid_argument("diagram JSON vertex index out of range");
      return v;
    }
    if (ref.is_string()) {
      const std::string name = ref.get<std::string>();
      for (int v = 0; v < d.rank(); ++v)
        if (d.vertices[static_cast<std::size_t>(v)] == name) return v;
      throw std::invalid_argument("diagram JSON references unknown vertex: " + name);
    }
    throw std::invalid_argument("diagram JSON vertex reference must be an index or a name");
  };
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (d.vertices[static_cast<std::size_t>(a)] == d.vertices[static_cast<std::size_t>(b)])
        throw std::invalid_argument("diagram vertices must be distinct");

  d.bonds.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 2));
  for (int v = 0; v < n; ++v) d.bonds[static_cast<std::size_t>(v)][static_cast<std::size_t>(v)] = 1;
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) throw std::invalid_argument("diagram \"edges\" must be an array");
    for (const auto& edge : j["edges"]) {
      if (!edge.is_object() || !edge.contains("a") || !edge.contains("b") || !edge.contains("m"))
        throw std::invalid_argument("diagram edge needs \"a\", \"b\", \"m\"");
      int a = index_of(edge["a"]);
      int b = index_of(edge["b"]);
      if (a == b) throw std::invalid_argument("diagram edge endpoints must differ");
      int m;
      if (edge["m"].is_string() && edge["m"].get<std::string>() == "inf")
        m = CoxeterDiagram::kInfiniteBond;
      else if (edge["m"].is_number_integer() && edge["m"].get<int>() >= 2)
        m = edge["m"].get<int>();
      else
        throw std::invalid_argument("diagram edge label must be an integer >= 2 or \"inf\"");
      d.bonds[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = m;
      d.bonds[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = m;
    }
  }

  d.weights.assign(static_cast<std::size_t>(n), Weight::Q);
  if (j.contains("weights")) {
    if (!j["weights"].is_object())
      throw std::invalid_argument("diagram \"weights\" must be an object");
    for (const auto& [name, value] : j["weights"].items()) {
      int v = index_of(name);
      std::string w = value.is_string() ? value.get<std::string>() : "";
      if (w != "q" && w != "t")
        throw std::invalid_argument("diagram weight must be \"q\" or \"t\"");
      d.weights[static_cast<std::size_t>(v)] = w == "t" ? Weight::T : Weight::Q;
    }
  }
  d.validate();
  return d;
}

CoxeterDiagram diagram_from_spec(const std::string& spec) {
  if (spec.find(':') != std::string::npos) return CoxeterDiagram::from_shorthand(spec);
  std::ifstream in(spec);
  if (!in) throw std::invalid_argument("cannot open diagram file: " + spec);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw std::invalid_argument("bad diagram JSON in " + spec + ": " + e.what());
  }
  return diagram_from_json(j);
}

namespace {

json masks_to_json(const std::vector<std::uint32_t>& masks) {
  json out = json::array();
  for (std::uint32_t mask : masks) {
    json subset = json::array();
    for (int g = 0; mask >> g; ++g)
      if (mask & (1u << g)) subset.push_back(g + 1);
    out.push_back(subset);
  }
  return out;
}

}  // namespace

json complex_to_json(const CochainComplex<BiLaurent>& c) {
  json out;
  out["ring"] = c.ring;
  out["ranks"] = c.ranks;
  out["basis"] = json::array();
  for (const auto& level : c.basis) out["basis"].push_back(masks_to_json(level));
  out["delta"] = json::array();
  for (const auto& m : c.delta) {
    json rows = json::array();
    for (Index i = 0; i < m.rows(); ++i) {
      json row = json::array();
      for (Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
      rows.push_back(row);
    }
    out["delta"].push_back(rows);
  }
  return out;
}

json prediction_to_json(const CohomologyPrediction& pred) {
  json out;
  out["n"] = pred.n;
  out["degrees"] = json::array();
  for (std::size_t deg = 0; deg < pred.by_degree.size(); ++deg) {
    json d;
    d["degree"] = deg;
    d["summands"] = json::array();
    for (const auto& s : pred.by_degree[deg]) d["summands"].push_back({{"m", s.m}, {"i", s.i}});
    out["degrees"].push_back(d);
  }
  return out;
}

json affine_to_json(const AffinePrediction& pred) {
  json out;
  out["n"] = pred.n;
  out["degrees"] = json::array();
  for (std::size_t deg = 0; deg < pred.by_degree.size(); ++deg) {
    json d;
    d["degree"] = deg;
    d["summands"] = json::array();
    for (const auto& s : pred.by_degree[deg]) d["summands"].push_back({{"m", s.m}, {"i", s.i}});
    d["q_free_rank"] = pred.q_free_rank[deg];
    d["q_torsion"] = pred.q_torsion[deg];
    d["betti"] = pred.betti[deg];
    out["degrees"].push_back(d);
  }
  return out;
}

json e1_to_json(const E1Page& page) {
  json out;
  out["n"] = page.n;
  out["entries"] = json::array();
  for (const auto& e : page.entries)
    out["entries"].push_back({{"s", e.s}, {"r", e.r}, {"m", e.ms}});
  out["free"] = json::array();
  for (const auto& [s, r] : page.free_positions) out["free"].push_back({{"s", s}, {"r", r}});
  return out;
}

json presentation_to_json(const ArtinPresentation& p) {
  json out;
  out["generators"] = p.generators;
  out["relations"] = json::array();
  for (const auto& [lhs, rhs] : p.relations)
    out["relations"].push_back({{"lhs", lhs}, {"rhs", rhs}});
  return out;
}

json compare_to_json(const CompareReport& report) {
  json out;
  out["all_match"] = report.all_match;
  out["degrees"] = json::array();
  for (const auto& d : report.degrees)
    out["degrees"].push_back({{"degree", d.degree},
                              {"match", d.match},
                              {"computed", d.computed},
                              {"expected", d.expected}});
  return out;
}

}  // namespace artin
