#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "artin/closed_form.hpp"
#include "artin/cohomology.hpp"
#include "artin/coxeter.hpp"
#include "artin/orbit.hpp"
#include "artin/salvetti.hpp"
#include "artin/spectral.hpp"

namespace artin {

/// Diagram schema: {"vertices": [names], "edges": [{"a", "b", "m"}],
/// "weights": {name: "q" | "t"}}.  Edges carry m >= 3 or "inf"; absent pairs
/// mean m = 2, absent weights mean q.
nlohmann::json diagram_to_json(const CoxeterDiagram& d);
CoxeterDiagram diagram_from_json(const nlohmann::json& j);

/// Accepts a family shorthand ("B:3", "Atilde:2") or a path to a JSON file.
CoxeterDiagram diagram_from_spec(const std::string& spec);

nlohmann::json complex_to_json(const CochainComplex<BiLaurent>& c);
nlohmann::json prediction_to_json(const CohomologyPrediction& pred);
nlohmann::json affine_to_json(const AffinePrediction& pred);
nlohmann::json e1_to_json(const E1Page& page);
nlohmann::json presentation_to_json(const ArtinPresentation& p);
nlohmann::json compare_to_json(const CompareReport& report);

template <class K>
nlohmann::json cohomology_to_json(const std::string& ring,
                                  const std::vector<CohomologyGroup<K>>& groups,
                                  const std::string& var = "t") {
  nlohmann::json out;
  out["ring"] = ring;
  out["groups"] = nlohmann::json::array();
  for (std::size_t k = 0; k < groups.size(); ++k) {
    nlohmann::json g;
    g["degree"] = k;
    g["free_rank"] = groups[k].free_rank;
    g["torsion"] = nlohmann::json::array();
    for (const auto& f : groups[k].torsion) g["torsion"].push_back(f.str(var));
    out["groups"].push_back(g);
  }
  return out;
}

}  // namespace artin
