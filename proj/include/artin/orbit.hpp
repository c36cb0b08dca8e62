#pragma once

#include <string>
#include <utility>
#include <vector>

#include "artin/coxeter.hpp"

namespace artin {

/// Generator subsets spanning finite parabolic subgroups, the cell index of
/// the orbit-space CW model: one |J|-cell per subset J, the empty set giving
/// the base vertex.  Downward closed by construction.
struct FiniteSubsetComplex {
  std::vector<std::vector<int>> subsets;  // 0-based vertex indices, by size then lex
  std::vector<long> f_vector;             // cell counts per dimension, starting at 0
};

/// Enumerates subsets by increasing cardinality, extending only sets whose
/// codimension-one faces are all finite type before running the finite-type
/// classification.
FiniteSubsetComplex finite_parabolic_subsets(const CoxeterDiagram& diagram);

/// Alternating cell count of the orbit-space model, the empty set
/// contributing +1.
long euler_characteristic(const CoxeterDiagram& diagram);

/// Standard Artin presentation read off the diagram: one generator per
/// vertex and, for each finite bond m(a, b), the relation equating the two
/// alternating words of length m(a, b).  Infinite bonds contribute nothing.
struct ArtinPresentation {
  std::vector<std::string> generators;
  std::vector<std::pair<std::string, std::string>> relations;  // lhs = rhs, space-separated
};
ArtinPresentation artin_presentation(const CoxeterDiagram& diagram);

}  // namespace artin
