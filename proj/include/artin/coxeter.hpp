#pragma once

#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "artin/bilaurent.hpp"

namespace artin {

enum class Weight { Q, T };
enum class Family { A, B };

/// Weighted Coxeter diagram: vertices, symmetric bond matrix m(i, j) with
/// m(i, i) = 1 and off-diagonal entries >= 2 (kInfiniteBond for infinity),
/// and a weight (q or t) per vertex assigning the local system.
struct CoxeterDiagram {
  static constexpr int kInfiniteBond = std::numeric_limits<int>::max();

  std::vector<std::string> vertices;
  std::vector<std::vector<int>> bonds;
  std::vector<Weight> weights;

  int rank() const { return static_cast<int>(vertices.size()); }
  int bond(int i, int j) const { return bonds[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }

  void validate() const;

  /// Full subdiagram on the given vertex indices (0-based, kept in order).
  CoxeterDiagram induced(const std::vector<int>& subset) const;

  /// Connected components of the underlying graph (edges are bonds >= 3).
  std::vector<std::vector<int>> components() const;

  static CoxeterDiagram type_a(int n);       // path, all weights q
  static CoxeterDiagram type_b(int n);       // path with one 4-bond at the end, last vertex t
  static CoxeterDiagram affine_a(int k);     // (k+1)-cycle, k >= 2
  static CoxeterDiagram affine_c(int k);     // (k+1)-path with 4-bonds at both ends, k >= 2
  /// Shorthand "A:n", "B:n", "Atilde:n", "Ctilde:n".
  static CoxeterDiagram from_shorthand(const std::string& name);
};

struct FiniteTypeResult {
  bool finite = false;
  std::vector<std::string> component_types;  // one name per component when finite
};

/// Matches each connected component against the classification of finite
/// Coxeter diagrams (A, B, D, E6..E8, F4, H3, H4, I2(m)) up to labeled
/// graph isomorphism.
FiniteTypeResult classify_finite_type(const CoxeterDiagram& d);

inline bool is_finite_type(const CoxeterDiagram& d) { return classify_finite_type(d).finite; }

/// Weighted Poincare polynomial of the standard parabolic subgroup on the
/// 1-based generator subset gamma of the A_n or B_n diagram, as a product of
/// q-factorials over type-A runs and a (q,t) double factorial for the run
/// containing the t-weighted end in type B.
BiLaurent parabolic_poincare(Family family, int n, const std::vector<int>& gamma);

struct BudgetError : std::runtime_error {
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

/// Sums q^{l(w) - n(w)} t^{n(w)} over the whole group by breadth-first
/// search on the Cayley graph, where l is Coxeter length and n counts
/// occurrences of t-weighted generators in a reduced word.  Consistency of
/// n(w) across all geodesics is asserted during the walk.  Throws
/// BudgetError if the group has more than max_elements elements.
BiLaurent group_poincare_oracle(const CoxeterDiagram& d, std::size_t max_elements = 10000);

}  // namespace artin
