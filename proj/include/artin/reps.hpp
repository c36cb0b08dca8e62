#pragma once

#include <string>
#include <vector>

#include "artin/bilaurent.hpp"
#include "artin/coxeter.hpp"
#include "artin/matrix.hpp"

namespace artin {

/// Generator image in a matrix representation.  Matrices act on column
/// vectors, so a word w = g_1 g_2 ... g_k maps to the product
/// rho(g_1) rho(g_2) ... rho(g_k) in the same order.
struct GeneratorMatrix {
  std::string label;
  Matrix<BiLaurent> mat;
};

/// Tong-Yang-Ma representation of the braid group on n+1 strands: sigma_i is
/// the identity except for the block [[0,1],[u,0]] at rows and columns
/// (i, i+1).  The single variable u occupies the first exponent slot.
std::vector<GeneratorMatrix> tym_matrices(int n);

/// Braid group representation on n+1 strands induced from the rank-one
/// module of its B_n subgroup: sigma_i acts by -q away from the block
/// [[0,-q],[q^-1 t,0]] at (i, i+1), and sigma_n by -q away from
/// [[0,1],[-t,0]] at (n, n+1).
std::vector<GeneratorMatrix> induced_matrices(int n);

/// Substitute u = -q^-2 t into a matrix over Q[u^{+-1}].
Matrix<BiLaurent> substitute_u(const Matrix<BiLaurent>& m);

struct RelationCheck {
  std::string relation;
  bool ok = false;
};

struct RelationReport {
  bool all_ok = false;
  std::vector<RelationCheck> checks;
};

/// Check every Artin relation of the diagram as an exact matrix identity:
/// for each finite bond m(a, b), the alternating products of length m(a, b)
/// starting with either generator must agree.  Infinite bonds impose nothing.
RelationReport verify_rep_relations(const std::vector<GeneratorMatrix>& mats,
                                    const CoxeterDiagram& diagram);

/// Images of the B_n generators under the embedding into the braid group on
/// n+1 strands, epsilon_i -> sigma_i and the last generator -> sigma_n^2,
/// applied to any braid representation given as generator matrices.
std::vector<GeneratorMatrix> embed_b_generators(const std::vector<GeneratorMatrix>& braid);

/// The shift relation for the affine subgroup of B_n: with
/// tau = ebar_n e_{n-1} ... e_1, conjugation satisfies e_i tau = tau e_{i+1}
/// for 1 <= i <= n-2, checked on the embedded B_n images in the induced
/// representation.
RelationReport verify_shift_relation(int n);

/// Equivalence between the induced representation and -q times the
/// Tong-Yang-Ma matrices under u = -q^-2 t, conjugating by a diagonal matrix
/// Diag(1, ..., 1, -q^e).  All four combinations of exponent e = +-1 and
/// conjugation direction are tried; exactly one conjugation map validates
/// (it has two equivalent descriptions, one per exponent sign).
struct EquivalenceReport {
  int n = 0;
  bool ok = false;           // the expected pair of descriptions validates
  std::string convention;    // human-readable summary of the validating map
  std::vector<RelationCheck> combos;
};
EquivalenceReport verify_equivalence(int n);

}  // namespace artin
