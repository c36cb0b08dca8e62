#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "artin/bilaurent.hpp"
#include "artin/coxeter.hpp"
#include "artin/cyclotomic.hpp"
#include "artin/laurent_poly.hpp"
#include "artin/matrix.hpp"
#include "artin/rational_function.hpp"

namespace artin {

/// Cochain complex of free modules with explicit coboundary matrices.
/// delta[k] maps degree k to degree k+1 and has shape ranks[k+1] x ranks[k]
/// (coordinate vectors are columns).  basis[k] lists the generator subsets
/// of degree k as bitmasks (bit i-1 for generator i), in the fixed order of
/// ascending bitstring b_1...b_n.
template <class S>
struct CochainComplex {
  std::string ring;
  std::vector<long> ranks;
  std::vector<std::vector<std::uint32_t>> basis;
  std::vector<Matrix<S>> delta;

  int top_degree() const { return static_cast<int>(ranks.size()) - 1; }

  bool is_complex() const {
    for (std::size_t k = 0; k + 1 < delta.size(); ++k) {
      Matrix<S> prod = delta[k + 1] * delta[k];
      if (!is_zero_matrix(prod)) return false;
    }
    return true;
  }
};

/// Sign and coefficient of the generator-insertion step Gamma -> Gamma + {j}
/// in the weighted Salvetti coboundary.  The coefficient is the weighted
/// Poincare quotient W(Gamma + {j}) / W(Gamma), which only involves the
/// connected run of Gamma + {j} containing j; it equals a modified (q,t)-
/// binomial when that run touches the t-weighted end of the B_n diagram and
/// an ordinary Gaussian binomial otherwise.  Both routes are computed and
/// compared.
struct CoboundaryStep {
  int sign;          // (-1)^{number of elements of Gamma below j}
  BiLaurent coeff;   // always the positive quotient
};
CoboundaryStep coboundary_coefficient(Family family, int n, std::uint32_t gamma, int j);

/// Weighted Salvetti cochain complex of the A_n or B_n Artin group over
/// Q[q^{+-1}, t^{+-1}].  Construction re-derives every coefficient from the
/// parabolic Poincare quotient and checks delta o delta = 0 before returning.
CochainComplex<BiLaurent> build_complex(Family family, int n);

/// Number of trailing generators n, n-1, ... present in the mask.
int trailing_ones(std::uint32_t mask, int n);

/// Subcomplex filtration of the B_n complex by the number of trailing ones.
/// The degree-s quotient piece is isomorphic to the A_{n-s-1} complex shifted
/// up by s; the report carries both sides and the entrywise comparison.
struct FiltrationQuotient {
  int n = 0;
  int s = 0;
  CochainComplex<BiLaurent> quotient;       // extracted from the B_n complex
  CochainComplex<BiLaurent> a_complex;      // build_complex(A, n-s-1)
  bool matches_a_complex = false;
};
FiltrationQuotient filtration_quotient(int n, int s);

// Coefficient specializations.  Each reapplies the ring map entrywise,
// keeps ranks and basis, and re-checks delta o delta = 0.

/// q = -1, over Q[t^{+-1}].
CochainComplex<LaurentPoly<Rational>> specialize_q_minus_one(const CochainComplex<BiLaurent>& c);

/// q = zeta_d, over Q(zeta_d)[t^{+-1}].
CochainComplex<LaurentPoly<CyclotomicElement>> specialize_root_of_unity(
    const CochainComplex<BiLaurent>& c, long d);

/// q left generic, over Q(q)[t^{+-1}].
CochainComplex<LaurentPoly<RationalFunction<Rational>>> specialize_generic_q(
    const CochainComplex<BiLaurent>& c);

/// t = t0, over Q[q^{+-1}].
CochainComplex<LaurentPoly<Rational>> specialize_t_value(const CochainComplex<BiLaurent>& c,
                                                         const Rational& t0);

/// (q, t) = (q0, t0) with q0, t0 nonzero rationals, over Q.
CochainComplex<Rational> specialize_point(const CochainComplex<BiLaurent>& c, const Rational& q0,
                                          const Rational& t0);

/// Both variables inverted into the fraction field Q(q, t), realized as the
/// iterated function field Q(q)(t).
using FractionFieldElem = RationalFunction<RationalFunction<Rational>>;
CochainComplex<FractionFieldElem> specialize_fraction_field(const CochainComplex<BiLaurent>& c);

}  // namespace artin
