#pragma once

#include <stdexcept>
#include <vector>

#include "artin/laurent_poly.hpp"
#include "artin/salvetti.hpp"
#include "artin/smith.hpp"

namespace artin {

/// Finitely generated module over a PID K[t^{+-1}]: free part plus a chain of
/// monic invariant factors, each dividing the next.
template <class K>
struct CohomologyGroup {
  long free_rank = 0;
  std::vector<Poly<K>> torsion;

  bool is_zero() const { return free_rank == 0 && torsion.empty(); }

  friend bool operator==(const CohomologyGroup& a, const CohomologyGroup& b) {
    return a.free_rank == b.free_rank && a.torsion == b.torsion;
  }
};

/// Cohomology of a complex of free K[t^{+-1}]-modules, one group per degree.
///
/// With u*delta^{k-1}*v in Smith form, the image of delta^{k-1} sits inside
/// its saturation F, a direct summand spanned by the first rank columns of
/// u^{-1}; F lies in ker delta^k because the quotient by the kernel embeds in
/// a free module and is torsion free.  Hence H^k splits as the invariant
/// factor quotients plus a free part of rank
/// ranks[k] - rank delta^k - rank delta^{k-1}.
template <class K>
std::vector<CohomologyGroup<K>> complex_cohomology(const CochainComplex<LaurentPoly<K>>& c) {
  if (!c.is_complex()) throw std::invalid_argument("complex_cohomology: not a complex");
  const int top = c.top_degree();
  std::vector<long> rank_in(top + 1, 0), rank_out(top + 1, 0);
  std::vector<std::vector<Poly<K>>> torsion(top + 1);
  for (int k = 0; k <= top; ++k) {
    if (k >= static_cast<int>(c.delta.size())) continue;
    auto snf = smith_normal_form(c.delta[static_cast<std::size_t>(k)]);
    rank_out[static_cast<std::size_t>(k)] = snf.rank;
    if (k + 1 <= top) {
      rank_in[static_cast<std::size_t>(k + 1)] = snf.rank;
      for (const auto& f : snf.nonunit_diagonal)
        torsion[static_cast<std::size_t>(k + 1)].push_back(f.ordinary());
    }
  }
  std::vector<CohomologyGroup<K>> h(static_cast<std::size_t>(top) + 1);
  for (int k = 0; k <= top; ++k) {
    auto ku = static_cast<std::size_t>(k);
    h[ku].free_rank = c.ranks[ku] - rank_out[ku] - rank_in[ku];
    h[ku].torsion = torsion[ku];
    if (h[ku].free_rank < 0) throw std::logic_error("complex_cohomology: negative free rank");
  }
  return h;
}

/// Betti numbers of a complex over a field.
template <FieldScalar S>
std::vector<long> complex_free_ranks(const CochainComplex<S>& c) {
  if (!c.is_complex()) throw std::invalid_argument("complex_free_ranks: not a complex");
  const int top = c.top_degree();
  std::vector<long> rk(static_cast<std::size_t>(top) + 1, 0);
  for (int k = 0; k < static_cast<int>(c.delta.size()); ++k)
    rk[static_cast<std::size_t>(k)] = matrix_rank(c.delta[static_cast<std::size_t>(k)]);
  std::vector<long> betti(static_cast<std::size_t>(top) + 1, 0);
  for (int k = 0; k <= top; ++k) {
    auto ku = static_cast<std::size_t>(k);
    betti[ku] = c.ranks[ku] - rk[ku] - (k > 0 ? rk[ku - 1] : 0);
    if (betti[ku] < 0) throw std::logic_error("complex_free_ranks: negative rank");
  }
  return betti;
}

}  // namespace artin
