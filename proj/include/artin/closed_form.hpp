#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "artin/cohomology.hpp"
#include "artin/cyclotomic.hpp"
#include "artin/qanalog.hpp"

namespace artin {

/// Cyclic summand {m}_i = R/(Phi_m(q), q^i t + 1) of the two-variable
/// cohomology of the B_n Artin group, over R = Q[q^{+-1}, t^{+-1}].
/// For m = 1 the first relation drops: {1}_i = R/(q^i t + 1).
struct ModuleSummand {
  long m = 0;
  long i = 0;

  friend bool operator==(const ModuleSummand& a, const ModuleSummand& b) {
    return a.m == b.m && a.i == b.i;
  }
  friend bool operator<(const ModuleSummand& a, const ModuleSummand& b) {
    return a.m != b.m ? a.m < b.m : a.i < b.i;
  }
};

/// Multiset of summands per cohomological degree; the closed formulas in
/// scope have no free part.
struct CohomologyPrediction {
  int n = 0;
  std::vector<std::vector<ModuleSummand>> by_degree;  // index 0..n
};

/// Two-variable cohomology of the B_n Artin group: degree n collects {d}_k
/// for d | n, 0 <= k <= d-2, plus {1}_{n-1}; degree n-2j keeps the divisors
/// with d(j+1) <= n; degree n-2j-1 collects {d}_{n-1} over non-divisors with
/// d(j+1) <= n.
CohomologyPrediction predict_qt(int n);

/// Cohomology of the B_n Artin group over Q[t^{+-1}] (q specialized to -1):
/// H^k = Q[t^{+-1}]/(1+t) for 1 <= k <= n-1, and H^n has the extra factor
/// (1-t) exactly when n is even.
std::vector<CohomologyGroup<Rational>> predict_t(int n);

/// Cohomology of the affine A_{n-1} Artin group, obtained from the B_n
/// formulas by the degree shift i -> i+1.  Over the q-local system the
/// summands are re-read as Q[q^{+-1}]-modules ({1}_k free of rank one,
/// {m}_k killed by Phi_m); over trivial Q coefficients the Betti numbers
/// come from the q = -1 formula.
struct AffinePrediction {
  int n = 0;                                          // rank of the ambient B_n
  std::vector<std::vector<ModuleSummand>> by_degree;  // degrees 0..n-1
  std::vector<long> q_free_rank;                      // per degree, over Q[q^{+-1}]
  std::vector<std::vector<long>> q_torsion;           // per degree: cyclotomic indices m >= 2
  std::vector<long> betti;                            // rational Betti numbers
};
AffinePrediction predict_affine(int n);

/// Alternating sum of the Betti numbers.
long euler_characteristic_from_betti(const std::vector<long>& betti);

template <class K>
K field_pow(const K& base, long e) {
  K b = e < 0 ? base.inverse() : base;
  long k = e < 0 ? -e : e;
  K out(1);
  for (; k > 0; k >>= 1) {
    if (k & 1) out = out * b;
    b = b * b;
  }
  return out;
}

template <class K>
K eval_rational_poly(const Poly<Rational>& p, const K& x) {
  K out(0);
  for (long d = p.degree(); d >= 0; --d) out = out * x + K(p.coeff(static_cast<std::size_t>(d)));
  return out;
}

/// Invariant factor chain of the torsion module with the given root multiset:
/// the k-th factor from the end collects the distinct roots of multiplicity
/// at least k, so each entry divides the next.
template <class K>
std::vector<Poly<K>> invariant_chain_from_roots(const std::vector<K>& roots) {
  std::vector<std::pair<K, long>> mult;
  for (const K& r : roots) {
    bool found = false;
    for (auto& [root, count] : mult)
      if (root == r) {
        ++count;
        found = true;
        break;
      }
    if (!found) mult.emplace_back(r, 1);
  }
  long max_mult = 0;
  for (const auto& [root, count] : mult) max_mult = std::max(max_mult, count);
  std::vector<Poly<K>> chain;
  for (long j = max_mult; j >= 1; --j) {
    Poly<K> f(1);
    for (const auto& [root, count] : mult)
      if (count >= j) f *= Poly<K>::x() - Poly<K>(root);
    chain.push_back(f);
  }
  return chain;
}

/// Expected cohomology of the complex after extending scalars along
/// q -> qbar into the PID K[t^{+-1}].  Universal coefficients gives
/// H^i = pred_i tensor + Tor_1(pred_{i+1}): a summand {m}_k contributes the
/// linear factor t + qbar^{-k} to either term exactly when Phi_m(qbar) = 0,
/// except that {1}_k always survives tensoring and has no Tor.
template <class K>
std::vector<CohomologyGroup<K>> specialize_prediction(const CohomologyPrediction& pred,
                                                      const K& qbar) {
  auto vanishes = [&qbar](long m) {
    return eval_rational_poly(cyclotomic(m), qbar).is_zero();
  };
  auto root_of = [&qbar](long i) { return -field_pow(qbar, -i); };
  std::vector<CohomologyGroup<K>> out(pred.by_degree.size());
  for (std::size_t deg = 0; deg < pred.by_degree.size(); ++deg) {
    std::vector<K> roots;
    for (const auto& s : pred.by_degree[deg])
      if (s.m == 1 || vanishes(s.m)) roots.push_back(root_of(s.i));
    if (deg + 1 < pred.by_degree.size())
      for (const auto& s : pred.by_degree[deg + 1])
        if (s.m >= 2 && vanishes(s.m)) roots.push_back(root_of(s.i));
    out[deg].torsion = invariant_chain_from_roots(roots);
  }
  return out;
}

template <class K>
std::string group_str(const CohomologyGroup<K>& g, const std::string& var = "t") {
  if (g.is_zero()) return "0";
  std::string out;
  auto add = [&out](const std::string& part) {
    if (!out.empty()) out += " + ";
    out += part;
  };
  if (g.free_rank == 1) add("R");
  if (g.free_rank > 1) add("R^" + std::to_string(g.free_rank));
  for (const auto& f : g.torsion) add("R/(" + f.str(var) + ")");
  return out;
}

struct DegreeComparison {
  int degree = 0;
  bool match = false;
  std::string computed, expected;
};

struct CompareReport {
  bool all_match = false;
  std::vector<DegreeComparison> degrees;
};

/// Degreewise comparison: equal free ranks and equal torsion multisets after
/// monic normalization.
template <class K>
CompareReport compare_cohomology(const std::vector<CohomologyGroup<K>>& computed,
                                 const std::vector<CohomologyGroup<K>>& expected) {
  auto key = [](const Poly<K>& f) {
    return std::make_pair(f.degree(), f.str("t"));
  };
  auto normalize = [&key](const CohomologyGroup<K>& g) {
    CohomologyGroup<K> out;
    out.free_rank = g.free_rank;
    for (const auto& f : g.torsion) out.torsion.push_back(f.monic());
    std::sort(out.torsion.begin(), out.torsion.end(),
              [&key](const Poly<K>& a, const Poly<K>& b) { return key(a) < key(b); });
    return out;
  };
  CompareReport report;
  report.all_match = computed.size() == expected.size();
  std::size_t degrees = std::max(computed.size(), expected.size());
  for (std::size_t deg = 0; deg < degrees; ++deg) {
    DegreeComparison cmp;
    cmp.degree = static_cast<int>(deg);
    bool have_c = deg < computed.size(), have_e = deg < expected.size();
    CohomologyGroup<K> c = have_c ? normalize(computed[deg]) : CohomologyGroup<K>{};
    CohomologyGroup<K> e = have_e ? normalize(expected[deg]) : CohomologyGroup<K>{};
    cmp.computed = have_c ? group_str(c) : "absent";
    cmp.expected = have_e ? group_str(e) : "absent";
    cmp.match = have_c && have_e && c == e;
    if (!cmp.match) report.all_match = false;
    report.degrees.push_back(cmp);
  }
  return report;
}

}  // namespace artin
