#include "artin/salvetti.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "artin/qanalog.hpp"

namespace artin {

namespace {

std::vector<int> mask_to_list(std::uint32_t mask, int n) {
  std::vector<int> out;
  for (int i = 1; i <= n; ++i)
    if (mask & (1u << (i - 1))) out.push_back(i);
  return out;
}

/// Basis order: ascending bitstring b_1...b_n, i.e. ascending value of the
/// bit-reversed mask.
std::uint32_t order_key(std::uint32_t mask, int n) {
  std::uint32_t key = 0;
  for (int i = 1; i <= n; ++i)
    if (mask & (1u << (i - 1))) key |= 1u << (n - i);
  return key;
}

std::vector<std::uint32_t> subsets_of_size(int n, int k) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
    if (std::popcount(mask) == k) out.push_back(mask);
  std::sort(out.begin(), out.end(),
            [n](std::uint32_t a, std::uint32_t b) { return order_key(a, n) < order_key(b, n); });
  return out;
}

}  // namespace

CoboundaryStep coboundary_coefficient(Family family, int n, std::uint32_t gamma, int j) {
  if (n < 1 || n > 30) throw std::invalid_argument("coboundary_coefficient: rank out of range");
  if (j < 1 || j > n) throw std::invalid_argument("coboundary_coefficient: generator out of range");
  if (gamma >> n) throw std::invalid_argument("coboundary_coefficient: mask out of range");
  if (gamma & (1u << (j - 1)))
    throw std::invalid_argument("coboundary_coefficient: generator already present");

  const std::uint32_t enlarged = gamma | (1u << (j - 1));
  // connected run of consecutive generators containing j inside enlarged
  int lo = j, hi = j;
  while (lo > 1 && (enlarged & (1u << (lo - 2)))) --lo;
  while (hi < n && (enlarged & (1u << hi))) ++hi;
  const long m = hi - lo + 1;   // run size, j included
  const long i = hi - j;        // elements of the run above j

  BiLaurent coeff = (family == Family::B && hi == n) ? qt_binomial_mod(m, i)
                                                     : q_binomial(m + 1, i + 1);

  // independent route: quotient of parabolic Poincare polynomials
  BiLaurent whole = parabolic_poincare(family, n, mask_to_list(enlarged, n));
  BiLaurent part = parabolic_poincare(family, n, mask_to_list(gamma, n));
  auto quotient = whole.divide_exact(part);
  if (!quotient || *quotient != coeff)
    throw std::logic_error("coboundary_coefficient: closed form disagrees with Poincare quotient");

  CoboundaryStep step;
  step.sign = std::popcount(gamma & ((1u << (j - 1)) - 1)) % 2 == 0 ? 1 : -1;
  step.coeff = coeff;
  return step;
}

CochainComplex<BiLaurent> build_complex(Family family, int n) {
  if (n < 0 || n > 20) throw std::invalid_argument("build_complex: rank out of range");
  CochainComplex<BiLaurent> c;
  c.ring = "Q[q^+-1,t^+-1]";
  for (int k = 0; k <= n; ++k) {
    c.basis.push_back(subsets_of_size(n, k));
    c.ranks.push_back(static_cast<long>(c.basis.back().size()));
  }
  for (int k = 0; k < n; ++k) {
    const auto& cols = c.basis[static_cast<std::size_t>(k)];
    const auto& rows = c.basis[static_cast<std::size_t>(k) + 1];
    Matrix<BiLaurent> delta(static_cast<Index>(rows.size()), static_cast<Index>(cols.size()));
    delta.setConstant(BiLaurent());
    for (std::size_t col = 0; col < cols.size(); ++col) {
      const std::uint32_t gamma = cols[col];
      for (int j = 1; j <= n; ++j) {
        if (gamma & (1u << (j - 1))) continue;
        const std::uint32_t target = gamma | (1u << (j - 1));
        const auto row_it = std::find(rows.begin(), rows.end(), target);
        const Index row = static_cast<Index>(row_it - rows.begin());
        CoboundaryStep step = coboundary_coefficient(family, n, gamma, j);
        delta(row, static_cast<Index>(col)) =
            step.sign > 0 ? step.coeff : -step.coeff;
      }
    }
    c.delta.push_back(std::move(delta));
  }
  if (!c.is_complex()) throw std::logic_error("build_complex: delta o delta != 0");
  return c;
}

int trailing_ones(std::uint32_t mask, int n) {
  int count = 0;
  for (int i = n; i >= 1 && (mask & (1u << (i - 1))); --i) ++count;
  return count;
}

FiltrationQuotient filtration_quotient(int n, int s) {
  if (n < 2) throw std::invalid_argument("filtration_quotient: rank must be >= 2");
  if (s < 0 || s > n - 1)
    throw std::invalid_argument("filtration_quotient: filtration degree out of range");

  CochainComplex<BiLaurent> full = build_complex(Family::B, n);
  FiltrationQuotient out;
  out.n = n;
  out.s = s;
  out.quotient.ring = full.ring;

  // quotient basis: masks with exactly s trailing ones, grouped by degree
  std::vector<std::vector<Index>> positions;  // indices into the full basis
  for (int k = 0; k <= n; ++k) {
    const auto& level = full.basis[static_cast<std::size_t>(k)];
    std::vector<Index> pos;
    std::vector<std::uint32_t> masks;
    for (std::size_t idx = 0; idx < level.size(); ++idx)
      if (trailing_ones(level[idx], n) == s) {
        pos.push_back(static_cast<Index>(idx));
        masks.push_back(level[idx]);
      }
    positions.push_back(pos);
    out.quotient.basis.push_back(masks);
    out.quotient.ranks.push_back(static_cast<long>(masks.size()));
  }
  for (int k = 0; k < n; ++k) {
    const auto& rows = positions[static_cast<std::size_t>(k) + 1];
    const auto& cols = positions[static_cast<std::size_t>(k)];
    Matrix<BiLaurent> m(static_cast<Index>(rows.size()), static_cast<Index>(cols.size()));
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t cidx = 0; cidx < cols.size(); ++cidx)
        m(static_cast<Index>(r), static_cast<Index>(cidx)) =
            full.delta[static_cast<std::size_t>(k)](rows[r], cols[cidx]);
    out.quotient.delta.push_back(std::move(m));
  }

  out.a_complex = build_complex(Family::A, n - s - 1);

  // compare: quotient degree k corresponds to A-complex degree k - s
  bool match = true;
  for (int k = 0; k <= n && match; ++k) {
    long expected = (k - s >= 0 && k - s <= n - s - 1)
                        ? out.a_complex.ranks[static_cast<std::size_t>(k - s)]
                        : 0;
    if (out.quotient.ranks[static_cast<std::size_t>(k)] != expected) match = false;
  }
  if (match)
    for (int k = s; k < n - 1 && match; ++k)
      match = matrices_equal(out.quotient.delta[static_cast<std::size_t>(k)],
                             out.a_complex.delta[static_cast<std::size_t>(k - s)]);
  out.matches_a_complex = match;
  return out;
}

namespace {

template <class S, class F>
CochainComplex<S> specialize_with(const CochainComplex<BiLaurent>& c, const std::string& ring,
                                  F&& map, const char* what) {
  CochainComplex<S> out;
  out.ring = ring;
  out.ranks = c.ranks;
  out.basis = c.basis;
  for (const auto& d : c.delta) out.delta.push_back(map_entries<S>(d, map));
  if (!out.is_complex())
    throw std::logic_error(std::string(what) + ": specialization broke delta o delta = 0");
  return out;
}

}  // namespace

CochainComplex<LaurentPoly<Rational>> specialize_q_minus_one(const CochainComplex<BiLaurent>& c) {
  auto map = [](const BiLaurent& p) {
    LaurentPoly<Rational> r;
    for (const auto& [k, coeff] : p.terms()) {
      Rational scaled = (k.first % 2 == 0) ? coeff : -coeff;
      r += LaurentPoly<Rational>::monomial(scaled, k.second);
    }
    return r;
  };
  return specialize_with<LaurentPoly<Rational>>(c, "Q[t^+-1]", map, "specialize_q_minus_one");
}

CochainComplex<LaurentPoly<CyclotomicElement>> specialize_root_of_unity(
    const CochainComplex<BiLaurent>& c, long d) {
  if (d < 1) throw std::invalid_argument("specialize_root_of_unity: order must be >= 1");
  auto map = [d](const BiLaurent& p) {
    LaurentPoly<CyclotomicElement> r;
    for (const auto& [k, coeff] : p.terms())
      r += LaurentPoly<CyclotomicElement>::monomial(
          CyclotomicElement(coeff) * CyclotomicElement::zeta_power(d, k.first), k.second);
    return r;
  };
  return specialize_with<LaurentPoly<CyclotomicElement>>(
      c, "Q(zeta_" + std::to_string(d) + ")[t^+-1]", map, "specialize_root_of_unity");
}

CochainComplex<LaurentPoly<RationalFunction<Rational>>> specialize_generic_q(
    const CochainComplex<BiLaurent>& c) {
  using RF = RationalFunction<Rational>;
  auto map = [](const BiLaurent& p) {
    LaurentPoly<RF> r;
    for (const auto& [k, coeff] : p.terms()) {
      RF q_power = RF(Poly<Rational>::monomial(Rational(1),
                                               static_cast<std::size_t>(std::abs(k.first))));
      if (k.first < 0) q_power = q_power.inverse();
      r += LaurentPoly<RF>::monomial(RF(coeff) * q_power, k.second);
    }
    return r;
  };
  return specialize_with<LaurentPoly<RF>>(c, "Q(q)[t^+-1]", map, "specialize_generic_q");
}

CochainComplex<LaurentPoly<Rational>> specialize_t_value(const CochainComplex<BiLaurent>& c,
                                                         const Rational& t0) {
  if (t0.is_zero()) throw std::invalid_argument("specialize_t_value: t must be nonzero");
  auto map = [&t0](const BiLaurent& p) {
    LaurentPoly<Rational> r;
    for (const auto& [k, coeff] : p.terms())
      r += LaurentPoly<Rational>::monomial(coeff * rational_pow(t0, k.second), k.first);
    return r;
  };
  return specialize_with<LaurentPoly<Rational>>(c, "Q[q^+-1]", map, "specialize_t_value");
}

CochainComplex<Rational> specialize_point(const CochainComplex<BiLaurent>& c, const Rational& q0,
                                          const Rational& t0) {
  if (q0.is_zero() || t0.is_zero())
    throw std::invalid_argument("specialize_point: point must avoid the coordinate axes");
  auto map = [&](const BiLaurent& p) { return p.eval(q0, t0); };
  return specialize_with<Rational>(c, "Q", map, "specialize_point");
}

CochainComplex<FractionFieldElem> specialize_fraction_field(const CochainComplex<BiLaurent>& c) {
  using Inner = RationalFunction<Rational>;
  auto map = [](const BiLaurent& p) {
    FractionFieldElem r;
    for (const auto& [k, coeff] : p.terms()) {
      Inner q_power = Inner(Poly<Rational>::monomial(Rational(1),
                                                     static_cast<std::size_t>(std::abs(k.first))));
      if (k.first < 0) q_power = q_power.inverse();
      FractionFieldElem t_power(
          Poly<Inner>::monomial(Inner(1), static_cast<std::size_t>(std::abs(k.second))));
      if (k.second < 0) t_power = t_power.inverse();
      r += FractionFieldElem(Inner(coeff) * q_power) * t_power;
    }
    return r;
  };
  return specialize_with<FractionFieldElem>(c, "Q(q,t)", map, "specialize_fraction_field");
}

}  // namespace artin
