#pragma once

#include <Eigen/Core>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

#include "artin/poly.hpp"
#include "artin/rational.hpp"

namespace artin {

inline long euler_phi(long n) {
  long r = n;
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      r -= r / p;
      while (n % p == 0) n /= p;
    }
  if (n > 1) r -= r / n;
  return r;
}

/// m-th cyclotomic polynomial, computed as (x^m - 1) / prod_{d|m, d<m} Phi_d
/// by exact division and cached.
inline Poly<Rational> cyclotomic(long m) {
  if (m < 1) throw std::invalid_argument("cyclotomic: index must be positive");
  static std::map<long, Poly<Rational>> cache;
  static std::mutex mutex;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
  }
  Poly<Rational> num = Poly<Rational>::monomial(Rational(1), static_cast<std::size_t>(m)) -
                       Poly<Rational>(1);
  for (long d = 1; d < m; ++d)
    if (m % d == 0) {
      auto [q, r] = Poly<Rational>::divmod(num, cyclotomic(d));
      if (!r.is_zero()) throw std::logic_error("cyclotomic: inexact division");
      num = q;
    }
  std::lock_guard<std::mutex> lock(mutex);
  cache.emplace(m, num);
  return num;
}

/// Element of the cyclotomic field Q(zeta_d), represented by a rational
/// polynomial in zeta_d reduced modulo Phi_d.  Conductor 0 marks a plain
/// rational constant, compatible with every d; binary operations unify
/// conductors and reject genuine mixtures.
class CyclotomicElement {
 public:
  CyclotomicElement() = default;
  CyclotomicElement(long c) : rep_(c) {}
  CyclotomicElement(const Rational& c) : rep_(c) {}
  CyclotomicElement(long d, const Poly<Rational>& rep) : d_(d) {
    if (d < 1) throw std::invalid_argument("CyclotomicElement: conductor must be positive");
    rep_ = rep % cyclotomic(d);
    if (rep_.is_constant()) d_ = 0;
  }

  static CyclotomicElement zeta(long d) { return CyclotomicElement(d, Poly<Rational>::x()); }

  long conductor() const { return d_; }
  const Poly<Rational>& rep() const { return rep_; }
  bool is_zero() const { return rep_.is_zero(); }
  bool is_one() const { return d_ == 0 && rep_.is_one(); }

  CyclotomicElement operator-() const {
    CyclotomicElement r = *this;
    r.rep_ = -r.rep_;
    return r;
  }

  friend CyclotomicElement combine(const CyclotomicElement& a, const CyclotomicElement& b,
                                   Poly<Rational> (*op)(const Poly<Rational>&,
                                                        const Poly<Rational>&)) {
    long d = unify(a.d_, b.d_);
    CyclotomicElement r;
    r.d_ = d;
    r.rep_ = op(a.rep_, b.rep_);
    if (d != 0) {
      r.rep_ = r.rep_ % cyclotomic(d);
      if (r.rep_.is_constant()) r.d_ = 0;
    }
    return r;
  }

  friend CyclotomicElement operator+(const CyclotomicElement& a, const CyclotomicElement& b) {
    return combine(a, b, [](const Poly<Rational>& x, const Poly<Rational>& y) { return x + y; });
  }
  friend CyclotomicElement operator-(const CyclotomicElement& a, const CyclotomicElement& b) {
    return combine(a, b, [](const Poly<Rational>& x, const Poly<Rational>& y) { return x - y; });
  }
  friend CyclotomicElement operator*(const CyclotomicElement& a, const CyclotomicElement& b) {
    return combine(a, b, [](const Poly<Rational>& x, const Poly<Rational>& y) { return x * y; });
  }
  CyclotomicElement& operator+=(const CyclotomicElement& o) { return *this = *this + o; }
  CyclotomicElement& operator-=(const CyclotomicElement& o) { return *this = *this - o; }
  CyclotomicElement& operator*=(const CyclotomicElement& o) { return *this = *this * o; }

  /// Inverse via the extended euclidean algorithm against Phi_d, which is
  /// irreducible, so the gcd with any nonzero reduced representative is 1.
  CyclotomicElement inverse() const {
    if (is_zero()) throw std::domain_error("CyclotomicElement: inverse of zero");
    if (d_ == 0) {
      CyclotomicElement r;
      r.rep_ = Poly<Rational>(rep_.coeff(0).inverse());
      return r;
    }
    Poly<Rational> s, t;
    Poly<Rational> g = Poly<Rational>::extended_gcd(rep_, cyclotomic(d_), &s, &t);
    if (!g.is_one()) throw std::logic_error("CyclotomicElement: reducible modulus");
    return CyclotomicElement(d_, s);
  }

  friend CyclotomicElement operator/(const CyclotomicElement& a, const CyclotomicElement& b) {
    return a * b.inverse();
  }

  friend bool operator==(const CyclotomicElement& a, const CyclotomicElement& b) {
    if (a.d_ != 0 && b.d_ != 0 && a.d_ != b.d_) return false;
    return a.rep_ == b.rep_;
  }
  friend bool operator!=(const CyclotomicElement& a, const CyclotomicElement& b) {
    return !(a == b);
  }

  /// zeta^e with e reduced modulo d, so negative powers need no inversion.
  static CyclotomicElement zeta_power(long d, long e) {
    if (d < 1) throw std::invalid_argument("CyclotomicElement: conductor must be positive");
    long r = ((e % d) + d) % d;
    return CyclotomicElement(d, Poly<Rational>::monomial(Rational(1), static_cast<std::size_t>(r)));
  }

  std::string str() const { return rep_.str("z"); }

 private:
  long d_ = 0;
  Poly<Rational> rep_;

  static long unify(long da, long db) {
    if (da == 0) return db;
    if (db == 0) return da;
    if (da != db)
      throw std::invalid_argument("CyclotomicElement: mixed conductors " + std::to_string(da) +
                                  " and " + std::to_string(db));
    return da;
  }
};

/// Inverse in Q(zeta_d); errors on zero input.
inline CyclotomicElement cyclotomic_field_inverse(const CyclotomicElement& x) {
  return x.inverse();
}

inline std::size_t coeff_height(const CyclotomicElement& x) { return coeff_height(x.rep()); }

}  // namespace artin

namespace Eigen {
template <>
struct NumTraits<artin::CyclotomicElement> {
  typedef artin::CyclotomicElement Real;
  typedef artin::CyclotomicElement NonInteger;
  typedef artin::CyclotomicElement Nested;
  typedef artin::CyclotomicElement Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 20,
    MulCost = 40
  };
  static inline artin::CyclotomicElement epsilon() { return artin::CyclotomicElement(); }
  static inline artin::CyclotomicElement dummy_precision() { return artin::CyclotomicElement(); }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen
