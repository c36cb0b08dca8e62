#pragma once

#include <Eigen/Core>
#include <stdexcept>
#include <string>
#include <utility>

#include "artin/poly.hpp"

namespace artin {

/// Laurent polynomial ring K[x^{±1}] over a field K, stored as an ordinary
/// polynomial times x^shift with a nonzero constant coefficient (zero aside).
/// The ring is euclidean with the ordinary-part degree as size function, and
/// its units are the single monomials c*x^e.
template <class K>
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c) : poly_(c) {}
  LaurentPoly(const K& c) : poly_(c) {}
  LaurentPoly(Poly<K> p, long shift = 0) : poly_(std::move(p)), shift_(shift) { normalize(); }

  static LaurentPoly x(long e = 1) { return LaurentPoly(Poly<K>(1), e); }
  static LaurentPoly monomial(const K& c, long e) { return LaurentPoly(Poly<K>(c), e); }

  bool is_zero() const { return poly_.is_zero(); }
  bool is_one() const { return shift_ == 0 && poly_.is_one(); }
  bool is_unit() const { return !poly_.is_zero() && poly_.degree() == 0; }

  const Poly<K>& ordinary() const { return poly_; }
  long shift() const { return shift_; }
  /// Degree span; the euclidean size function (0 for units).
  long span() const { return poly_.degree(); }

  K coeff(long e) const {
    long i = e - shift_;
    return i < 0 ? K(0) : poly_.coeff(static_cast<std::size_t>(i));
  }

  LaurentPoly operator-() const { return LaurentPoly(-poly_, shift_); }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    long s = std::min(a.shift_, b.shift_);
    return LaurentPoly(raise(a.poly_, a.shift_ - s) + raise(b.poly_, b.shift_ - s), s);
  }
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    return LaurentPoly(a.poly_ * b.poly_, a.shift_ + b.shift_);
  }
  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.shift_ == b.shift_ && a.poly_ == b.poly_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  /// Euclidean division on ordinary parts; shifts are units and absorb into
  /// the quotient.
  static std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw std::domain_error("LaurentPoly: division by zero");
    if (a.is_zero()) return {LaurentPoly(), LaurentPoly()};
    auto [q, r] = Poly<K>::divmod(a.poly_, b.poly_);
    return {LaurentPoly(q, a.shift_ - b.shift_), LaurentPoly(r, a.shift_)};
  }

  std::string str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (long i = 0; i <= poly_.degree(); ++i) {
      K c = poly_.coeff(static_cast<std::size_t>(i));
      if (c.is_zero()) continue;
      std::string cs = c.str();
      auto [neg, body] = detail::format_term(cs, detail::plain_coefficient(cs), var, shift_ + i);
      detail::append_term(out, neg, body);
    }
    return out;
  }

 private:
  Poly<K> poly_;
  long shift_ = 0;

  static Poly<K> raise(const Poly<K>& p, long by) {
    return p * Poly<K>::monomial(K(1), static_cast<std::size_t>(by));
  }

  void normalize() {
    if (poly_.is_zero()) {
      shift_ = 0;
      return;
    }
    std::size_t low = 0;
    while (poly_.coeff(low).is_zero()) ++low;
    if (low > 0) {
      std::vector<K> c(poly_.coefficients().begin() + static_cast<long>(low),
                       poly_.coefficients().end());
      poly_ = Poly<K>(std::move(c));
      shift_ += static_cast<long>(low);
    }
  }
};

// Euclidean interface used by the Smith normal form.

template <class K>
long euclidean_degree(const LaurentPoly<K>& x) {
  return x.span();
}

template <class K>
std::pair<LaurentPoly<K>, LaurentPoly<K>> euclidean_divmod(const LaurentPoly<K>& a,
                                                           const LaurentPoly<K>& b) {
  return LaurentPoly<K>::divmod(a, b);
}

/// x = unit * normal with the normal form monic and supported in degrees
/// >= 0 with a nonzero constant term.
template <class K>
std::pair<LaurentPoly<K>, LaurentPoly<K>> unit_normal(const LaurentPoly<K>& x) {
  if (x.is_zero()) return {LaurentPoly<K>(1), LaurentPoly<K>()};
  K lead = x.ordinary().leading();
  return {LaurentPoly<K>::monomial(lead, x.shift()),
          LaurentPoly<K>(x.ordinary().monic(), 0)};
}

template <class K>
LaurentPoly<K> ring_unit_inverse(const LaurentPoly<K>& u) {
  if (!u.is_unit()) throw std::domain_error("LaurentPoly: not a unit");
  return LaurentPoly<K>::monomial(u.ordinary().leading().inverse(), -u.shift());
}

template <class K>
bool ring_is_unit(const LaurentPoly<K>& x) {
  return x.is_unit();
}

template <class K>
std::size_t coeff_height(const LaurentPoly<K>& x) {
  return coeff_height(x.ordinary());
}

}  // namespace artin

namespace Eigen {
template <class K>
struct NumTraits<artin::LaurentPoly<K>> {
  typedef artin::LaurentPoly<K> Real;
  typedef artin::LaurentPoly<K> NonInteger;
  typedef artin::LaurentPoly<K> Nested;
  typedef artin::LaurentPoly<K> Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 30,
    MulCost = 60
  };
  static inline artin::LaurentPoly<K> epsilon() { return artin::LaurentPoly<K>(); }
  static inline artin::LaurentPoly<K> dummy_precision() { return artin::LaurentPoly<K>(); }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen
