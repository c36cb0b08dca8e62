#pragma once

#include <Eigen/Core>
#include <stdexcept>
#include <string>

#include "artin/poly.hpp"

namespace artin {

/// Field of fractions of K[x] for a field K.  The denominator is kept monic
/// and coprime to the numerator.  Nesting yields iterated function fields,
/// e.g. RationalFunction<RationalFunction<Rational>> models Q(q)(t).
template <class K>
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(long c) : num_(c), den_(1) {}
  RationalFunction(const K& c) : num_(c), den_(1) {}
  RationalFunction(const Poly<K>& p) : num_(p), den_(1) {}
  RationalFunction(const Poly<K>& num, const Poly<K>& den) : num_(num), den_(den) { reduce(); }

  static RationalFunction x() { return RationalFunction(Poly<K>::x()); }

  const Poly<K>& numerator() const { return num_; }
  const Poly<K>& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }

  RationalFunction operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    return a * b.inverse();
  }
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

  RationalFunction inverse() const {
    if (is_zero()) throw std::domain_error("RationalFunction: inverse of zero");
    return RationalFunction(den_, num_);
  }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
    return !(a == b);
  }

  std::string str(const std::string& var) const {
    if (den_.is_one()) return num_.str(var);
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
  }
  /// Used when this field appears as a coefficient of an outer polynomial.
  std::string str() const { return str("q"); }

 private:
  Poly<K> num_, den_;

  void reduce() {
    if (den_.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
    if (num_.is_zero()) {
      den_ = Poly<K>(1);
      return;
    }
    Poly<K> g = Poly<K>::gcd(num_, den_);
    if (!g.is_one()) {
      num_ = num_ / g;
      den_ = den_ / g;
    }
    K lead_inv = den_.leading().inverse();
    if (!den_.leading().is_one()) {
      num_ = num_ * Poly<K>(lead_inv);
      den_ = den_ * Poly<K>(lead_inv);
    }
  }
};

template <class K>
std::size_t coeff_height(const RationalFunction<K>& x) {
  return std::max(coeff_height(x.numerator()), coeff_height(x.denominator()));
}

}  // namespace artin

namespace Eigen {
template <class K>
struct NumTraits<artin::RationalFunction<K>> {
  typedef artin::RationalFunction<K> Real;
  typedef artin::RationalFunction<K> NonInteger;
  typedef artin::RationalFunction<K> Nested;
  typedef artin::RationalFunction<K> Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 16,
    AddCost = 60,
    MulCost = 100
  };
  static inline artin::RationalFunction<K> epsilon() { return artin::RationalFunction<K>(); }
  static inline artin::RationalFunction<K> dummy_precision() {
    return artin::RationalFunction<K>();
  }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen
