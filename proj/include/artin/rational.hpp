#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace artin {

/// Arbitrary-precision rational with eager arithmetic.  Every operation
/// evaluates immediately so no gmpxx expression template ever escapes.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}
  Rational(long num, long den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& v) : v_(v) {}

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ + b.v_));
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ - b.v_));
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ * b.v_));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(mpq_class(a.v_ / b.v_));
  }

  Rational inverse() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    return Rational(mpq_class(1 / v_));
  }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  /// Bit length of the larger of numerator and denominator.
  std::size_t height_bits() const {
    std::size_t hn = mpz_sizeinbase(v_.get_num().get_mpz_t(), 2);
    std::size_t hd = mpz_sizeinbase(v_.get_den().get_mpz_t(), 2);
    return hn > hd ? hn : hd;
  }

  std::string str() const { return v_.get_str(); }  // "3" or "-3/2"

  static Rational parse(const std::string& s) {
    mpq_class v;
    if (v.set_str(s, 10) != 0) throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    v.canonicalize();
    return Rational(v);
  }

  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_;
};

inline Rational rational_pow(const Rational& x, long e) {
  if (e < 0) return rational_pow(x.inverse(), -e);
  Rational r(1), base = x;
  for (; e > 0; e >>= 1) {
    if (e & 1) r *= base;
    if (e > 1) base *= base;
  }
  return r;
}

inline std::size_t coeff_height(const Rational& x) { return x.height_bits(); }

}  // namespace artin

namespace Eigen {
template <>
struct NumTraits<artin::Rational> {
  typedef artin::Rational Real;
  typedef artin::Rational NonInteger;
  typedef artin::Rational Nested;
  typedef artin::Rational Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 10,
    MulCost = 20
  };
  static inline artin::Rational epsilon() { return artin::Rational(); }
  static inline artin::Rational dummy_precision() { return artin::Rational(); }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen
