#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace artin {

namespace detail {
/// A coefficient rendered as an optional sign plus digits and '/' can be
/// spliced into a term directly; anything else needs parentheses.
inline bool plain_coefficient(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-') ? 1 : 0;
  if (i >= s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])) && s[i] != '/') return false;
  return true;
}

/// One monomial, sign split off so the caller can join with " + " / " - ".
inline std::pair<bool, std::string> format_term(const std::string& coeff, bool plain,
                                                const std::string& var, long exp) {
  std::string power;
  if (exp != 0) power = (exp == 1) ? var : var + "^" + std::to_string(exp);
  if (!plain) {
    std::string body = "(" + coeff + ")";
    return {false, power.empty() ? body : body + "*" + power};
  }
  bool neg = coeff[0] == '-';
  std::string mag = neg ? coeff.substr(1) : coeff;
  std::string body;
  if (power.empty())
    body = mag;
  else
    body = (mag == "1") ? power : mag + "*" + power;
  return {neg, body};
}

inline void append_term(std::string& out, bool neg, const std::string& body) {
  if (out.empty())
    out = neg ? "-" + body : body;
  else
    out += neg ? " - " + body : " + " + body;
}
}  // namespace detail

/// Dense univariate polynomial over a field K.  Coefficients are stored
/// ascending; the representation never keeps trailing zeros.
template <class K>
class Poly {
 public:
  Poly() = default;
  Poly(long c) {
    K k(c);
    if (!k.is_zero()) c_.push_back(std::move(k));
  }
  Poly(const K& c) {
    if (!c.is_zero()) c_.push_back(c);
  }
  explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly x() { return Poly(std::vector<K>{K(0), K(1)}); }
  static Poly monomial(const K& c, std::size_t e) {
    if (c.is_zero()) return Poly();
    std::vector<K> v(e + 1, K(0));
    v[e] = c;
    return Poly(std::move(v));
  }

  long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  bool is_constant() const { return c_.size() <= 1; }

  K coeff(std::size_t i) const { return i < c_.size() ? c_[i] : K(0); }
  const K& leading() const {
    if (c_.empty()) throw std::domain_error("Poly: leading coefficient of zero");
    return c_.back();
  }
  const std::vector<K>& coefficients() const { return c_; }

  Poly operator-() const {
    Poly r = *this;
    for (K& c : r.c_) c = -c;
    return r;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<K> v(std::max(a.c_.size(), b.c_.size()), K(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
    return Poly(std::move(v));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<K> v(a.c_.size() + b.c_.size() - 1, K(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(v));
  }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Long division: a = q*b + r with deg r < deg b.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("Poly: division by zero");
    Poly q, r = a;
    K lead_inv = b.leading().inverse();
    while (!r.is_zero() && r.degree() >= b.degree()) {
      std::size_t shift = static_cast<std::size_t>(r.degree() - b.degree());
      K c = r.leading() * lead_inv;
      q += monomial(c, shift);
      r -= monomial(c, shift) * b;
    }
    return {q, r};
  }
  friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
  friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

  Poly monic() const {
    if (is_zero()) return *this;
    K inv = leading().inverse();
    Poly r = *this;
    for (K& c : r.c_) c *= inv;
    return r;
  }

  /// Monic gcd; each remainder is normalized to keep coefficients tame.
  static Poly gcd(Poly a, Poly b) {
    a = a.monic();
    b = b.monic();
    while (!b.is_zero()) {
      Poly r = (a % b).monic();
      a = std::move(b);
      b = std::move(r);
    }
    return a;
  }

  /// Extended gcd: returns monic g with s*a + t*b = g.
  static Poly extended_gcd(const Poly& a, const Poly& b, Poly* s_out, Poly* t_out) {
    Poly r0 = a, r1 = b;
    Poly s0(1), s1(0), t0(0), t1(1);
    while (!r1.is_zero()) {
      auto [q, r] = divmod(r0, r1);
      r0 = std::move(r1);
      r1 = std::move(r);
      Poly s2 = s0 - q * s1, t2 = t0 - q * t1;
      s0 = std::move(s1);
      s1 = std::move(s2);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    if (!r0.is_zero()) {
      K inv = r0.leading().inverse();
      r0 = r0 * Poly(inv);
      s0 = s0 * Poly(inv);
      t0 = t0 * Poly(inv);
    }
    if (s_out) *s_out = s0;
    if (t_out) *t_out = t0;
    return r0;
  }

  K eval(const K& x) const {
    K r(0);
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
  }

  Poly pow(unsigned long e) const {
    Poly r(1), base = *this;
    for (; e > 0; e >>= 1) {
      if (e & 1) r *= base;
      if (e > 1) base *= base;
    }
    return r;
  }

  /// Ascending-term rendering, e.g. "-1 + t^2".
  std::string str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero()) continue;
      std::string cs = c_[i].str();
      auto [neg, body] =
          detail::format_term(cs, detail::plain_coefficient(cs), var, static_cast<long>(i));
      detail::append_term(out, neg, body);
    }
    return out;
  }

 private:
  std::vector<K> c_;
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
};

template <class K>
std::size_t coeff_height(const Poly<K>& p) {
  std::size_t h = 0;
  for (const K& c : p.coefficients()) h = std::max(h, coeff_height(c));
  return h;
}

}  // namespace artin
