#pragma once

#include <Eigen/Core>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "artin/poly.hpp"
#include "artin/rational.hpp"

namespace artin {

/// Element of Q[q^{±1}, t^{±1}].  Terms live in a map keyed by the exponent
/// pair (a, b) for q^a t^b, so iteration is ascending lexicographic, which is
/// also the canonical printing order.
class BiLaurent {
 public:
  using Key = std::pair<int, int>;
  using TermMap = std::map<Key, Rational>;

  BiLaurent() = default;
  BiLaurent(long c) {
    if (c != 0) terms_[{0, 0}] = Rational(c);
  }
  BiLaurent(const Rational& c) {
    if (!c.is_zero()) terms_[{0, 0}] = c;
  }

  static BiLaurent monomial(const Rational& c, int a, int b) {
    BiLaurent r;
    if (!c.is_zero()) r.terms_[{a, b}] = c;
    return r;
  }
  static BiLaurent q(int e = 1) { return monomial(Rational(1), e, 0); }
  static BiLaurent t(int e = 1) { return monomial(Rational(1), 0, e); }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == Key{0, 0} &&
           terms_.begin()->second.is_one();
  }
  /// Units of the Laurent ring are the single-term elements.
  bool is_unit() const { return terms_.size() == 1; }

  const TermMap& terms() const { return terms_; }
  Rational coeff(int a, int b) const {
    auto it = terms_.find({a, b});
    return it == terms_.end() ? Rational(0) : it->second;
  }

  bool t_free() const {
    for (const auto& [k, c] : terms_)
      if (k.second != 0) return false;
    return true;
  }
  bool q_free() const {
    for (const auto& [k, c] : terms_)
      if (k.first != 0) return false;
    return true;
  }

  BiLaurent operator-() const {
    BiLaurent r = *this;
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
  }

  BiLaurent& operator+=(const BiLaurent& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  BiLaurent& operator-=(const BiLaurent& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  friend BiLaurent operator+(BiLaurent a, const BiLaurent& b) { return a += b; }
  friend BiLaurent operator-(BiLaurent a, const BiLaurent& b) { return a -= b; }

  friend BiLaurent operator*(const BiLaurent& a, const BiLaurent& b) {
    BiLaurent r;
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_)
        r.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
    return r;
  }
  BiLaurent& operator*=(const BiLaurent& o) { return *this = *this * o; }

  BiLaurent pow(unsigned long e) const {
    BiLaurent r(1), base = *this;
    for (; e > 0; e >>= 1) {
      if (e & 1) r *= base;
      if (e > 1) base *= base;
    }
    return r;
  }

  friend bool operator==(const BiLaurent& a, const BiLaurent& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const BiLaurent& a, const BiLaurent& b) { return !(a == b); }

  Key min_exponents() const {
    if (is_zero()) return {0, 0};
    int a = terms_.begin()->first.first, b = terms_.begin()->first.second;
    for (const auto& [k, c] : terms_) {
      a = std::min(a, k.first);
      b = std::min(b, k.second);
    }
    return {a, b};
  }
  Key max_exponents() const {
    if (is_zero()) return {0, 0};
    int a = terms_.begin()->first.first, b = terms_.begin()->first.second;
    for (const auto& [k, c] : terms_) {
      a = std::max(a, k.first);
      b = std::max(b, k.second);
    }
    return {a, b};
  }

  /// Exact division: returns the quotient when divisor | *this, otherwise
  /// nullopt.  Both operands are shifted into the polynomial quadrant and
  /// divided in lexicographic term order; an indivisible leading term proves
  /// indivisibility because any remainder would itself be a multiple of the
  /// divisor.
  std::optional<BiLaurent> divide_exact(const BiLaurent& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("BiLaurent: division by zero");
    if (is_zero()) return BiLaurent();
    Key sn = min_exponents(), sd = divisor.min_exponents();
    TermMap rem, den;
    for (const auto& [k, c] : terms_) rem[{k.first - sn.first, k.second - sn.second}] = c;
    for (const auto& [k, c] : divisor.terms_) den[{k.first - sd.first, k.second - sd.second}] = c;
    const auto lead_d = *den.rbegin();
    TermMap quot;
    while (!rem.empty()) {
      const auto lead_r = *rem.rbegin();
      int ea = lead_r.first.first - lead_d.first.first;
      int eb = lead_r.first.second - lead_d.first.second;
      if (ea < 0 || eb < 0) return std::nullopt;
      Rational c = lead_r.second / lead_d.second;
      quot[{ea, eb}] = c;
      for (const auto& [k, dc] : den) {
        Key kk{k.first + ea, k.second + eb};
        auto it = rem.find(kk);
        Rational nv = (it == rem.end() ? Rational(0) : it->second) - c * dc;
        if (nv.is_zero()) {
          if (it != rem.end()) rem.erase(it);
        } else {
          rem[kk] = nv;
        }
      }
    }
    BiLaurent result;
    int da = sn.first - sd.first, db = sn.second - sd.second;
    for (const auto& [k, c] : quot) result.terms_[{k.first + da, k.second + db}] = c;
    return result;
  }

  Rational eval(const Rational& q0, const Rational& t0) const {
    Rational r(0);
    for (const auto& [k, c] : terms_)
      r += c * rational_pow(q0, k.first) * rational_pow(t0, k.second);
    return r;
  }

  /// Substitution t -> q, collapsing to a one-variable element.
  BiLaurent subst_t_to_q() const {
    BiLaurent r;
    for (const auto& [k, c] : terms_) r.add_term({k.first + k.second, 0}, c);
    return r;
  }

  /// Lift a rational polynomial p(x) to p(q).
  static BiLaurent from_poly_q(const Poly<Rational>& p) {
    BiLaurent r;
    for (long i = 0; i <= p.degree(); ++i)
      r.add_term({static_cast<int>(i), 0}, p.coeff(static_cast<std::size_t>(i)));
    return r;
  }

  std::string str(const std::string& vq = "q", const std::string& vt = "t") const;
  static BiLaurent parse(const std::string& text, const std::string& vq = "q",
                         const std::string& vt = "t");

 private:
  TermMap terms_;
  void add_term(const Key& k, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
};

inline std::string BiLaurent::str(const std::string& vq, const std::string& vt) const {
  if (is_zero()) return "0";
  std::string out;
  for (const auto& [k, c] : terms_) {
    std::string cs = c.str();
    bool neg = cs[0] == '-';
    std::string mag = neg ? cs.substr(1) : cs;
    std::string power;
    auto var_pow = [](const std::string& v, int e) {
      if (e == 0) return std::string();
      if (e == 1) return v;
      return v + "^" + std::to_string(e);
    };
    std::string pq = var_pow(vq, k.first), pt = var_pow(vt, k.second);
    if (!pq.empty() && !pt.empty())
      power = pq + "*" + pt;
    else
      power = pq + pt;
    std::string body;
    if (power.empty())
      body = mag;
    else
      body = (mag == "1") ? power : mag + "*" + power;
    detail::append_term(out, neg, body);
  }
  return out;
}

inline BiLaurent BiLaurent::parse(const std::string& text, const std::string& vq,
                                  const std::string& vt) {
  BiLaurent result;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto parse_int = [&]() -> long {
    skip_ws();
    std::size_t start = i;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
      throw std::invalid_argument("BiLaurent: expected integer at position " +
                                  std::to_string(start) + " in '" + text + "'");
    return std::stol(text.substr(start, i - start));
  };
  auto try_var = [&](const std::string& v) -> bool {
    if (text.compare(i, v.size(), v) == 0) {
      i += v.size();
      return true;
    }
    return false;
  };

  skip_ws();
  bool any = false;
  while (i < text.size()) {
    int sign = 1;
    skip_ws();
    if (text[i] == '+' || text[i] == '-') {
      if (text[i] == '-') sign = -1;
      ++i;
      skip_ws();
    } else if (any) {
      throw std::invalid_argument("BiLaurent: expected '+' or '-' in '" + text + "'");
    }
    if (i >= text.size()) throw std::invalid_argument("BiLaurent: dangling sign in '" + text + "'");

    Rational coeff(1);
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(text[i]))) {
      long num = parse_int();
      skip_ws();
      if (i < text.size() && text[i] == '/') {
        ++i;
        long den = parse_int();
        coeff = Rational(num, den);
      } else {
        coeff = Rational(num);
      }
      have_coeff = true;
    }
    int ea = 0, eb = 0;
    bool have_var = false;
    for (;;) {
      skip_ws();
      if (have_coeff || have_var) {
        std::size_t save = i;
        if (i < text.size() && text[i] == '*') {
          ++i;
          skip_ws();
        } else if (have_var || have_coeff) {
          // no explicit '*': only allowed before a variable name
        }
        if (!(i < text.size() && (text.compare(i, vq.size(), vq) == 0 ||
                                  text.compare(i, vt.size(), vt) == 0))) {
          i = save;
          break;
        }
      }
      int* slot = nullptr;
      if (try_var(vq))
        slot = &ea;
      else if (try_var(vt))
        slot = &eb;
      else if (!have_coeff && !have_var)
        throw std::invalid_argument("BiLaurent: expected term at position " + std::to_string(i) +
                                    " in '" + text + "'");
      else
        break;
      have_var = true;
      skip_ws();
      long e = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        e = parse_int();
      }
      *slot += static_cast<int>(e);
    }
    result += monomial(sign < 0 ? -coeff : coeff, ea, eb);
    any = true;
    skip_ws();
  }
  if (!any) throw std::invalid_argument("BiLaurent: empty input");
  return result;
}

inline std::size_t coeff_height(const BiLaurent& p) {
  std::size_t h = 0;
  for (const auto& [k, c] : p.terms()) h = std::max(h, coeff_height(c));
  return h;
}

}  // namespace artin

namespace Eigen {
template <>
struct NumTraits<artin::BiLaurent> {
  typedef artin::BiLaurent Real;
  typedef artin::BiLaurent NonInteger;
  typedef artin::BiLaurent Nested;
  typedef artin::BiLaurent Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 20,
    MulCost = 40
  };
  static inline artin::BiLaurent epsilon() { return artin::BiLaurent(); }
  static inline artin::BiLaurent dummy_precision() { return artin::BiLaurent(); }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen
