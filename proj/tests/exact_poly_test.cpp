#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "artin/bilaurent.hpp"
#include "artin/cyclotomic.hpp"
#include "artin/laurent_poly.hpp"
#include "artin/poly.hpp"
#include "artin/qanalog.hpp"
#include "artin/rational.hpp"
#include "artin/rational_function.hpp"

using namespace artin;

namespace {

using PolyQ = Poly<Rational>;

std::mt19937 rng(20260822);

Rational random_rational() {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
  return Rational(num(rng), den(rng));
}

BiLaurent random_bilaurent() {
  std::uniform_int_distribution<int> nterms(0, 4), expo(-3, 3);
  BiLaurent r;
  int k = nterms(rng);
  for (int i = 0; i < k; ++i) r += BiLaurent::monomial(random_rational(), expo(rng), expo(rng));
  return r;
}

PolyQ random_poly(int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : c) x = random_rational();
  return PolyQ(std::move(c));
}

}  // namespace

TEST_CASE("rational basics") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK((Rational(1, 2) + Rational(1, 3)) == Rational(5, 6));
  CHECK((Rational(1, 2) * Rational(2, 3)) == Rational(1, 3));
  CHECK(Rational(3, 7).inverse() == Rational(7, 3));
  CHECK(Rational(-3, 2).str() == "-3/2");
  CHECK(Rational::parse("-3/2") == Rational(-3, 2));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS((void)(Rational(1) / Rational(0)), std::domain_error);
  CHECK(rational_pow(Rational(2), -3) == Rational(1, 8));
}

TEST_CASE("polynomial arithmetic and division") {
  PolyQ x = PolyQ::x();
  PolyQ p = x * x - PolyQ(1);                 // x^2 - 1
  PolyQ q = x - PolyQ(1);
  auto [quo, rem] = PolyQ::divmod(p, q);
  CHECK(quo == x + PolyQ(1));
  CHECK(rem.is_zero());
  auto [quo2, rem2] = PolyQ::divmod(p, x + PolyQ(2));
  CHECK((quo2 * (x + PolyQ(2)) + rem2) == p);
  CHECK(rem2.degree() < 1);
  CHECK(PolyQ::gcd(p, q) == q.monic());
  CHECK_THROWS_AS(PolyQ::divmod(p, PolyQ()), std::domain_error);
  CHECK(p.str("t") == "-1 + t^2");
  CHECK((x - PolyQ(Rational(1, 2))).str("t") == "-1/2 + t");
}

TEST_CASE("extended gcd is a bezout identity") {
  for (int it = 0; it < 200; ++it) {
    PolyQ a = random_poly(5), b = random_poly(5);
    if (a.is_zero() && b.is_zero()) continue;
    PolyQ s, t;
    PolyQ g = PolyQ::extended_gcd(a, b, &s, &t);
    CHECK((s * a + t * b) == g);
    if (!g.is_zero()) CHECK(g.leading().is_one());
    if (!a.is_zero()) CHECK((a % g).is_zero());
    if (!b.is_zero()) CHECK((b % g).is_zero());
  }
}

TEST_CASE("cyclotomic polynomials") {
  PolyQ x = PolyQ::x();
  CHECK(cyclotomic(1) == x - PolyQ(1));
  CHECK(cyclotomic(2) == x + PolyQ(1));
  CHECK(cyclotomic(3) == x * x + x + PolyQ(1));
  CHECK(cyclotomic(4) == x * x + PolyQ(1));
  CHECK(cyclotomic(6) == x * x - x + PolyQ(1));
  // x^m - 1 = prod over divisors
  for (long m = 1; m <= 30; ++m) {
    PolyQ prod(1);
    for (long d = 1; d <= m; ++d)
      if (m % d == 0) prod *= cyclotomic(d);
    PolyQ target = PolyQ::monomial(Rational(1), static_cast<std::size_t>(m)) - PolyQ(1);
    CHECK(prod == target);
  }
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(12) == 4);
  CHECK(cyclotomic(12).degree() == 4);
}

TEST_CASE("cyclotomic field elements") {
  auto z = CyclotomicElement::zeta(3);
  CHECK((z * z * z) == CyclotomicElement(1));
  CHECK((z * z + z + CyclotomicElement(1)).is_zero());
  CHECK(CyclotomicElement::zeta(1) == CyclotomicElement(1));
  CHECK(CyclotomicElement::zeta(2) == CyclotomicElement(-1));
  CHECK(CyclotomicElement::zeta_power(5, -1) == CyclotomicElement::zeta_power(5, 4));
  CHECK_THROWS_AS(CyclotomicElement(0).inverse(), std::domain_error);
  CHECK_THROWS_AS(CyclotomicElement::zeta(3) + CyclotomicElement::zeta(5),
                  std::invalid_argument);
  CHECK(cyclotomic_field_inverse(z) == z * z);  // zeta^-1 = zeta^2

  std::uniform_int_distribution<long> dd(1, 12);
  int checked = 0;
  while (checked < 1000) {
    long d = dd(rng);
    Poly<Rational> rep = random_poly(static_cast<int>(euler_phi(d)));
    CyclotomicElement e(d, rep);
    if (e.is_zero()) continue;
    CHECK((e * e.inverse()) == CyclotomicElement(1));
    ++checked;
  }
}

TEST_CASE("rational functions form a field") {
  using RF = RationalFunction<Rational>;
  RF q = RF::x();
  RF f = (q * q - RF(1)) / (q - RF(1));
  CHECK(f == q + RF(1));  // reduction happened
  CHECK(f.is_polynomial());
  int checked = 0;
  while (checked < 1000) {
    PolyQ den = random_poly(3);
    if (den.is_zero()) den = PolyQ(1);
    RF a(random_poly(4), den);
    if (a.is_zero()) continue;
    CHECK((a * a.inverse()).is_one());
    ++checked;
  }
  // nesting: Q(q)(t)
  using RF2 = RationalFunction<RF>;
  RF2 t = RF2::x();
  RF2 g = (t * t - RF2(1)) / (t + RF2(1));
  CHECK(g == t - RF2(1));
}

TEST_CASE("laurent polynomials") {
  using LP = LaurentPoly<Rational>;
  LP x = LP::x(), xi = LP::x(-1);
  CHECK((x * xi).is_one());
  LP p = x + LP(1) + xi;  // x^-1 + 1 + x
  CHECK(p.shift() == -1);
  CHECK(p.span() == 2);
  CHECK(p.str("t") == "t^-1 + 1 + t");
  auto [q, r] = LP::divmod(p * p, p);
  CHECK(q == p);
  CHECK(r.is_zero());
  auto [u, nrm] = unit_normal(LP::monomial(Rational(-2), 3) * p);
  CHECK((u * nrm) == LP::monomial(Rational(-2), 3) * p);
  CHECK(nrm.shift() == 0);
  CHECK(nrm.ordinary().leading().is_one());
  CHECK(ring_is_unit(x * x));
  CHECK(!ring_is_unit(p));
  CHECK((ring_unit_inverse(LP::monomial(Rational(2), -5)) *
         LP::monomial(Rational(2), -5)).is_one());
  // euclidean property: remainder span strictly smaller
  for (int it = 0; it < 200; ++it) {
    LP a(random_poly(5), std::uniform_int_distribution<long>(-3, 3)(rng));
    LP b(random_poly(3), std::uniform_int_distribution<long>(-3, 3)(rng));
    if (b.is_zero()) continue;
    auto [qq, rr] = LP::divmod(a, b);
    CHECK((qq * b + rr) == a);
    if (!rr.is_zero()) CHECK(rr.span() < b.span());
  }
}

TEST_CASE("bilaurent ring axioms and no zero divisors") {
  for (int it = 0; it < 1000; ++it) {
    BiLaurent a = random_bilaurent(), b = random_bilaurent(), c = random_bilaurent();
    CHECK(((a + b) + c) == (a + (b + c)));
    CHECK((a + b) == (b + a));
    CHECK(((a * b) * c) == (a * (b * c)));
    CHECK((a * b) == (b * a));
    CHECK((a * (b + c)) == (a * b + a * c));
    if (!a.is_zero() && !b.is_zero()) CHECK(!(a * b).is_zero());
  }
}

TEST_CASE("bilaurent exact division") {
  BiLaurent q = BiLaurent::q(), t = BiLaurent::t();
  BiLaurent p = (BiLaurent(1) + q * t.pow(3)) * (BiLaurent(2) - q.pow(2));
  auto d = p.divide_exact(BiLaurent(1) + q * t.pow(3));
  REQUIRE(d.has_value());
  CHECK(*d == BiLaurent(2) - q.pow(2));
  CHECK(!(BiLaurent(1) + q).divide_exact(BiLaurent(1) + t).has_value());
  // divisor with negative exponents
  auto d2 = (q_number(2) * BiLaurent::monomial(Rational(1), -1, -1))
                .divide_exact(BiLaurent::monomial(Rational(1), -1, -1));
  REQUIRE(d2.has_value());
  CHECK(*d2 == q_number(2));
  CHECK_THROWS_AS(p.divide_exact(BiLaurent()), std::domain_error);
  for (int it = 0; it < 400; ++it) {
    BiLaurent a = random_bilaurent(), b = random_bilaurent();
    if (b.is_zero()) continue;
    auto quo = (a * b).divide_exact(b);
    REQUIRE(quo.has_value());
    CHECK(*quo == a);
  }
}

TEST_CASE("bilaurent parse and print round trip") {
  CHECK(BiLaurent::parse("1 + q*t^-1 - 3*q^2") ==
        BiLaurent(1) + BiLaurent::monomial(Rational(1), 1, -1) -
            BiLaurent::monomial(Rational(3), 2, 0));
  CHECK((BiLaurent(1) + BiLaurent::monomial(Rational(1), 1, -1) -
         BiLaurent::monomial(Rational(3), 2, 0))
            .str() == "1 + q*t^-1 - 3*q^2");
  CHECK(BiLaurent::parse("0").is_zero());
  CHECK(BiLaurent().str() == "0");
  CHECK(BiLaurent::parse("-q") == -BiLaurent::q());
  CHECK(BiLaurent::parse("1/2*q*t") == BiLaurent::monomial(Rational(1, 2), 1, 1));
  CHECK_THROWS_AS(BiLaurent::parse("1 + + q"), std::invalid_argument);
  CHECK_THROWS_AS(BiLaurent::parse("x"), std::invalid_argument);
  for (int it = 0; it < 300; ++it) {
    BiLaurent a = random_bilaurent();
    CHECK(BiLaurent::parse(a.str()) == a);
  }
}

TEST_CASE("q analogs") {
  BiLaurent q = BiLaurent::q();
  CHECK(q_number(0).is_zero());
  CHECK(q_number(3) == BiLaurent(1) + q + q.pow(2));
  CHECK(q_factorial(3) == q_number(1) * q_number(2) * q_number(3));
  CHECK(q_binomial(4, 2) == (BiLaurent(1) + q.pow(2)) * (BiLaurent(1) + q + q.pow(2)));
  // [6]_q = Phi_2 Phi_3 Phi_6 at q
  CHECK(q_number(6) == BiLaurent::from_poly_q(cyclotomic(2)) *
                           BiLaurent::from_poly_q(cyclotomic(3)) *
                           BiLaurent::from_poly_q(cyclotomic(6)));
  for (long m = 1; m <= 30; ++m) {
    BiLaurent prod(1);
    for (long d = 2; d <= m; ++d)
      if (m % d == 0) prod *= BiLaurent::from_poly_q(cyclotomic(d));
    CHECK(q_number(m) == prod);
  }
  // Pascal recurrence and nonnegative integer coefficients
  for (long m = 0; m <= 12; ++m)
    for (long i = 0; i <= m; ++i) {
      BiLaurent lhs = q_binomial(m, i);
      if (m > 0)
        CHECK(lhs == q_binomial(m - 1, i - 1) + q.pow(static_cast<unsigned long>(i)) *
                         q_binomial(m - 1, i));
      for (const auto& [k, c] : lhs.terms()) {
        CHECK(c.is_integer());
        CHECK(c.sign() > 0);
      }
    }
}

TEST_CASE("qt analogs") {
  BiLaurent q = BiLaurent::q(), t = BiLaurent::t();
  CHECK(qt_even_number(1) == BiLaurent(1) + t);
  CHECK(qt_even_number(2) == (BiLaurent(1) + q) * (BiLaurent(1) + q * t));
  CHECK(qt_double_factorial(2) == (BiLaurent(1) + t) * (BiLaurent(1) + q) * (BiLaurent(1) + q * t));
  CHECK(qt_binomial_mod(2, 1) == (BiLaurent(1) + q) * (BiLaurent(1) + q * t));
  CHECK(qt_binomial_mod(2, 0) == (BiLaurent(1) + t) * (BiLaurent(1) + q * t));
  CHECK(qt_binomial_mod(2, 2) == BiLaurent(1));
  // setting t = q recovers one-variable identities: [2m]_{q,t}!! |_{t=q} = [2m]_q!!
  for (long m = 0; m <= 6; ++m) {
    BiLaurent lhs = qt_double_factorial(m).subst_t_to_q();
    BiLaurent rhs(1);
    for (long i = 1; i <= m; ++i) rhs *= q_number(2 * i);
    CHECK(lhs == rhs);
  }
  // the two computation routes inside qt_binomial_mod already cross-check;
  // exercise the full range used elsewhere
  for (long m = 0; m <= 10; ++m)
    for (long i = 0; i <= m; ++i) CHECK_NOTHROW(qt_binomial_mod(m, i));
  CHECK(qt_binomial_mod(3, 5).is_zero());
}

TEST_CASE("bilaurent evaluation and substitution") {
  BiLaurent p = BiLaurent::parse("1 + q*t^-1 - 3*q^2");
  CHECK(p.eval(Rational(2), Rational(1, 2)) == Rational(1) + Rational(4) - Rational(12));
  CHECK(p.subst_t_to_q() == BiLaurent::parse("2 - 3*q^2"));
  CHECK(p.t_free() == false);
  CHECK(q_number(4).t_free());
  CHECK((BiLaurent::t() + BiLaurent(1)).q_free());
}
