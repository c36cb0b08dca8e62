#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "artin/cohomology.hpp"
#include "artin/laurent_poly.hpp"
#include "artin/rational.hpp"
#include "artin/smith.hpp"

using namespace artin;

using LP = LaurentPoly<Rational>;

namespace {

template <class T>
Matrix<T> identity(Index n) {
  Matrix<T> m(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) m(i, j) = i == j ? T(1) : T(0);
  return m;
}

template <class T>
void check_factorization(const Matrix<T>& a, const SmithResult<T>& r) {
  Matrix<T> uav = r.u * a * r.v;
  CHECK(matrices_equal(uav, r.d));
  Matrix<T> uui = r.u * r.u_inv;
  Matrix<T> vvi = r.v * r.v_inv;
  CHECK(matrices_equal(uui, identity<T>(a.rows())));
  CHECK(matrices_equal(vvi, identity<T>(a.cols())));
  for (Index i = 0; i < r.d.rows(); ++i)
    for (Index j = 0; j < r.d.cols(); ++j)
      if (i != j) CHECK(r.d(i, j).is_zero());
  for (std::size_t k = 0; k + 1 < r.diagonal.size(); ++k) {
    auto [quo, rem] = euclidean_divmod(r.diagonal[k + 1], r.diagonal[k]);
    (void)quo;
    CHECK(rem.is_zero());
  }
}

LP laurent(std::initializer_list<long> coeffs, long shift = 0) {
  std::vector<Rational> c;
  for (long v : coeffs) c.emplace_back(v);
  return LP(Poly<Rational>(std::move(c)), shift);
}

}  // namespace

TEST_CASE("field case reduces to rank") {
  Matrix<Rational> a(2, 3);
  a << Rational(1), Rational(2), Rational(3), Rational(2), Rational(4), Rational(7);
  auto r = smith_normal_form(a);
  CHECK(r.rank == 2);
  CHECK(r.diagonal.size() == 2);
  CHECK(r.nonunit_diagonal.empty());
  check_factorization(a, r);
  CHECK(matrix_rank(a) == 2);

  Matrix<Rational> zero(2, 2);
  zero << Rational(0), Rational(0), Rational(0), Rational(0);
  CHECK(smith_normal_form(zero).rank == 0);
  CHECK(matrix_rank(zero) == 0);
}

TEST_CASE("laurent units are invisible") {
  // x is invertible, so the matrix is unimodular despite the polynomial look
  Matrix<LP> a(2, 2);
  a << LP::x(1), LP(1), LP(0), LP::x(1);
  auto r = smith_normal_form(a);
  CHECK(r.rank == 2);
  CHECK(r.nonunit_diagonal.empty());
  check_factorization(a, r);
}

TEST_CASE("triangular torsion") {
  Matrix<LP> a(2, 2);
  a << laurent({1, 1}), LP(1), LP(0), laurent({1, 1});
  auto r = smith_normal_form(a);
  CHECK(r.rank == 2);
  REQUIRE(r.nonunit_diagonal.size() == 1);
  CHECK(r.nonunit_diagonal[0].ordinary() == Poly<Rational>(std::vector<Rational>{
                                                Rational(1), Rational(2), Rational(1)}));
  check_factorization(a, r);
}

TEST_CASE("divisibility chain on a dense example") {
  Matrix<LP> a(3, 3);
  a << laurent({1, 1}), laurent({1, 1}), LP(0),
       LP(0), laurent({1, 1}), laurent({1, 1}),
       laurent({1, 1}), LP(0), laurent({-1, 1}, -1);
  auto r = smith_normal_form(a);
  check_factorization(a, r);
  CHECK(r.rank == 3);
}

TEST_CASE("random matrices satisfy the contract") {
  std::mt19937 rng(987654u);
  std::uniform_int_distribution<long> coeff(-2, 2);
  std::uniform_int_distribution<long> shift(-1, 1);
  std::uniform_int_distribution<int> dim(1, 4);
  for (int rep = 0; rep < 25; ++rep) {
    Index rows = dim(rng), cols = dim(rng);
    Matrix<LP> a(rows, cols);
    for (Index i = 0; i < rows; ++i)
      for (Index j = 0; j < cols; ++j)
        a(i, j) = laurent({coeff(rng), coeff(rng), coeff(rng)}, shift(rng));
    auto r = smith_normal_form(a);
    check_factorization(a, r);
    CHECK(r.rank <= std::min(rows, cols));
  }
}

TEST_CASE("random rational matrices satisfy the contract") {
  std::mt19937 rng(24680u);
  std::uniform_int_distribution<long> entry(-5, 5);
  std::uniform_int_distribution<int> dim(1, 5);
  for (int rep = 0; rep < 25; ++rep) {
    Index rows = dim(rng), cols = dim(rng);
    Matrix<Rational> a(rows, cols);
    for (Index i = 0; i < rows; ++i)
      for (Index j = 0; j < cols; ++j) a(i, j) = Rational(entry(rng));
    auto r = smith_normal_form(a);
    check_factorization(a, r);
    CHECK(matrix_rank(a) == r.rank);
  }
}

TEST_CASE("cohomology of a two-term complex") {
  CochainComplex<LP> c;
  c.ring = "Q[x^+-1]";
  c.ranks = {1, 1};
  c.basis = {{0u}, {1u}};
  Matrix<LP> d(1, 1);
  d << laurent({1, 1});
  c.delta = {d};

  auto h = complex_cohomology(c);
  REQUIRE(h.size() == 2);
  CHECK(h[0].is_zero());
  CHECK(h[1].free_rank == 0);
  REQUIRE(h[1].torsion.size() == 1);
  CHECK(h[1].torsion[0] == Poly<Rational>(std::vector<Rational>{Rational(1), Rational(1)}));
}

TEST_CASE("cohomology with zero differentials is free") {
  CochainComplex<LP> c;
  c.ring = "Q[x^+-1]";
  c.ranks = {2, 1};
  c.basis = {{0u, 1u}, {2u}};
  Matrix<LP> d(1, 2);
  d << LP(0), LP(0);
  c.delta = {d};

  auto h = complex_cohomology(c);
  CHECK(h[0].free_rank == 2);
  CHECK(h[0].torsion.empty());
  CHECK(h[1].free_rank == 1);
}

TEST_CASE("cohomology rejects non-complexes") {
  CochainComplex<LP> c;
  c.ring = "Q[x^+-1]";
  c.ranks = {1, 1, 1};
  Matrix<LP> d(1, 1);
  d << LP(1);
  c.delta = {d, d};
  CHECK_THROWS_AS(complex_cohomology(c), std::invalid_argument);
}

TEST_CASE("field coefficients give betti numbers") {
  CochainComplex<Rational> c;
  c.ring = "Q";
  c.ranks = {2, 2};
  Matrix<Rational> d(2, 2);
  d << Rational(1), Rational(2), Rational(2), Rational(4);
  c.delta = {d};
  auto betti = complex_free_ranks(c);
  CHECK(betti == std::vector<long>{1, 1});
}
