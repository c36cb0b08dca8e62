#pragma once

#include <concepts>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "artin/matrix.hpp"

namespace artin {

/// Scalars exposing a multiplicative inverse are treated as fields; the
/// euclidean interface below then degenerates to exact division and the
/// Smith algorithm to Gaussian elimination.
template <class T>
concept FieldScalar = requires(const T& x) {
  { x.inverse() } -> std::convertible_to<T>;
};

template <FieldScalar T>
long euclidean_degree(const T&) {
  return 0;
}

template <FieldScalar T>
std::pair<T, T> euclidean_divmod(const T& a, const T& b) {
  return {a * b.inverse(), T(0)};
}

template <FieldScalar T>
std::pair<T, T> unit_normal(const T& x) {
  if (x.is_zero()) return {T(1), T(0)};
  return {x, T(1)};
}

template <FieldScalar T>
T ring_unit_inverse(const T& u) {
  return u.inverse();
}

template <FieldScalar T>
bool ring_is_unit(const T& x) {
  return !x.is_zero();
}

/// Diagonalization result: u * a * v = d with u, v invertible over the ring
/// and the diagonal a divisibility chain of unit-normal entries.
template <class T>
struct SmithResult {
  Matrix<T> d, u, v, u_inv, v_inv;
  long rank = 0;
  std::vector<T> diagonal;           // nonzero diagonal entries, chain order
  std::vector<T> nonunit_diagonal;   // the entries that are not units
};

namespace smith_detail {

template <class T>
struct Workspace {
  Matrix<T>&d, &u, &v, &ui, &vi;

  void row_sub(Index i, Index k, const T& q) {  // row_i -= q * row_k
    for (Index j = 0; j < d.cols(); ++j) d(i, j) -= q * d(k, j);
    for (Index j = 0; j < u.cols(); ++j) u(i, j) -= q * u(k, j);
    for (Index j = 0; j < ui.rows(); ++j) ui(j, k) += q * ui(j, i);
  }
  void col_sub(Index j, Index k, const T& q) {  // col_j -= q * col_k
    for (Index i = 0; i < d.rows(); ++i) d(i, j) -= q * d(i, k);
    for (Index i = 0; i < v.rows(); ++i) v(i, j) -= q * v(i, k);
    for (Index i = 0; i < vi.cols(); ++i) vi(k, i) += q * vi(j, i);
  }
  void row_swap(Index i, Index k) {
    d.row(i).swap(d.row(k));
    u.row(i).swap(u.row(k));
    ui.col(i).swap(ui.col(k));
  }
  void col_swap(Index j, Index k) {
    d.col(j).swap(d.col(k));
    v.col(j).swap(v.col(k));
    vi.row(j).swap(vi.row(k));
  }
  void row_scale(Index i, const T& w, const T& w_inv) {
    for (Index j = 0; j < d.cols(); ++j) d(i, j) = w * d(i, j);
    for (Index j = 0; j < u.cols(); ++j) u(i, j) = w * u(i, j);
    for (Index j = 0; j < ui.rows(); ++j) ui(j, i) = ui(j, i) * w_inv;
  }
  void row_add(Index i, Index k) {  // row_i += row_k
    for (Index j = 0; j < d.cols(); ++j) d(i, j) += d(k, j);
    for (Index j = 0; j < u.cols(); ++j) u(i, j) += u(k, j);
    for (Index j = 0; j < ui.rows(); ++j) ui(j, k) -= ui(j, i);
  }
};

}  // namespace smith_detail

/// Smith normal form over a euclidean domain (or field).  Pivots are chosen
/// by minimal euclidean degree with ties broken by coefficient height.  The
/// transforms and their inverses are accumulated alongside, and the identity
/// u*a*v = d plus the divisibility chain are re-verified before returning.
template <class T>
SmithResult<T> smith_normal_form(const Matrix<T>& a) {
  const Index m = a.rows(), n = a.cols();
  SmithResult<T> res;
  res.d = a;
  res.u = Matrix<T>::Identity(m, m);
  res.u_inv = Matrix<T>::Identity(m, m);
  res.v = Matrix<T>::Identity(n, n);
  res.v_inv = Matrix<T>::Identity(n, n);
  smith_detail::Workspace<T> w{res.d, res.u, res.v, res.u_inv, res.v_inv};
  Matrix<T>& d = res.d;

  const Index steps = std::min(m, n);
  for (Index k = 0; k < steps; ++k) {
    // pivot search over the trailing block
    Index pi = -1, pj = -1;
    long best_deg = 0;
    std::size_t best_h = 0;
    for (Index j = k; j < n; ++j)
      for (Index i = k; i < m; ++i) {
        if (d(i, j).is_zero()) continue;
        long deg = euclidean_degree(d(i, j));
        std::size_t h = coeff_height(d(i, j));
        if (pi < 0 || deg < best_deg || (deg == best_deg && h < best_h)) {
          pi = i;
          pj = j;
          best_deg = deg;
          best_h = h;
        }
      }
    if (pi < 0) break;  // trailing block is zero
    if (pi != k) w.row_swap(pi, k);
    if (pj != k) w.col_swap(pj, k);

    for (bool settled = false; !settled;) {
      // clear column k below the pivot
      bool restart = false;
      for (Index i = k + 1; i < m && !restart; ++i) {
        if (d(i, k).is_zero()) continue;
        auto [q, r] = euclidean_divmod(d(i, k), d(k, k));
        w.row_sub(i, k, q);
        if (!d(i, k).is_zero()) {  // remainder has smaller degree: promote it
          w.row_swap(i, k);
          restart = true;
        }
      }
      if (restart) continue;
      // clear row k right of the pivot
      for (Index j = k + 1; j < n && !restart; ++j) {
        if (d(k, j).is_zero()) continue;
        auto [q, r] = euclidean_divmod(d(k, j), d(k, k));
        w.col_sub(j, k, q);
        if (!d(k, j).is_zero()) {
          w.col_swap(j, k);
          restart = true;
        }
      }
      if (restart) continue;
      // pivot must divide the rest of the block; fold a violating row in
      for (Index j = k + 1; j < n && !restart; ++j)
        for (Index i = k + 1; i < m && !restart; ++i) {
          if (d(i, j).is_zero()) continue;
          auto [q, r] = euclidean_divmod(d(i, j), d(k, k));
          if (!r.is_zero()) {
            w.row_add(k, i);
            restart = true;
          }
        }
      settled = !restart;
    }

    auto [unit, normal] = unit_normal(d(k, k));
    if (!unit.is_one()) w.row_scale(k, ring_unit_inverse(unit), unit);
    if (!(d(k, k) == normal)) throw std::logic_error("smith_normal_form: pivot not unit-normal");
  }

  for (Index k = 0; k < steps; ++k) {
    if (d(k, k).is_zero()) break;
    res.rank += 1;
    res.diagonal.push_back(d(k, k));
    if (!ring_is_unit(d(k, k))) res.nonunit_diagonal.push_back(d(k, k));
  }

  // self-check: transforms, their inverses, and the divisibility chain
  Matrix<T> uav = res.u * a * res.v;
  if (!matrices_equal(uav, res.d)) throw std::logic_error("smith_normal_form: u*a*v != d");
  Matrix<T> uui = res.u * res.u_inv;
  Matrix<T> vvi = res.v * res.v_inv;
  if (!matrices_equal(uui, Matrix<T>(Matrix<T>::Identity(m, m))) ||
      !matrices_equal(vvi, Matrix<T>(Matrix<T>::Identity(n, n))))
    throw std::logic_error("smith_normal_form: transform inverses are wrong");
  for (std::size_t i = 0; i + 1 < res.diagonal.size(); ++i) {
    auto [q, r] = euclidean_divmod(res.diagonal[i + 1], res.diagonal[i]);
    if (!r.is_zero()) throw std::logic_error("smith_normal_form: diagonal is not a chain");
  }
  return res;
}

template <class T>
long matrix_rank(const Matrix<T>& a) {
  return smith_normal_form(a).rank;
}

}  // namespace artin
