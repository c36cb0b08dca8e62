#pragma once

#include <Eigen/Core>
#include <stdexcept>

namespace artin {

template <class S>
using Matrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

using Eigen::Index;

template <class S>
bool is_zero_matrix(const Matrix<S>& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (!m(i, j).is_zero()) return false;
  return true;
}

template <class S>
bool matrices_equal(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index j = 0; j < a.cols(); ++j)
    for (Index i = 0; i < a.rows(); ++i)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

/// Apply f to every entry, producing a matrix over the result scalar.
template <class To, class From, class F>
Matrix<To> map_entries(const Matrix<From>& m, F&& f) {
  Matrix<To> r(m.rows(), m.cols());
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i) r(i, j) = f(m(i, j));
  return r;
}

/// Determinant by first-column Laplace expansion; fine for the small
/// representation matrices this library handles.
template <class S>
S matrix_determinant(const Matrix<S>& m) {
  const Index n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("matrix_determinant: not square");
  if (n == 0) return S(1);
  if (n == 1) return m(0, 0);
  S det(0);
  for (Index i = 0; i < n; ++i) {
    if (m(i, 0).is_zero()) continue;
    Matrix<S> minor(n - 1, n - 1);
    for (Index r = 0, mr = 0; r < n; ++r) {
      if (r == i) continue;
      for (Index c = 1; c < n; ++c) minor(mr, c - 1) = m(r, c);
      ++mr;
    }
    S term = m(i, 0) * matrix_determinant(minor);
    det = i % 2 == 0 ? det + term : det - term;
  }
  return det;
}

}  // namespace artin
