#include "artin/reps.hpp"

#include <stdexcept>

namespace artin {

namespace {

Matrix<BiLaurent> scaled_identity(int size, const BiLaurent& c) {
  Matrix<BiLaurent> m(size, size);
  m.setConstant(BiLaurent());
  for (Index i = 0; i < size; ++i) m(i, i) = c;
  return m;
}

Matrix<BiLaurent> alternating_product(const Matrix<BiLaurent>& a, const Matrix<BiLaurent>& b,
                                      int length) {
  Matrix<BiLaurent> out = scaled_identity(static_cast<int>(a.rows()), BiLaurent(1));
  for (int k = 0; k < length; ++k) out = out * (k % 2 == 0 ? a : b);
  return out;
}

std::string alternating_word(const std::string& a, const std::string& b, int length) {
  std::string out;
  for (int k = 0; k < length; ++k) {
    if (k) out += " ";
    out += k % 2 == 0 ? a : b;
  }
  return out;
}

}  // namespace

std::vector<GeneratorMatrix> tym_matrices(int n) {
  if (n < 1) throw std::invalid_argument("tym_matrices: rank must be positive");
  const BiLaurent u = BiLaurent::q(1);
  std::vector<GeneratorMatrix> out;
  for (int i = 1; i <= n; ++i) {
    Matrix<BiLaurent> m = scaled_identity(n + 1, BiLaurent(1));
    m(i - 1, i - 1) = BiLaurent();
    m(i, i) = BiLaurent();
    m(i - 1, i) = BiLaurent(1);
    m(i, i - 1) = u;
    out.push_back({"sigma" + std::to_string(i), std::move(m)});
  }
  return out;
}

std::vector<GeneratorMatrix> induced_matrices(int n) {
  if (n < 2) throw std::invalid_argument("induced_matrices: rank must be at least 2");
  const BiLaurent minus_q = -BiLaurent::q(1);
  std::vector<GeneratorMatrix> out;
  for (int i = 1; i < n; ++i) {
    Matrix<BiLaurent> m = scaled_identity(n + 1, minus_q);
    m(i - 1, i - 1) = BiLaurent();
    m(i, i) = BiLaurent();
    m(i - 1, i) = minus_q;
    m(i, i - 1) = BiLaurent::monomial(Rational(1), -1, 1);
    out.push_back({"sigma" + std::to_string(i), std::move(m)});
  }
  Matrix<BiLaurent> last = scaled_identity(n + 1, minus_q);
  last(n - 1, n - 1) = BiLaurent();
  last(n, n) = BiLaurent();
  last(n - 1, n) = BiLaurent(1);
  last(n, n - 1) = -BiLaurent::t(1);
  out.push_back({"sigma" + std::to_string(n), std::move(last)});
  return out;
}

Matrix<BiLaurent> substitute_u(const Matrix<BiLaurent>& m) {
  return map_entries<BiLaurent>(m, [](const BiLaurent& entry) {
    BiLaurent out;
    for (const auto& [key, c] : entry.terms()) {
      auto [a, b] = key;
      if (b != 0) throw std::invalid_argument("substitute_u: input is not one-variable");
      Rational scaled = a % 2 == 0 ? c : -c;
      out += BiLaurent::monomial(scaled, -2 * a, a);
    }
    return out;
  });
}

RelationReport verify_rep_relations(const std::vector<GeneratorMatrix>& mats,
                                    const CoxeterDiagram& diagram) {
  if (static_cast<int>(mats.size()) != diagram.rank())
    throw std::invalid_argument("verify_rep_relations: one matrix per vertex required");
  for (const auto& g : mats)
    if (g.mat.rows() != g.mat.cols() || g.mat.rows() != mats.front().mat.rows())
      throw std::invalid_argument("verify_rep_relations: matrix dimensions disagree");
  RelationReport report;
  report.all_ok = true;
  for (int a = 0; a < diagram.rank(); ++a)
    for (int b = a + 1; b < diagram.rank(); ++b) {
      int m = diagram.bond(a, b);
      if (m == CoxeterDiagram::kInfiniteBond) continue;
      RelationCheck check;
      check.relation = alternating_word(mats[static_cast<std::size_t>(a)].label,
                                        mats[static_cast<std::size_t>(b)].label, m) +
                       " = " +
                       alternating_word(mats[static_cast<std::size_t>(b)].label,
                                        mats[static_cast<std::size_t>(a)].label, m);
      check.ok = matrices_equal(alternating_product(mats[static_cast<std::size_t>(a)].mat,
                                                    mats[static_cast<std::size_t>(b)].mat, m),
                                alternating_product(mats[static_cast<std::size_t>(b)].mat,
                                                    mats[static_cast<std::size_t>(a)].mat, m));
      if (!check.ok) report.all_ok = false;
      report.checks.push_back(check);
    }
  return report;
}

std::vector<GeneratorMatrix> embed_b_generators(const std::vector<GeneratorMatrix>& braid) {
  if (braid.size() < 2)
    throw std::invalid_argument("embed_b_generators: need at least two generators");
  const int n = static_cast<int>(braid.size());
  std::vector<GeneratorMatrix> out;
  for (int i = 1; i < n; ++i)
    out.push_back({"e" + std::to_string(i), braid[static_cast<std::size_t>(i) - 1].mat});
  Matrix<BiLaurent> square =
      braid[static_cast<std::size_t>(n) - 1].mat * braid[static_cast<std::size_t>(n) - 1].mat;
  out.push_back({"ebar", std::move(square)});
  return out;
}

RelationReport verify_shift_relation(int n) {
  if (n < 3) throw std::invalid_argument("verify_shift_relation: rank must be >= 3");
  auto eps = embed_b_generators(induced_matrices(n));
  Matrix<BiLaurent> tau = eps.back().mat;
  for (int i = n - 1; i >= 1; --i) tau = tau * eps[static_cast<std::size_t>(i) - 1].mat;
  RelationReport report;
  report.all_ok = true;
  for (int i = 1; i <= n - 2; ++i) {
    RelationCheck check;
    check.relation = "e" + std::to_string(i) + " tau = tau e" + std::to_string(i + 1);
    Matrix<BiLaurent> lhs = eps[static_cast<std::size_t>(i) - 1].mat * tau;
    Matrix<BiLaurent> rhs = tau * eps[static_cast<std::size_t>(i)].mat;
    check.ok = matrices_equal(lhs, rhs);
    if (!check.ok) report.all_ok = false;
    report.checks.push_back(check);
  }
  return report;
}

EquivalenceReport verify_equivalence(int n) {
  auto ind = induced_matrices(n);
  auto tym = tym_matrices(n);
  const BiLaurent minus_q = -BiLaurent::q(1);

  std::vector<Matrix<BiLaurent>> target;
  for (const auto& g : tym) target.push_back(substitute_u(g.mat) * minus_q);

  auto conjugate = [n](const Matrix<BiLaurent>& m, long exponent, bool inverse_first) {
    // D = Diag(1, ..., 1, -q^exponent); entries pick up d_i^{+-1} d_j^{-+1}
    auto weight = [&](Index i) {
      return i == n ? -BiLaurent::q(static_cast<int>(exponent)) : BiLaurent(1);
    };
    auto weight_inv = [&](Index i) {
      return i == n ? -BiLaurent::q(static_cast<int>(-exponent)) : BiLaurent(1);
    };
    Matrix<BiLaurent> out(m.rows(), m.cols());
    for (Index i = 0; i < m.rows(); ++i)
      for (Index j = 0; j < m.cols(); ++j)
        out(i, j) = inverse_first ? weight_inv(i) * m(i, j) * weight(j)
                                  : weight(i) * m(i, j) * weight_inv(j);
    return out;
  };

  EquivalenceReport report;
  report.n = n;
  std::vector<std::pair<long, bool>> combos = {{1, true}, {1, false}, {-1, true}, {-1, false}};
  std::vector<bool> success;
  for (auto [exponent, inverse_first] : combos) {
    bool ok = true;
    for (std::size_t i = 0; i < ind.size(); ++i)
      if (!matrices_equal(conjugate(ind[i].mat, exponent, inverse_first), target[i])) {
        ok = false;
        break;
      }
    std::string d = exponent == 1 ? "Diag(1,...,1,-q)" : "Diag(1,...,1,-q^-1)";
    std::string dir = inverse_first ? "M -> D^-1 M D" : "M -> D M D^-1";
    report.combos.push_back({d + ", " + dir, ok});
    success.push_back(ok);
  }
  // The two successful rows describe the same conjugation map.
  report.ok = success[0] && !success[1] && !success[2] && success[3];
  if (report.ok) report.convention = "M -> D^-1 M D with D = Diag(1,...,1,-q)";
  return report;
}

}  // namespace artin
