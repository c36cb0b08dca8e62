#include "artin/closed_form.hpp"

#include <stdexcept>

namespace artin {

namespace {

std::vector<long> divisors(long n) {
  std::vector<long> out;
  for (long d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

}  // namespace

CohomologyPrediction predict_qt(int n) {
  if (n < 1) throw std::invalid_argument("predict_qt: rank must be positive");
  CohomologyPrediction pred;
  pred.n = n;
  pred.by_degree.assign(static_cast<std::size_t>(n) + 1, {});

  auto& top = pred.by_degree[static_cast<std::size_t>(n)];
  for (long d : divisors(n))
    for (long k = 0; k + 2 <= d; ++k) top.push_back({d, k});
  top.push_back({1, n - 1});

  for (long j = 1; n - 2 * j >= 1; ++j) {
    auto& row = pred.by_degree[static_cast<std::size_t>(n - 2 * j)];
    for (long d : divisors(n)) {
      if (d < 2 || d * (j + 1) > n) continue;
      for (long k = 0; k + 2 <= d; ++k) row.push_back({d, k});
    }
  }

  for (long j = 0; n - 2 * j - 1 >= 1; ++j) {
    auto& row = pred.by_degree[static_cast<std::size_t>(n - 2 * j - 1)];
    for (long d = 2; d * (j + 1) <= n; ++d) {
      if (n % d == 0) continue;
      row.push_back({d, n - 1});
    }
  }

  for (auto& row : pred.by_degree) std::sort(row.begin(), row.end());
  return pred;
}

std::vector<CohomologyGroup<Rational>> predict_t(int n) {
  if (n < 1) throw std::invalid_argument("predict_t: rank must be positive");
  std::vector<CohomologyGroup<Rational>> h(static_cast<std::size_t>(n) + 1);
  Poly<Rational> one_plus_t = Poly<Rational>(1) + Poly<Rational>::x();
  for (int k = 1; k < n; ++k) h[static_cast<std::size_t>(k)].torsion = {one_plus_t};
  if (n % 2 == 1)
    h[static_cast<std::size_t>(n)].torsion = {one_plus_t};
  else
    h[static_cast<std::size_t>(n)].torsion = {Poly<Rational>::x() * Poly<Rational>::x() -
                                              Poly<Rational>(1)};
  return h;
}

AffinePrediction predict_affine(int n) {
  if (n < 2) throw std::invalid_argument("predict_affine: rank must be at least 2");
  AffinePrediction pred;
  pred.n = n;
  CohomologyPrediction qt = predict_qt(n);
  auto t = predict_t(n);
  for (int i = 0; i < n; ++i) {
    auto iu = static_cast<std::size_t>(i);
    pred.by_degree.push_back(qt.by_degree[iu + 1]);
    long free = 0;
    std::vector<long> torsion;
    for (const auto& s : pred.by_degree[iu]) {
      if (s.m == 1)
        ++free;
      else
        torsion.push_back(s.m);
    }
    pred.q_free_rank.push_back(free);
    pred.q_torsion.push_back(torsion);
    long b = t[iu + 1].free_rank;
    for (const auto& f : t[iu + 1].torsion) b += f.degree();
    pred.betti.push_back(b);
  }
  return pred;
}

long euler_characteristic_from_betti(const std::vector<long>& betti) {
  long chi = 0;
  long sign = 1;
  for (long b : betti) {
    chi += sign * b;
    sign = -sign;
  }
  return chi;
}

}  // namespace artin
