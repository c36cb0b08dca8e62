#pragma once

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

#include "artin/bilaurent.hpp"
#include "artin/cyclotomic.hpp"

namespace artin {

namespace qanalog_detail {
// The cache instantiation is shared by every function with the same key
// type, so the compute pointer is part of the key.
template <class Key>
BiLaurent cached(const Key& key, BiLaurent (*compute)(const Key&)) {
  using MapKey = std::pair<BiLaurent (*)(const Key&), Key>;
  static std::map<MapKey, BiLaurent> cache;
  static std::mutex mutex;
  MapKey map_key{compute, key};
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(map_key);
    if (it != cache.end()) return it->second;
  }
  BiLaurent value = compute(key);
  std::lock_guard<std::mutex> lock(mutex);
  cache.emplace(map_key, value);
  return value;
}
}  // namespace qanalog_detail

/// [m]_q = 1 + q + ... + q^{m-1}.
inline BiLaurent q_number(long m) {
  if (m < 0) throw std::invalid_argument("q_number: negative index");
  BiLaurent r;
  for (long i = 0; i < m; ++i) r += BiLaurent::q(static_cast<int>(i));
  return r;
}

/// [m]_q! = [1]_q [2]_q ... [m]_q.
inline BiLaurent q_factorial(long m) {
  if (m < 0) throw std::invalid_argument("q_factorial: negative index");
  return qanalog_detail::cached<long>(m, +[](const long& k) {
    BiLaurent r(1);
    for (long i = 1; i <= k; ++i) r *= q_number(i);
    return r;
  });
}

/// Gaussian binomial [m]_q! / ([i]_q! [m-i]_q!), obtained by exact division.
inline BiLaurent q_binomial(long m, long i) {
  if (i < 0 || i > m) return BiLaurent();
  return qanalog_detail::cached<std::pair<long, long>>({m, i}, +[](const std::pair<long, long>& k) {
    auto quo = q_factorial(k.first)
                   .divide_exact(q_factorial(k.second) * q_factorial(k.first - k.second));
    if (!quo) throw std::logic_error("q_binomial: inexact division");
    return *quo;
  });
}

/// [2m]_{q,t} = [m]_q (1 + t q^{m-1}).
inline BiLaurent qt_even_number(long m) {
  if (m < 0) throw std::invalid_argument("qt_even_number: negative index");
  if (m == 0) return BiLaurent();
  return q_number(m) * (BiLaurent(1) + BiLaurent::monomial(Rational(1), static_cast<int>(m) - 1, 1));
}

/// [2m]_{q,t}!! = [2]_{q,t} [4]_{q,t} ... [2m]_{q,t}
///              = [m]_q! * prod_{i=0}^{m-1} (1 + t q^i).
inline BiLaurent qt_double_factorial(long m) {
  if (m < 0) throw std::invalid_argument("qt_double_factorial: negative index");
  return qanalog_detail::cached<long>(m, +[](const long& k) {
    BiLaurent r(1);
    for (long i = 1; i <= k; ++i) r *= qt_even_number(i);
    return r;
  });
}

/// Modified (q,t)-binomial [2m]_{q,t}!! / ([2i]_{q,t}!! [m-i]_q!).  Computed
/// both as that exact quotient and as the closed product
/// qbin(m, i) * prod_{j=i}^{m-1} (1 + t q^j); the two routes must agree.
inline BiLaurent qt_binomial_mod(long m, long i) {
  if (i < 0 || i > m) return BiLaurent();
  return qanalog_detail::cached<std::pair<long, long>>({m, i}, +[](const std::pair<long, long>& k) {
    auto [m, i] = k;
    auto quo = qt_double_factorial(m).divide_exact(qt_double_factorial(i) * q_factorial(m - i));
    if (!quo) throw std::logic_error("qt_binomial_mod: inexact division");
    BiLaurent prod = q_binomial(m, i);
    for (long j = i; j < m; ++j)
      prod *= BiLaurent(1) + BiLaurent::monomial(Rational(1), static_cast<int>(j), 1);
    if (*quo != prod) throw std::logic_error("qt_binomial_mod: quotient and product routes differ");
    return prod;
  });
}

}  // namespace artin
