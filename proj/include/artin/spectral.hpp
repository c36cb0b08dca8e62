#pragma once

#include <string>
#include <utility>
#include <vector>

#include "artin/bilaurent.hpp"

namespace artin {

/// First page of the trailing-ones filtration of the B_n complex.  A torsion
/// entry m at position (s, r) denotes the summand R/Phi_m(q); the two free
/// positions hold a full copy of the coefficient ring.
struct E1Entry {
  int s = 0;
  int r = 0;
  std::vector<long> ms;
};

struct E1Page {
  int n = 0;
  std::vector<E1Entry> entries;                     // nonempty positions, sorted by (s, r)
  std::vector<std::pair<int, int>> free_positions;  // (n-1, 0) and (n, 0)
};

/// Torsion positions of the first page: m >= 2 lands at column s with
/// row r = n-s-2(n-s-1)/m when m divides n-s-1, and r = n-s+1-2(n-s)/m
/// when m divides n-s.
E1Page e1_prediction(int n);

/// Position-by-position comparison of the predicted page against the braid
/// group cohomology computed from the A_{n-s-1} complex over Q[q^{+-1}] by
/// Smith reduction.
struct E1Check {
  int s = 0;
  int r = 0;
  std::string computed, expected;
  bool match = false;
};

struct E1Report {
  int n = 0;
  bool all_match = false;
  std::vector<E1Check> checks;
};

E1Report verify_e1(int n);

/// First-page differential coefficient at column s, read off the complex as
/// the coboundary attaching generator n-s to the final run of s generators.
/// Always equals [s+1]_q (1 + q^s t); throws if the complex disagrees.
BiLaurent d1_coefficient(int n, int s);

/// The second-page coefficient at q = -1: qt_binomial_mod(s+2, s) evaluated
/// at q = -1 is a nonzero rational multiple of (1+t)(1-t).
bool d2_identity_at_minus_one(long s);

}  // namespace artin
