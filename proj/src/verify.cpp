#include "artin/verify.hpp"

#include <chrono>
#include <functional>
#include <stdexcept>

#include "artin/closed_form.hpp"
#include "artin/cohomology.hpp"
#include "artin/orbit.hpp"
#include "artin/qanalog.hpp"
#include "artin/reps.hpp"
#include "artin/salvetti.hpp"
#include "artin/spectral.hpp"

namespace artin {

namespace {

using Clock = std::chrono::steady_clock;

void run_check(SuiteReport& report, const std::string& name,
               const std::function<bool(std::string&)>& body) {
  CheckResult r;
  r.name = name;
  auto t0 = Clock::now();
  try {
    r.pass = body(r.detail);
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = e.what();
  }
  r.ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  if (!r.pass && r.detail.empty()) r.detail = "mismatch";
  report.checks.push_back(r);
}

BiLaurent at_q_minus_one(const BiLaurent& b) {
  BiLaurent out;
  for (const auto& [key, c] : b.terms()) {
    auto [a, e] = key;
    out += BiLaurent::monomial(a % 2 == 0 ? c : -c, 0, e);
  }
  return out;
}

bool summands_match(const std::vector<ModuleSummand>& actual,
                    std::vector<ModuleSummand> expected) {
  std::vector<ModuleSummand> a = actual;
  std::sort(a.begin(), a.end());
  std::sort(expected.begin(), expected.end());
  return a == expected;
}

std::string mismatch_detail(const CompareReport& rep) {
  for (const auto& d : rep.degrees)
    if (!d.match)
      return "degree " + std::to_string(d.degree) + ": computed " + d.computed + ", expected " +
             d.expected;
  return "";
}

long binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  long out = 1;
  for (long i = 0; i < k; ++i) out = out * (n - i) / (i + 1);
  return out;
}

void suite_poincare(SuiteReport& report, int n_max) {
  for (int n = 1; n <= n_max; ++n)
    run_check(report, "A" + std::to_string(n) + " oracle", [n](std::string&) {
      return group_poincare_oracle(CoxeterDiagram::type_a(n)) == q_factorial(n + 1);
    });
  for (int n = 2; n <= n_max; ++n)
    run_check(report, "B" + std::to_string(n) + " oracle", [n](std::string&) {
      return group_poincare_oracle(CoxeterDiagram::type_b(n)) == qt_double_factorial(n);
    });
}

void suite_shift(SuiteReport& report, int n_max) {
  for (int n = 2; n <= n_max; ++n) {
    run_check(report, "A" + std::to_string(n) + " complex", [n](std::string&) {
      return build_complex(Family::A, n).is_complex();
    });
    run_check(report, "B" + std::to_string(n) + " complex", [n](std::string&) {
      return build_complex(Family::B, n).is_complex();
    });
    for (int s = 0; s <= n - 1; ++s)
      run_check(report,
                "B" + std::to_string(n) + " quotient s=" + std::to_string(s),
                [n, s](std::string&) { return filtration_quotient(n, s).matches_a_complex; });
  }
}

void suite_theorem_qt(SuiteReport& report, int n_max) {
  run_check(report, "statement n=2", [](std::string&) {
    auto p = predict_qt(2);
    return summands_match(p.by_degree[2], {{1, 1}, {2, 0}}) && p.by_degree[1].empty();
  });
  run_check(report, "statement n=3", [](std::string&) {
    auto p = predict_qt(3);
    return summands_match(p.by_degree[3], {{1, 2}, {3, 0}, {3, 1}}) &&
           summands_match(p.by_degree[2], {{2, 2}}) && p.by_degree[1].empty();
  });
  run_check(report, "statement n=4", [](std::string&) {
    auto p = predict_qt(4);
    return summands_match(p.by_degree[4], {{1, 3}, {2, 0}, {4, 0}, {4, 1}, {4, 2}}) &&
           summands_match(p.by_degree[3], {{3, 3}}) &&
           summands_match(p.by_degree[2], {{2, 0}}) && p.by_degree[1].empty();
  });
  for (int n = 2; n <= n_max; ++n) {
    auto complex = build_complex(Family::B, n);
    auto pred = predict_qt(n);
    for (long d = 2; d <= n; ++d)
      run_check(report, "B" + std::to_string(n) + " at zeta_" + std::to_string(d),
                [&complex, &pred, d](std::string& detail) {
                  auto h = complex_cohomology(specialize_root_of_unity(complex, d));
                  auto rep =
                      compare_cohomology(h, specialize_prediction(pred, CyclotomicElement::zeta(d)));
                  detail = mismatch_detail(rep);
                  return rep.all_match;
                });
    run_check(report, "B" + std::to_string(n) + " generic q",
              [&complex, &pred](std::string& detail) {
                auto h = complex_cohomology(specialize_generic_q(complex));
                auto rep = compare_cohomology(
                    h, specialize_prediction(pred, RationalFunction<Rational>::x()));
                detail = mismatch_detail(rep);
                return rep.all_match;
              });
  }
}

void suite_theorem_t(SuiteReport& report, int n_max) {
  for (int n = 2; n <= n_max; ++n)
    run_check(report, "B" + std::to_string(n) + " at q=-1", [n](std::string& detail) {
      auto h = complex_cohomology(specialize_q_minus_one(build_complex(Family::B, n)));
      auto direct = compare_cohomology(h, predict_t(n));
      auto via_qt = compare_cohomology(h, specialize_prediction(predict_qt(n), Rational(-1)));
      detail = mismatch_detail(direct);
      if (detail.empty()) detail = mismatch_detail(via_qt);
      return direct.all_match && via_qt.all_match;
    });
}

void suite_e1(SuiteReport& report, int n_max) {
  for (int n = 2; n <= n_max; ++n) {
    run_check(report, "page n=" + std::to_string(n), [n](std::string& detail) {
      auto rep = verify_e1(n);
      for (const auto& c : rep.checks)
        if (!c.match) {
          detail = "(" + std::to_string(c.s) + "," + std::to_string(c.r) + "): computed " +
                   c.computed + ", expected " + c.expected;
          break;
        }
      return rep.all_match;
    });
    run_check(report, "rank bound n=" + std::to_string(n), [n](std::string&) {
      auto page = e1_prediction(n);
      for (const auto& e : page.entries)
        if (static_cast<long>(e.ms.size()) > binomial(n - e.s - 1, e.r)) return false;
      return true;
    });
  }
  const int d1_rank = 8;
  for (int s = 0; s <= d1_rank - 1; ++s)
    run_check(report, "d1 s=" + std::to_string(s), [s](std::string&) {
      BiLaurent d1 = d1_coefficient(d1_rank, s);
      BiLaurent at_minus_one = at_q_minus_one(d1);
      BiLaurent expected =
          s % 2 == 1 ? BiLaurent() : BiLaurent(1) + BiLaurent::t(1);
      return at_minus_one == expected;
    });
  for (long s = 0; s <= 6; ++s)
    run_check(report, "d2 s=" + std::to_string(s),
              [s](std::string&) { return d2_identity_at_minus_one(s); });
}

void suite_reps(SuiteReport& report, int n_max) {
  const int embed_cap = std::min(n_max, 5);
  for (int n = 2; n <= n_max; ++n)
    run_check(report, "tym braid relations n=" + std::to_string(n), [n](std::string&) {
      return verify_rep_relations(tym_matrices(n), CoxeterDiagram::type_a(n)).all_ok;
    });
  for (int n = 2; n <= embed_cap; ++n) {
    run_check(report, "induced braid relations n=" + std::to_string(n), [n](std::string&) {
      return verify_rep_relations(induced_matrices(n), CoxeterDiagram::type_a(n)).all_ok;
    });
    run_check(report, "embedded tym n=" + std::to_string(n), [n](std::string&) {
      return verify_rep_relations(embed_b_generators(tym_matrices(n)), CoxeterDiagram::type_b(n))
          .all_ok;
    });
    run_check(report, "embedded induced n=" + std::to_string(n), [n](std::string&) {
      return verify_rep_relations(embed_b_generators(induced_matrices(n)),
                                  CoxeterDiagram::type_b(n))
          .all_ok;
    });
    run_check(report, "determinants n=" + std::to_string(n), [n](std::string&) {
      const BiLaurent minus_u = -BiLaurent::q(1);
      for (const auto& g : tym_matrices(n))
        if (!(matrix_determinant(g.mat) == minus_u)) return false;
      for (const auto& g : induced_matrices(n))
        if (!matrix_determinant(g.mat).is_unit()) return false;
      return true;
    });
    if (n >= 3)
      run_check(report, "shift relation n=" + std::to_string(n),
                [n](std::string&) { return verify_shift_relation(n).all_ok; });
    run_check(report, "equivalence n=" + std::to_string(n),
              [n](std::string&) { return verify_equivalence(n).ok; });
  }
}

void suite_euler(SuiteReport& report, int rank_max) {
  run_check(report, "Atilde2 f-vector", [](std::string&) {
    auto k = finite_parabolic_subsets(CoxeterDiagram::affine_a(2));
    return k.f_vector == std::vector<long>{1, 3, 3};
  });
  for (int k = 2; k + 1 <= rank_max; ++k) {
    run_check(report, "chi Atilde" + std::to_string(k), [k](std::string&) {
      return euler_characteristic(CoxeterDiagram::affine_a(k)) == (k % 2 == 0 ? 1 : -1);
    });
    run_check(report, "chi Ctilde" + std::to_string(k), [k](std::string&) {
      return euler_characteristic(CoxeterDiagram::affine_c(k)) == (k % 2 == 0 ? 1 : -1);
    });
  }
  for (int k = 1; k <= 4; ++k)
    run_check(report, "chi A" + std::to_string(k), [k](std::string&) {
      return euler_characteristic(CoxeterDiagram::type_a(k)) == 0;
    });
  for (int k = 2; k <= 4; ++k)
    run_check(report, "chi B" + std::to_string(k), [k](std::string&) {
      return euler_characteristic(CoxeterDiagram::type_b(k)) == 0;
    });
  for (int n = 3; n <= rank_max; ++n)
    run_check(report, "consistency Atilde" + std::to_string(n - 1), [n](std::string& detail) {
      auto pred = predict_affine(n);
      long from_betti = euler_characteristic_from_betti(pred.betti);
      long from_cells = euler_characteristic(CoxeterDiagram::affine_a(n - 1));
      if (from_betti != from_cells)
        detail = "betti sum " + std::to_string(from_betti) + ", cell count " +
                 std::to_string(from_cells);
      return from_betti == from_cells;
    });
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"poincare", "shift", "theorem-qt", "theorem-t", "e1", "reps", "euler"};
}

SuiteReport run_suite(const std::string& suite, int n_max) {
  SuiteReport report;
  report.suite = suite;
  auto t0 = Clock::now();
  if (suite == "poincare") {
    report.n_max = n_max > 0 ? n_max : 4;
    suite_poincare(report, report.n_max);
  } else if (suite == "shift") {
    report.n_max = n_max > 0 ? n_max : 8;
    suite_shift(report, report.n_max);
  } else if (suite == "theorem-qt") {
    report.n_max = n_max > 0 ? n_max : 6;
    suite_theorem_qt(report, report.n_max);
  } else if (suite == "theorem-t") {
    report.n_max = n_max > 0 ? n_max : 8;
    suite_theorem_t(report, report.n_max);
  } else if (suite == "e1") {
    report.n_max = n_max > 0 ? n_max : 6;
    suite_e1(report, report.n_max);
  } else if (suite == "reps") {
    report.n_max = n_max > 0 ? n_max : 6;
    suite_reps(report, report.n_max);
  } else if (suite == "euler") {
    report.n_max = n_max > 0 ? n_max : 7;
    suite_euler(report, report.n_max);
  } else {
    throw std::invalid_argument("unknown suite: " + suite);
  }
  report.total_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  report.all_pass = true;
  for (const auto& c : report.checks)
    if (!c.pass) report.all_pass = false;
  return report;
}

}  // namespace artin
