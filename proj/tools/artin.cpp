#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "artin/closed_form.hpp"
#include "artin/cohomology.hpp"
#include "artin/coxeter.hpp"
#include "artin/json_io.hpp"
#include "artin/orbit.hpp"
#include "artin/qanalog.hpp"
#include "artin/reps.hpp"
#include "artin/salvetti.hpp"
#include "artin/spectral.hpp"
#include "artin/verify.hpp"

namespace {

using artin::Family;
using nlohmann::json;

bool verbose_output() {
  const char* v = std::getenv("ARTIN_VERBOSE");
  return v != nullptr && std::string(v) != "0" && std::string(v) != "";
}

Family parse_family(const std::string& name) {
  if (name == "A") return Family::A;
  if (name == "B") return Family::B;
  throw std::invalid_argument("family must be A or B, got " + name);
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string summand_str(const artin::ModuleSummand& s) {
  std::string rel = "q^" + std::to_string(s.i) + "*t + 1";
  if (s.i == 0) rel = "t + 1";
  if (s.i == 1) rel = "q*t + 1";
  if (s.m == 1) return "R/(" + rel + ")";
  return "R/(Phi_" + std::to_string(s.m) + "(q), " + rel + ")";
}

void print_summand_rows(const std::vector<std::vector<artin::ModuleSummand>>& by_degree) {
  for (std::size_t i = 0; i < by_degree.size(); ++i) {
    std::cout << "H^" << i << " = ";
    if (by_degree[i].empty()) {
      std::cout << "0\n";
      continue;
    }
    for (std::size_t k = 0; k < by_degree[i].size(); ++k) {
      if (k > 0) std::cout << " + ";
      std::cout << summand_str(by_degree[i][k]);
    }
    std::cout << "\n";
  }
}

template <class K>
void print_cohomology(const std::string& ring, const std::vector<artin::CohomologyGroup<K>>& h,
                      bool as_json, const std::string& var = "t") {
  if (as_json) {
    emit(artin::cohomology_to_json(ring, h, var));
    return;
  }
  std::cout << "ring: " << ring << "\n";
  for (std::size_t k = 0; k < h.size(); ++k)
    std::cout << "H^" << k << " = " << artin::group_str(h[k], var) << "\n";
}

void print_relation_checks(const std::vector<artin::RelationCheck>& checks, bool verbose) {
  for (const auto& c : checks)
    if (verbose || !c.ok)
      std::cout << "  [" << (c.ok ? "ok" : "FAIL") << "] " << c.relation << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted Salvetti complexes and exact Artin group cohomology"};
  app.require_subcommand(1);
  const bool verbose = verbose_output();
  int rc = 0;

  // poincare
  std::string poin_family;
  int poin_rank = 0;
  bool poin_oracle = false;
  bool poin_json = false;
  auto* poin = app.add_subcommand("poincare", "Weighted Poincare polynomial of a Coxeter family");
  poin->add_option("--family", poin_family, "A or B")->required();
  poin->add_option("--rank", poin_rank, "number of generators")->required();
  poin->add_flag("--oracle", poin_oracle, "cross-check against length/flag-sum enumeration");
  poin->add_flag("--json", poin_json, "emit JSON");
  poin->callback([&] {
    Family fam = parse_family(poin_family);
    artin::BiLaurent closed = fam == Family::A ? artin::q_factorial(poin_rank + 1)
                                               : artin::qt_double_factorial(poin_rank);
    bool agrees = true;
    if (poin_oracle) {
      artin::CoxeterDiagram d = fam == Family::A ? artin::CoxeterDiagram::type_a(poin_rank)
                                                 : artin::CoxeterDiagram::type_b(poin_rank);
      agrees = artin::group_poincare_oracle(d) == closed;
      if (!agrees) rc = 1;
    }
    if (poin_json) {
      json out;
      out["family"] = poin_family;
      out["rank"] = poin_rank;
      out["poincare"] = closed.str();
      if (poin_oracle) out["oracle_agrees"] = agrees;
      emit(out);
    } else {
      std::cout << closed.str() << "\n";
      if (poin_oracle)
        std::cout << (agrees ? "oracle agrees" : "oracle MISMATCH") << "\n";
    }
  });

  // complex
  std::string cx_family;
  int cx_rank = 0;
  bool cx_emit = false;
  bool cx_json = false;
  auto* cx = app.add_subcommand("complex", "Weighted Salvetti cochain complex");
  cx->add_option("--family", cx_family, "A or B")->required();
  cx->add_option("--rank", cx_rank, "number of generators")->required();
  cx->add_flag("--emit", cx_emit, "emit the full complex as JSON");
  cx->add_flag("--json", cx_json, "emit JSON");
  cx->callback([&] {
    auto c = artin::build_complex(parse_family(cx_family), cx_rank);
    if (cx_emit || cx_json) {
      emit(artin::complex_to_json(c));
      return;
    }
    std::cout << "ring: " << c.ring << "\nranks:";
    for (long r : c.ranks) std::cout << " " << r;
    std::cout << "\ndelta o delta = 0\n";
  });

  // cohomology
  std::string coh_family;
  int coh_rank = 0;
  std::string coh_at;
  bool coh_json = false;
  auto* coh = app.add_subcommand("cohomology", "Twisted cohomology via a PID specialization");
  coh->add_option("--family", coh_family, "A or B")->required();
  coh->add_option("--rank", coh_rank, "number of generators")->required();
  coh->add_option("--at", coh_at, "specialization: q=-1 | zeta:d | generic-q | t=INT")->required();
  coh->add_flag("--json", coh_json, "emit JSON");
  coh->callback([&] {
    auto c = artin::build_complex(parse_family(coh_family), coh_rank);
    if (coh_at == "q=-1") {
      auto s = artin::specialize_q_minus_one(c);
      print_cohomology(s.ring, artin::complex_cohomology(s), coh_json);
    } else if (coh_at.rfind("zeta:", 0) == 0) {
      long d = std::stol(coh_at.substr(5));
      auto s = artin::specialize_root_of_unity(c, d);
      print_cohomology(s.ring, artin::complex_cohomology(s), coh_json);
    } else if (coh_at == "generic-q") {
      auto s = artin::specialize_generic_q(c);
      print_cohomology(s.ring, artin::complex_cohomology(s), coh_json);
    } else if (coh_at.rfind("t=", 0) == 0) {
      auto s = artin::specialize_t_value(c, artin::Rational(std::stol(coh_at.substr(2))));
      print_cohomology(s.ring, artin::complex_cohomology(s), coh_json, "q");
    } else {
      throw std::invalid_argument("unknown specialization: " + coh_at);
    }
  });

  // predict
  std::string pred_family;
  int pred_n = 0;
  bool pred_json = false;
  auto* pred = app.add_subcommand("predict", "Closed-form cohomology prediction");
  pred->add_option("--family", pred_family, "B or Atilde")->required();
  pred->add_option("--n", pred_n, "rank parameter n")->required();
  pred->add_flag("--json", pred_json, "emit JSON");
  pred->callback([&] {
    if (pred_family == "B") {
      auto p = artin::predict_qt(pred_n);
      if (pred_json)
        emit(artin::prediction_to_json(p));
      else
        print_summand_rows(p.by_degree);
    } else if (pred_family == "Atilde") {
      auto p = artin::predict_affine(pred_n + 1);
      if (pred_json) {
        emit(artin::affine_to_json(p));
        return;
      }
      print_summand_rows(p.by_degree);
      std::cout << "over Q[q^-1, q]:";
      for (std::size_t i = 0; i < p.q_free_rank.size(); ++i) {
        std::cout << " H^" << i << "=";
        std::string part = p.q_free_rank[i] > 0 ? "free^" + std::to_string(p.q_free_rank[i]) : "";
        for (long m : p.q_torsion[i]) part += (part.empty() ? "" : "+") + ("Phi_" + std::to_string(m));
        std::cout << (part.empty() ? "0" : part);
      }
      std::cout << "\nbetti:";
      for (long b : p.betti) std::cout << " " << b;
      std::cout << "\n";
    } else {
      throw std::invalid_argument("family must be B or Atilde, got " + pred_family);
    }
  });

  // verify
  std::string ver_suite;
  int ver_nmax = 0;
  bool ver_json = false;
  auto* ver = app.add_subcommand("verify", "Run a verification suite");
  ver->add_option("--suite", ver_suite, "poincare | shift | theorem-qt | theorem-t | e1 | reps | euler")
      ->required();
  ver->add_option("--n-max", ver_nmax, "largest rank to check (0 = suite default)");
  ver->add_flag("--json", ver_json, "emit JSON");
  ver->callback([&] {
    auto rep = artin::run_suite(ver_suite, ver_nmax);
    if (!rep.all_pass) rc = 1;
    if (ver_json) {
      json out;
      out["suite"] = rep.suite;
      out["n_max"] = rep.n_max;
      out["all_pass"] = rep.all_pass;
      out["total_ms"] = rep.total_ms;
      out["checks"] = json::array();
      for (const auto& c : rep.checks) {
        json jc;
        jc["name"] = c.name;
        jc["pass"] = c.pass;
        jc["ms"] = c.ms;
        if (!c.detail.empty()) jc["detail"] = c.detail;
        out["checks"].push_back(jc);
      }
      emit(out);
      return;
    }
    for (const auto& c : rep.checks) {
      std::cout << "[" << (c.pass ? "ok" : "FAIL") << "] " << c.name;
      if (verbose) std::cout << " (" << c.ms << " ms)";
      if (!c.pass && !c.detail.empty()) std::cout << " - " << c.detail;
      std::cout << "\n";
    }
    std::cout << rep.suite << " n_max=" << rep.n_max << ": "
              << (rep.all_pass ? "all checks pass" : "FAILURES") << "\n";
  });

  // spectral e1
  int sp_n = 0;
  bool sp_json = false;
  auto* sp = app.add_subcommand("spectral", "Spectral sequence data");
  sp->require_subcommand(1);
  auto* sp_e1 = sp->add_subcommand("e1", "First page of the t-filtration spectral sequence");
  sp_e1->add_option("--n", sp_n, "rank of the B_n complex")->required();
  sp_e1->add_flag("--json", sp_json, "emit JSON");
  sp_e1->callback([&] {
    auto page = artin::e1_prediction(sp_n);
    if (sp_json) {
      emit(artin::e1_to_json(page));
      return;
    }
    for (const auto& e : page.entries) {
      std::cout << "(" << e.s << "," << e.r << "):";
      for (long m : e.ms) std::cout << " Phi_" << m;
      std::cout << "\n";
    }
    for (const auto& [s, r] : page.free_positions)
      std::cout << "(" << s << "," << r << "): free\n";
  });

  // reps verify
  int reps_n = 0;
  bool reps_json = false;
  auto* reps = app.add_subcommand("reps", "Burau-type representations");
  reps->require_subcommand(1);
  auto* reps_ver = reps->add_subcommand("verify", "Check defining relations and the equivalence");
  reps_ver->add_option("--n", reps_n, "rank")->required();
  reps_ver->add_flag("--json", reps_json, "emit JSON");
  reps_ver->callback([&] {
    const int n = reps_n;
    auto tym = artin::tym_matrices(n);
    auto a_diag = artin::CoxeterDiagram::type_a(n);
    auto b_diag = artin::CoxeterDiagram::type_b(n);
    struct Group {
      std::string label;
      std::vector<artin::RelationCheck> checks;
    };
    std::vector<Group> groups;
    groups.push_back({"tym", artin::verify_rep_relations(tym, a_diag).checks});
    if (n >= 2) {
      auto induced = artin::induced_matrices(n);
      groups.push_back({"induced", artin::verify_rep_relations(induced, a_diag).checks});
      groups.push_back(
          {"embedded tym", artin::verify_rep_relations(artin::embed_b_generators(tym), b_diag).checks});
      groups.push_back({"embedded induced",
                        artin::verify_rep_relations(artin::embed_b_generators(induced), b_diag).checks});
      if (n >= 3) groups.push_back({"shift", artin::verify_shift_relation(n).checks});
      auto eq = artin::verify_equivalence(n);
      groups.push_back({"equivalence", {{eq.convention, eq.ok}}});
    }
    bool all_ok = true;
    for (const auto& g : groups)
      for (const auto& c : g.checks)
        if (!c.ok) all_ok = false;
    if (!all_ok) rc = 1;
    if (reps_json) {
      json out;
      out["n"] = n;
      out["all_ok"] = all_ok;
      out["checks"] = json::array();
      for (const auto& g : groups)
        for (const auto& c : g.checks)
          out["checks"].push_back({{"group", g.label}, {"relation", c.relation}, {"ok", c.ok}});
      emit(out);
      return;
    }
    for (const auto& g : groups) {
      bool group_ok = true;
      for (const auto& c : g.checks)
        if (!c.ok) group_ok = false;
      std::cout << "[" << (group_ok ? "ok" : "FAIL") << "] " << g.label << " (" << g.checks.size()
                << " relations)\n";
      print_relation_checks(g.checks, verbose);
    }
    std::cout << (all_ok ? "all relations hold" : "FAILURES") << "\n";
  });

  // euler
  std::string eu_family;
  std::string eu_diagram;
  bool eu_json = false;
  auto* eu = app.add_subcommand("euler", "Euler characteristic of the finite-subset complex");
  eu->add_option("--family", eu_family, "diagram shorthand, e.g. Atilde:2");
  eu->add_option("--diagram", eu_diagram, "diagram JSON file");
  eu->add_flag("--json", eu_json, "emit JSON");
  eu->callback([&] {
    if (eu_family.empty() == eu_diagram.empty())
      throw std::invalid_argument("give exactly one of --family and --diagram");
    auto d = artin::diagram_from_spec(eu_family.empty() ? eu_diagram : eu_family);
    auto k = artin::finite_parabolic_subsets(d);
    long chi = artin::euler_characteristic(d);
    if (eu_json) {
      emit(json{{"f_vector", k.f_vector}, {"chi", chi}});
      return;
    }
    std::cout << chi << "\n";
    if (verbose) {
      std::cout << "f-vector:";
      for (long f : k.f_vector) std::cout << " " << f;
      std::cout << "\n";
    }
  });

  // presentation
  std::string pr_family;
  std::string pr_diagram;
  bool pr_json = false;
  auto* pr = app.add_subcommand("presentation", "Artin group presentation of a diagram");
  pr->add_option("--family", pr_family, "diagram shorthand, e.g. B:3");
  pr->add_option("--diagram", pr_diagram, "diagram JSON file");
  pr->add_flag("--json", pr_json, "emit JSON");
  pr->callback([&] {
    if (pr_family.empty() == pr_diagram.empty())
      throw std::invalid_argument("give exactly one of --family and --diagram");
    auto d = artin::diagram_from_spec(pr_family.empty() ? pr_diagram : pr_family);
    auto p = artin::artin_presentation(d);
    if (pr_json) {
      emit(artin::presentation_to_json(p));
      return;
    }
    std::cout << "generators:";
    for (const auto& g : p.generators) std::cout << " " << g;
    std::cout << "\n";
    for (const auto& [lhs, rhs] : p.relations) std::cout << lhs << " = " << rhs << "\n";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
