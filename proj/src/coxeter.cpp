#include "artin/coxeter.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <tuple>

#include "artin/qanalog.hpp"

namespace artin {

void CoxeterDiagram::validate() const {
  const std::size_t n = vertices.size();
  if (bonds.size() != n || weights.size() != n)
    throw std::invalid_argument("CoxeterDiagram: inconsistent sizes");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (vertices[i] == vertices[j])
        throw std::invalid_argument("CoxeterDiagram: duplicate vertex name");
  for (std::size_t i = 0; i < n; ++i) {
    if (bonds[i].size() != n) throw std::invalid_argument("CoxeterDiagram: bond matrix not square");
    if (bonds[i][i] != 1) throw std::invalid_argument("CoxeterDiagram: diagonal bond must be 1");
    for (std::size_t j = 0; j < n; ++j) {
      if (bonds[i][j] != bonds[j][i])
        throw std::invalid_argument("CoxeterDiagram: bond matrix not symmetric");
      if (i != j && bonds[i][j] < 2)
        throw std::invalid_argument("CoxeterDiagram: off-diagonal bond must be >= 2");
    }
  }
}

CoxeterDiagram CoxeterDiagram::induced(const std::vector<int>& subset) const {
  CoxeterDiagram r;
  for (int i : subset) {
    if (i < 0 || i >= rank()) throw std::invalid_argument("CoxeterDiagram: vertex out of range");
    r.vertices.push_back(vertices[static_cast<std::size_t>(i)]);
    r.weights.push_back(weights[static_cast<std::size_t>(i)]);
  }
  const std::size_t m = subset.size();
  r.bonds.assign(m, std::vector<int>(m, 2));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) r.bonds[a][b] = bond(subset[a], subset[b]);
  return r;
}

std::vector<std::vector<int>> CoxeterDiagram::components() const {
  const int n = rank();
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    std::vector<int> stack{s}, members;
    comp[static_cast<std::size_t>(s)] = static_cast<int>(out.size());
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (int w = 0; w < n; ++w)
        if (w != v && bond(v, w) >= 3 && comp[static_cast<std::size_t>(w)] < 0) {
          comp[static_cast<std::size_t>(w)] = comp[static_cast<std::size_t>(v)];
          stack.push_back(w);
        }
    }
    std::sort(members.begin(), members.end());
    out.push_back(members);
  }
  return out;
}

namespace {

CoxeterDiagram path_diagram(const std::vector<int>& edge_labels, const std::string& prefix) {
  CoxeterDiagram d;
  const int n = static_cast<int>(edge_labels.size()) + 1;
  for (int i = 1; i <= n; ++i) d.vertices.push_back(prefix + std::to_string(i));
  d.weights.assign(static_cast<std::size_t>(n), Weight::Q);
  d.bonds.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 2));
  for (int i = 0; i < n; ++i) d.bonds[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  for (int i = 0; i + 1 < n; ++i) {
    d.bonds[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + 1)] = edge_labels[static_cast<std::size_t>(i)];
    d.bonds[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(i)] = edge_labels[static_cast<std::size_t>(i)];
  }
  return d;
}

/// Fork vertex with simple-bond arms of the given lengths.
CoxeterDiagram fork_diagram(const std::vector<int>& arms) {
  CoxeterDiagram d;
  int n = 1;
  for (int a : arms) n += a;
  for (int i = 1; i <= n; ++i) d.vertices.push_back("s" + std::to_string(i));
  d.weights.assign(static_cast<std::size_t>(n), Weight::Q);
  d.bonds.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 2));
  for (int i = 0; i < n; ++i) d.bonds[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  int next = 1;
  auto connect = [&d](int a, int b) {
    d.bonds[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 3;
    d.bonds[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = 3;
  };
  for (int a : arms) {
    int prev = 0;
    for (int j = 0; j < a; ++j) {
      connect(prev, next);
      prev = next++;
    }
  }
  return d;
}

}  // namespace

CoxeterDiagram CoxeterDiagram::type_a(int n) {
  if (n < 1) throw std::invalid_argument("type_a: rank must be >= 1");
  return path_diagram(std::vector<int>(static_cast<std::size_t>(n - 1), 3), "s");
}

CoxeterDiagram CoxeterDiagram::type_b(int n) {
  if (n < 1) throw std::invalid_argument("type_b: rank must be >= 1");
  std::vector<int> labels(static_cast<std::size_t>(n - 1), 3);
  if (n >= 2) labels.back() = 4;
  CoxeterDiagram d = path_diagram(labels, "s");
  d.weights.back() = Weight::T;
  return d;
}

CoxeterDiagram CoxeterDiagram::affine_a(int k) {
  if (k < 2) throw std::invalid_argument("affine_a: index must be >= 2");
  CoxeterDiagram d = path_diagram(std::vector<int>(static_cast<std::size_t>(k), 3), "s");
  d.bonds[0][static_cast<std::size_t>(k)] = 3;
  d.bonds[static_cast<std::size_t>(k)][0] = 3;
  return d;
}

CoxeterDiagram CoxeterDiagram::affine_c(int k) {
  if (k < 2) throw std::invalid_argument("affine_c: index must be >= 2");
  std::vector<int> labels(static_cast<std::size_t>(k), 3);
  labels.front() = 4;
  labels.back() = 4;
  return path_diagram(labels, "s");
}

CoxeterDiagram CoxeterDiagram::from_shorthand(const std::string& name) {
  auto colon = name.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("diagram shorthand must look like 'A:3': " + name);
  std::string fam = name.substr(0, colon);
  int n;
  try {
    n = std::stoi(name.substr(colon + 1));
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rank in diagram shorthand: " + name);
  }
  if (fam == "A") return type_a(n);
  if (fam == "B") return type_b(n);
  if (fam == "Atilde") return affine_a(n);
  if (fam == "Ctilde") return affine_c(n);
  throw std::invalid_argument("unknown diagram family: " + fam);
}

namespace {

/// Labeled graph isomorphism by backtracking on vertex assignments.
bool labeled_isomorphic(const CoxeterDiagram& a, const CoxeterDiagram& b) {
  const int n = a.rank();
  if (b.rank() != n) return false;
  auto signature = [](const CoxeterDiagram& d, int v) {
    std::vector<int> s;
    for (int w = 0; w < d.rank(); ++w)
      if (w != v && d.bond(v, w) >= 3) s.push_back(d.bond(v, w));
    std::sort(s.begin(), s.end());
    return s;
  };
  std::vector<std::vector<int>> sig_a, sig_b;
  for (int v = 0; v < n; ++v) {
    sig_a.push_back(signature(a, v));
    sig_b.push_back(signature(b, v));
  }
  {
    auto sa = sig_a, sb = sig_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  std::vector<int> image(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::function<bool(int)> place = [&](int v) {
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
      if (used[static_cast<std::size_t>(w)] || sig_a[static_cast<std::size_t>(v)] != sig_b[static_cast<std::size_t>(w)])
        continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u)
        if (a.bond(v, u) != b.bond(w, image[static_cast<std::size_t>(u)])) ok = false;
      if (!ok) continue;
      image[static_cast<std::size_t>(v)] = w;
      used[static_cast<std::size_t>(w)] = true;
      if (place(v + 1)) return true;
      used[static_cast<std::size_t>(w)] = false;
      image[static_cast<std::size_t>(v)] = -1;
    }
    return false;
  };
  return place(0);
}

}  // namespace

FiniteTypeResult classify_finite_type(const CoxeterDiagram& d) {
  d.validate();
  FiniteTypeResult res;
  for (int i = 0; i < d.rank(); ++i)
    for (int j = i + 1; j < d.rank(); ++j)
      if (d.bond(i, j) == CoxeterDiagram::kInfiniteBond) return res;

  for (const auto& comp : d.components()) {
    const int r = static_cast<int>(comp.size());
    CoxeterDiagram c = d.induced(comp);
    std::string name;
    if (r == 1) {
      name = "A1";
    } else if (r == 2) {
      int m = c.bond(0, 1);
      if (m == 3)
        name = "A2";
      else if (m == 4)
        name = "B2";
      else if (m == 6)
        name = "G2";
      else
        name = "I2(" + std::to_string(m) + ")";
    } else {
      std::vector<std::pair<CoxeterDiagram, std::string>> catalog;
      auto path = [&](std::vector<int> labels, const std::string& nm) {
        catalog.emplace_back(path_diagram(labels, "c"), nm);
      };
      path(std::vector<int>(static_cast<std::size_t>(r - 1), 3), "A" + std::to_string(r));
      {
        std::vector<int> labels(static_cast<std::size_t>(r - 1), 3);
        labels.back() = 4;
        path(labels, "B" + std::to_string(r));
      }
      if (r >= 4) catalog.emplace_back(fork_diagram({1, 1, r - 3}), "D" + std::to_string(r));
      if (r == 6) catalog.emplace_back(fork_diagram({1, 2, 2}), "E6");
      if (r == 7) catalog.emplace_back(fork_diagram({1, 2, 3}), "E7");
      if (r == 8) catalog.emplace_back(fork_diagram({1, 2, 4}), "E8");
      if (r == 4) path({3, 4, 3}, "F4");
      if (r == 3) path({5, 3}, "H3");
      if (r == 4) path({5, 3, 3}, "H4");
      for (const auto& [cand, nm] : catalog)
        if (labeled_isomorphic(c, cand)) {
          name = nm;
          break;
        }
      if (name.empty()) return res;  // not in the classification: infinite
    }
    res.component_types.push_back(name);
  }
  res.finite = true;
  return res;
}

BiLaurent parabolic_poincare(Family family, int n, const std::vector<int>& gamma) {
  if (n < 1) throw std::invalid_argument("parabolic_poincare: rank must be >= 1");
  std::vector<bool> in(static_cast<std::size_t>(n) + 1, false);
  for (int g : gamma) {
    if (g < 1 || g > n) throw std::invalid_argument("parabolic_poincare: generator out of range");
    if (in[static_cast<std::size_t>(g)])
      throw std::invalid_argument("parabolic_poincare: repeated generator");
    in[static_cast<std::size_t>(g)] = true;
  }
  BiLaurent result(1);
  int i = 1;
  while (i <= n) {
    if (!in[static_cast<std::size_t>(i)]) {
      ++i;
      continue;
    }
    int j = i;
    while (j + 1 <= n && in[static_cast<std::size_t>(j) + 1]) ++j;
    const long run = j - i + 1;
    if (family == Family::B && j == n)
      result *= qt_double_factorial(run);
    else
      result *= q_factorial(run + 1);
    i = j + 1;
  }
  return result;
}

namespace {

struct OracleModel {
  std::vector<int> identity;
  // one action per diagram vertex, acting on a state in place
  std::vector<std::function<void(std::vector<int>&)>> actions;
};

/// Walk a path component from an endpoint; returns vertices in path order.
std::vector<int> path_order(const CoxeterDiagram& d, const std::vector<int>& comp) {
  auto adjacent = [&](int v) {
    std::vector<int> out;
    for (int w : comp)
      if (w != v && d.bond(v, w) >= 3) out.push_back(w);
    return out;
  };
  int start = -1;
  for (int v : comp)
    if (adjacent(v).size() <= 1) {
      start = v;
      break;
    }
  if (start < 0) return {};  // no endpoint: a cycle
  std::vector<int> order{start};
  int prev = -1, cur = start;
  while (true) {
    int next = -1;
    for (int w : adjacent(cur))
      if (w != prev) {
        if (next >= 0) return {};  // branch vertex: not a path
        next = w;
      }
    if (next < 0) break;
    order.push_back(next);
    prev = cur;
    cur = next;
  }
  if (order.size() != comp.size()) return {};
  return order;
}

/// Attach the faithful model for one component: permutations for a simple
/// path, signed permutations for a path with a 4-bond at one end, and the
/// affine permutation window model for a simple cycle.
void attach_component_model(const CoxeterDiagram& d, const std::vector<int>& comp,
                            OracleModel& model) {
  const int base = static_cast<int>(model.identity.size());
  const int r = static_cast<int>(comp.size());
  auto fail = [] {
    throw std::invalid_argument(
        "group_poincare_oracle: supported components are simple paths, paths with one "
        "terminal 4-bond, and simple cycles");
  };

  std::vector<int> order = path_order(d, comp);
  if (order.empty()) {
    // cycle: all degrees are 2; require simple bonds
    for (int v : comp) {
      int deg = 0;
      for (int w : comp)
        if (w != v && d.bond(v, w) >= 3) {
          if (d.bond(v, w) != 3) fail();
          ++deg;
        }
      if (deg != 2) fail();
    }
    std::vector<int> cyc{comp[0]};
    int prev = -1, cur = comp[0];
    while (static_cast<int>(cyc.size()) < r) {
      int next = -1;
      for (int w : comp)
        if (w != cur && w != prev && d.bond(cur, w) >= 3) {
          next = w;
          break;
        }
      cyc.push_back(next);
      prev = cur;
      cur = next;
    }
    for (int i = 0; i < r; ++i) model.identity.push_back(i + 1);
    for (int i = 0; i < r; ++i) {
      int vertex = cyc[static_cast<std::size_t>(i)];
      if (i + 1 < r) {
        model.actions[static_cast<std::size_t>(vertex)] = [base, i](std::vector<int>& s) {
          std::swap(s[static_cast<std::size_t>(base + i)], s[static_cast<std::size_t>(base + i + 1)]);
        };
      } else {
        model.actions[static_cast<std::size_t>(vertex)] = [base, r](std::vector<int>& s) {
          int lo = s[static_cast<std::size_t>(base)], hi = s[static_cast<std::size_t>(base + r - 1)];
          s[static_cast<std::size_t>(base)] = hi - r;
          s[static_cast<std::size_t>(base + r - 1)] = lo + r;
        };
      }
    }
    return;
  }

  std::vector<int> labels;
  for (int i = 0; i + 1 < r; ++i)
    labels.push_back(d.bond(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(i) + 1]));
  int fours = static_cast<int>(std::count(labels.begin(), labels.end(), 4));
  for (int l : labels)
    if (l != 3 && l != 4) fail();

  if (fours == 0) {
    // symmetric group on r+1 letters
    for (int i = 0; i <= r; ++i) model.identity.push_back(i + 1);
    for (int i = 0; i < r; ++i)
      model.actions[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] =
          [base, i](std::vector<int>& s) {
            std::swap(s[static_cast<std::size_t>(base + i)], s[static_cast<std::size_t>(base + i + 1)]);
          };
    return;
  }
  if (fours != 1) fail();
  if (labels.front() == 4) std::reverse(order.begin(), order.end());
  else if (labels.back() != 4) fail();
  // signed permutations of r letters; the generator at the 4-bond end flips a sign
  for (int i = 0; i < r; ++i) model.identity.push_back(i + 1);
  for (int i = 0; i < r; ++i) {
    int vertex = order[static_cast<std::size_t>(i)];
    if (i + 1 < r)
      model.actions[static_cast<std::size_t>(vertex)] = [base, i](std::vector<int>& s) {
        std::swap(s[static_cast<std::size_t>(base + i)], s[static_cast<std::size_t>(base + i + 1)]);
      };
    else
      model.actions[static_cast<std::size_t>(vertex)] = [base, r](std::vector<int>& s) {
        s[static_cast<std::size_t>(base + r - 1)] = -s[static_cast<std::size_t>(base + r - 1)];
      };
  }
}

}  // namespace

BiLaurent group_poincare_oracle(const CoxeterDiagram& d, std::size_t max_elements) {
  d.validate();
  OracleModel model;
  model.actions.resize(static_cast<std::size_t>(d.rank()));
  for (const auto& comp : d.components()) attach_component_model(d, comp, model);

  struct Info {
    long length;
    long special;  // n(w): t-weighted generator count along any geodesic
  };
  std::map<std::vector<int>, Info> seen;
  seen.emplace(model.identity, Info{0, 0});
  std::vector<std::vector<int>> frontier{model.identity};
  BiLaurent sum(1);  // identity contributes q^0 t^0

  long level = 0;
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& w : frontier) {
      const Info info = seen.at(w);
      for (int g = 0; g < d.rank(); ++g) {
        std::vector<int> w2 = w;
        model.actions[static_cast<std::size_t>(g)](w2);
        const long wt = d.weights[static_cast<std::size_t>(g)] == Weight::T ? 1 : 0;
        auto it = seen.find(w2);
        if (it == seen.end()) {
          if (seen.size() >= max_elements)
            throw BudgetError("group_poincare_oracle: element budget of " +
                              std::to_string(max_elements) + " exceeded");
          Info i2{level + 1, info.special + wt};
          seen.emplace(w2, i2);
          next.push_back(std::move(w2));
          sum += BiLaurent::monomial(Rational(1), static_cast<int>(i2.length - i2.special),
                                     static_cast<int>(i2.special));
        } else if (it->second.length == level + 1) {
          if (it->second.special != info.special + wt)
            throw std::logic_error("group_poincare_oracle: geodesic-dependent special count");
        } else if (it->second.length == level - 1) {
          if (info.special != it->second.special + wt)
            throw std::logic_error("group_poincare_oracle: geodesic-dependent special count");
        } else {
          throw std::logic_error("group_poincare_oracle: Cayley neighbor length differs by != 1");
        }
      }
    }
    frontier = std::move(next);
    ++level;
  }
  return sum;
}

}  // namespace artin
