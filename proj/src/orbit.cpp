#include "artin/orbit.hpp"

#include <algorithm>
#include <set>

namespace artin {

namespace {

std::vector<int> mask_to_subset(std::uint64_t mask, int rank) {
  std::vector<int> out;
  for (int v = 0; v < rank; ++v)
    if (mask & (1ull << v)) out.push_back(v);
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

FiniteSubsetComplex finite_parabolic_subsets(const CoxeterDiagram& diagram) {
  diagram.validate();
  const int rank = diagram.rank();
  FiniteSubsetComplex out;
  out.f_vector.assign(static_cast<std::size_t>(rank) + 1, 0);

  std::set<std::uint64_t> finite;
  finite.insert(0);
  out.subsets.push_back({});
  out.f_vector[0] = 1;

  std::vector<std::uint64_t> layer = {0};
  for (int size = 1; size <= rank && !layer.empty(); ++size) {
    std::set<std::uint64_t> candidates;
    for (std::uint64_t base : layer)
      for (int v = 0; v < rank; ++v) {
        if (base & (1ull << v)) continue;
        std::uint64_t mask = base | (1ull << v);
        bool faces_finite = true;
        for (int w = 0; w < rank && faces_finite; ++w)
          if ((mask & (1ull << w)) && finite.find(mask & ~(1ull << w)) == finite.end())
            faces_finite = false;
        if (faces_finite) candidates.insert(mask);
      }
    std::vector<std::uint64_t> next;
    for (std::uint64_t mask : candidates) {
      std::vector<int> subset = mask_to_subset(mask, rank);
      if (!is_finite_type(diagram.induced(subset))) continue;
      finite.insert(mask);
      next.push_back(mask);
      out.subsets.push_back(subset);
      out.f_vector[static_cast<std::size_t>(size)] += 1;
    }
    layer = std::move(next);
  }
  while (out.f_vector.size() > 1 && out.f_vector.back() == 0) out.f_vector.pop_back();
  return out;
}

long euler_characteristic(const CoxeterDiagram& diagram) {
  FiniteSubsetComplex k = finite_parabolic_subsets(diagram);
  long chi = 0;
  long sign = 1;
  for (long count : k.f_vector) {
    chi += sign * count;
    sign = -sign;
  }
  return chi;
}

ArtinPresentation artin_presentation(const CoxeterDiagram& diagram) {
  diagram.validate();
  ArtinPresentation p;
  p.generators = diagram.vertices;
  for (int a = 0; a < diagram.rank(); ++a)
    for (int b = a + 1; b < diagram.rank(); ++b) {
      int m = diagram.bond(a, b);
      if (m == CoxeterDiagram::kInfiniteBond) continue;
      const std::string& na = diagram.vertices[static_cast<std::size_t>(a)];
      const std::string& nb = diagram.vertices[static_cast<std::size_t>(b)];
      p.relations.emplace_back(alternating_word(na, nb, m), alternating_word(nb, na, m));
    }
  return p;
}

}  // namespace artin
