#include "branecharge/fan.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>

#include "branecharge/error.hpp"

namespace branecharge {

void Fan::index() {
  std::vector<std::pair<std::pair<int, Cone>, std::optional<std::vector<int>>>> sorted;
  std::vector<std::optional<std::vector<int>>> face_of(cones_.size());
  for (const auto& [verts, id] : face_lookup_) face_of[id] = verts;
  for (std::size_t i = 0; i < cones_.size(); ++i) {
    sorted.push_back({{dims_[i], cones_[i]}, face_of[i]});
  }
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  cones_.clear();
  dims_.clear();
  lookup_.clear();
  face_lookup_.clear();
  by_dim_.assign(dim_ + 1, {});
  for (auto& [key, face] : sorted) {
    const int id = static_cast<int>(cones_.size());
    if (!lookup_.emplace(key.second, id).second) continue;
    cones_.push_back(key.second);
    dims_.push_back(key.first);
    by_dim_.at(key.first).push_back(id);
    if (face) face_lookup_.emplace(*face, id);
  }
}

Fan Fan::from_max_cones(int dim, std::vector<IntVector> rays, std::vector<Cone> max_cones) {
  Fan f;
  f.dim_ = dim;
  f.rays_ = std::move(rays);
  for (const auto& r : f.rays_) {
    if (static_cast<int>(r.size()) != dim) throw Error(Errc::DimensionMismatch, "ray of wrong length");
  }
  std::set<Cone> all;
  for (auto c : max_cones) {
    std::sort(c.begin(), c.end());
    IntMatrix gens;
    for (int r : c) {
      if (r < 0 || r >= static_cast<int>(f.rays_.size())) throw Error(Errc::InvalidFan, "ray index out of range");
      gens.push_back(f.rays_[r]);
    }
    if (rank(gens) != static_cast<int>(c.size())) {
      throw Error(Errc::InvalidFan, "cone generators are linearly dependent");
    }
    const int k = static_cast<int>(c.size());
    for (unsigned mask = 0; mask < (1U << k); ++mask) {
      Cone sub;
      for (int i = 0; i < k; ++i) {
        if (mask & (1U << i)) sub.push_back(c[i]);
      }
      all.insert(std::move(sub));
    }
  }
  all.insert(Cone{});
  for (const auto& c : all) {
    f.cones_.push_back(c);
    f.dims_.push_back(static_cast<int>(c.size()));
  }
  f.index();
  return f;
}

std::optional<int> Fan::find(const Cone& rays) const {
  auto it = lookup_.find(rays);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

IntMatrix Fan::generators(int id) const {
  IntMatrix out;
  for (int r : cones_.at(id)) out.push_back(rays_[r]);
  return out;
}

std::optional<int> Fan::cone_of_face_vertices(const std::vector<int>& vertices) const {
  auto it = face_lookup_.find(vertices);
  if (it == face_lookup_.end()) return std::nullopt;
  return it->second;
}

Fan normal_fan(const LatticePolytope& p) {
  Fan f;
  f.dim_ = p.dim();
  for (const auto& facet : p.facets()) f.rays_.push_back(facet.normal);

  auto add = [&](const Face& face) {
    const int id = static_cast<int>(f.cones_.size());
    f.cones_.push_back(face.facets);
    f.dims_.push_back(p.dim() - face.dim);
    f.face_lookup_.emplace(face.vertices, id);
  };
  add(p.whole());
  for (const auto& group : face_lattice(p)) {
    for (const auto& face : group) add(face);
  }
  f.index();
  return f;
}

bool is_smooth(const Fan& f) {
  for (int id = 0; id < f.num_cones(); ++id) {
    const auto gens = f.generators(id);
    if (static_cast<int>(gens.size()) != f.cone_dim(id)) return false;
    if (gens.empty()) continue;
    // Unimodular iff the maximal minors have gcd 1.
    const int k = static_cast<int>(gens.size());
    std::int64_t g = 0;
    std::vector<int> cols(k);
    std::iota(cols.begin(), cols.end(), 0);
    while (true) {
      IntMatrix minor;
      for (const auto& row : gens) {
        IntVector r;
        for (int c : cols) r.push_back(row[c]);
        minor.push_back(std::move(r));
      }
      g = std::gcd(g, std::abs(determinant(minor)));
      int i = k - 1;
      while (i >= 0 && cols[i] == f.dim() - k + i) --i;
      if (i < 0) break;
      ++cols[i];
      for (int j = i + 1; j < k; ++j) cols[j] = cols[j - 1] + 1;
    }
    if (g != 1) return false;
  }
  return true;
}

bool is_complete(const Fan& f) {
  const int n = f.dim();
  const auto& maxes = f.max_cones();
  if (maxes.empty()) return false;
  auto contains = [&f](int big, int small) {
    const auto& a = f.cone(big);
    const auto& b = f.cone(small);
    return std::includes(a.begin(), a.end(), b.begin(), b.end());
  };
  std::vector<std::vector<int>> adjacent(maxes.size());
  for (int wall : f.cones_of_dim(n - 1)) {
    std::vector<int> owners;
    for (std::size_t i = 0; i < maxes.size(); ++i) {
      if (contains(maxes[i], wall)) owners.push_back(static_cast<int>(i));
    }
    if (owners.size() != 2) return false;
    adjacent[owners[0]].push_back(owners[1]);
    adjacent[owners[1]].push_back(owners[0]);
  }
  std::vector<bool> seen(maxes.size(), false);
  std::vector<int> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    const int c = stack.back();
    stack.pop_back();
    for (int d : adjacent[c]) {
      if (!seen[d]) {
        seen[d] = true;
        stack.push_back(d);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

std::optional<int> minimal_cone_over(const Fan& f, Cone rays) {
  std::sort(rays.begin(), rays.end());
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  return f.find(rays);
}

int face_to_cone(const Fan& f, const Face& face) {
  const auto id = f.cone_of_face_vertices(face.vertices);
  if (!id || f.cone(*id) != face.facets || f.cone_dim(*id) != f.dim() - face.dim) {
    throw Error(Errc::FaceNotOfThisPolytope, "face does not belong to the polytope defining this fan");
  }
  return *id;
}

}  // namespace branecharge
