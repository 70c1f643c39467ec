#include "branecharge/polytope.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <set>
#include <sstream>

#include "branecharge/error.hpp"

namespace branecharge {

namespace {

// Calls fn on every k-subset of {0..size-1}, in lexicographic order.
void for_each_combination(int size, int k, const std::function<void(const std::vector<int>&)>& fn) {
  if (k > size || k < 0) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == size - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<IntVector> dedup(std::vector<IntVector> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

std::int64_t ceil_of(const Rational& q) {
  BigInt r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r.get_si();
}

std::int64_t floor_of(const Rational& q) {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r.get_si();
}

bool on_facet(const IntVector& v, const Facet& f) { return dot(v, f.normal) == -f.offset; }

}  // namespace

std::vector<Facet> compute_facets(std::span<const IntVector> input) {
  if (input.empty()) throw Error(Errc::NotFullDimensional, "no vertices given");
  const int n = static_cast<int>(input.front().size());
  if (n == 0) throw Error(Errc::DimensionMismatch, "zero-dimensional ambient lattice");
  for (const auto& v : input) {
    if (static_cast<int>(v.size()) != n) {
      throw Error(Errc::DimensionMismatch, "vertex of length " + std::to_string(v.size()) +
                                               " in a polytope of dimension " + std::to_string(n));
    }
  }
  const auto pts = dedup({input.begin(), input.end()});
  if (static_cast<int>(pts.size()) < n + 1 || affine_dimension(pts) < n) {
    throw Error(Errc::NotFullDimensional,
                "points do not affinely span R^" + std::to_string(n));
  }

  std::set<IntVector> seen;
  std::vector<Facet> facets;
  for_each_combination(static_cast<int>(pts.size()), n, [&](const std::vector<int>& idx) {
    IntMatrix diffs;
    for (int j = 1; j < n; ++j) {
      IntVector d(n);
      for (int c = 0; c < n; ++c) d[c] = pts[idx[j]][c] - pts[idx[0]][c];
      diffs.push_back(std::move(d));
    }
    auto normal = primitive(orthogonal_complement(diffs, n));
    if (content(normal) == 0) return;
    const auto level = dot(normal, pts[idx[0]]);
    bool above = true;
    bool below = true;
    for (const auto& p : pts) {
      const auto v = dot(normal, p);
      above = above && v >= level;
      below = below && v <= level;
    }
    if (!above && !below) return;
    if (!above) {
      for (auto& x : normal) x = -x;
    }
    if (!seen.insert(normal).second) return;
    facets.push_back({normal, above ? -level : level});
  });
  std::sort(facets.begin(), facets.end(),
            [](const Facet& a, const Facet& b) { return a.normal < b.normal; });
  return facets;
}

LatticePolytope LatticePolytope::from_points(std::vector<IntVector> points) {
  LatticePolytope p;
  p.facets_ = compute_facets(points);
  const auto pts = dedup(std::move(points));
  p.dim_ = static_cast<int>(pts.front().size());

  for (const auto& v : pts) {
    IntMatrix normals;
    for (const auto& f : p.facets_) {
      if (on_facet(v, f)) normals.push_back(f.normal);
    }
    if (!normals.empty() && rank(normals) == p.dim_) {
      p.vertices_.push_back(v);
    } else {
      p.dropped_.push_back(v);
    }
  }

  // Faces are exactly the non-empty intersections of facets.
  const int nf = static_cast<int>(p.facets_.size());
  std::set<std::vector<int>> known;
  std::vector<std::vector<int>> queue;
  std::vector<std::vector<int>> facet_vertices(nf);
  for (int f = 0; f < nf; ++f) {
    for (int i = 0; i < static_cast<int>(p.vertices_.size()); ++i) {
      if (on_facet(p.vertices_[i], p.facets_[f])) facet_vertices[f].push_back(i);
    }
    if (known.insert(facet_vertices[f]).second) queue.push_back(facet_vertices[f]);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (int f = 0; f < nf; ++f) {
      std::vector<int> meet;
      std::set_intersection(queue[head].begin(), queue[head].end(), facet_vertices[f].begin(),
                            facet_vertices[f].end(), std::back_inserter(meet));
      if (!meet.empty() && known.insert(meet).second) queue.push_back(std::move(meet));
    }
  }

  p.faces_.assign(p.dim_, {});
  for (const auto& vs : known) {
    Face face;
    face.vertices = vs;
    std::vector<IntVector> coords;
    for (int i : vs) coords.push_back(p.vertices_[i]);
    face.dim = affine_dimension(coords);
    for (int f = 0; f < nf; ++f) {
      if (std::includes(facet_vertices[f].begin(), facet_vertices[f].end(), vs.begin(), vs.end())) {
        face.facets.push_back(f);
      }
    }
    p.faces_.at(face.dim).push_back(std::move(face));
  }
  for (auto& group : p.faces_) {
    std::sort(group.begin(), group.end(),
              [](const Face& a, const Face& b) { return a.vertices < b.vertices; });
  }
  return p;
}

Face LatticePolytope::whole() const {
  Face f;
  f.dim = dim_;
  for (int i = 0; i < static_cast<int>(vertices_.size()); ++i) f.vertices.push_back(i);
  return f;
}

std::vector<std::size_t> LatticePolytope::f_vector() const {
  std::vector<std::size_t> out;
  for (const auto& group : faces_) out.push_back(group.size());
  return out;
}

std::vector<Halfspace> LatticePolytope::halfspaces() const {
  std::vector<Halfspace> out;
  for (const auto& f : facets_) out.push_back({f.normal, Rational(static_cast<long>(f.offset))});
  return out;
}

std::string LatticePolytope::hash() const {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::int64_t x) {
    auto u = static_cast<std::uint64_t>(x);
    for (int b = 0; b < 8; ++b) {
      h ^= (u >> (8 * b)) & 0xffU;
      h *= 1099511628211ULL;
    }
  };
  mix(dim_);
  for (const auto& v : vertices_) {
    for (auto x : v) mix(x);
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

const std::vector<std::vector<Face>>& face_lattice(const LatticePolytope& p) {
  return p.face_groups();
}

bool is_reflexive(const LatticePolytope& p) {
  const bool unit = std::all_of(p.facets().begin(), p.facets().end(),
                                [](const Facet& f) { return f.offset == 1; });
  if (!unit) return false;
  const auto hs = p.halfspaces();
  const auto pts = lattice_points(hs);
  if (pts.interior.size() != 1 || content(pts.interior.front()) != 0) {
    throw Error(Errc::InternalInvariant,
                "unit facet offsets but the origin is not the unique interior lattice point");
  }
  return true;
}

LatticePolytope dual_polytope(const LatticePolytope& p) {
  if (!is_reflexive(p)) throw Error(Errc::NotReflexive, "polar dual requested for a non-reflexive polytope");
  std::vector<IntVector> normals;
  for (const auto& f : p.facets()) normals.push_back(f.normal);
  return LatticePolytope::from_points(std::move(normals));
}

namespace {

// True iff the recession cone {m : <m, u> >= 0 for all u} is nonzero.
bool has_recession_direction(const IntMatrix& normals, int n) {
  if (rank(normals) < n) return true;
  bool found = false;
  for_each_combination(static_cast<int>(normals.size()), n - 1, [&](const std::vector<int>& idx) {
    if (found) return;
    IntMatrix rows;
    for (int i : idx) rows.push_back(normals[i]);
    const auto d = orthogonal_complement(rows, n);
    if (content(d) == 0) return;
    bool pos = true;
    bool neg = true;
    for (const auto& u : normals) {
      const auto v = dot(d, u);
      pos = pos && v >= 0;
      neg = neg && v <= 0;
    }
    found = pos || neg;
  });
  return found;
}

}  // namespace

LatticePoints lattice_points(std::span<const Halfspace> halfspaces) {
  if (halfspaces.empty()) throw Error(Errc::Unbounded, "no inequalities given");
  const int n = static_cast<int>(halfspaces.front().normal.size());
  IntMatrix normals;
  for (const auto& h : halfspaces) {
    if (static_cast<int>(h.normal.size()) != n) throw Error(Errc::DimensionMismatch, "ragged halfspace normals");
    normals.push_back(h.normal);
  }
  if (has_recession_direction(normals, n)) {
    throw Error(Errc::Unbounded, "halfspace intersection has a nontrivial recession cone");
  }

  // Bounding box from the feasible vertices.
  std::vector<std::int64_t> lo(n), hi(n);
  bool any = false;
  for_each_combination(static_cast<int>(halfspaces.size()), n, [&](const std::vector<int>& idx) {
    IntMatrix rows;
    std::vector<Rational> rhs;
    for (int i : idx) {
      rows.push_back(halfspaces[i].normal);
      rhs.push_back(-halfspaces[i].offset);
    }
    const auto x = solve(rows, rhs);
    if (!x) return;
    for (const auto& h : halfspaces) {
      if (dot(*x, h.normal) < -h.offset) return;
    }
    for (int c = 0; c < n; ++c) {
      const auto l = floor_of((*x)[c]);
      const auto u = ceil_of((*x)[c]);
      lo[c] = any ? std::min(lo[c], l) : l;
      hi[c] = any ? std::max(hi[c], u) : u;
    }
    any = true;
  });

  LatticePoints out;
  if (!any) return out;

  // Integer thresholds: <m,u> >= ceil(-q) and, strictly, <m,u> >= floor(-q) + 1.
  std::vector<std::int64_t> weak, strict;
  for (const auto& h : halfspaces) {
    weak.push_back(ceil_of(-h.offset));
    strict.push_back(floor_of(-h.offset) + 1);
  }
  IntVector m(lo);
  while (true) {
    bool inside = true;
    bool interior = true;
    for (std::size_t i = 0; i < halfspaces.size() && inside; ++i) {
      const auto v = dot(m, halfspaces[i].normal);
      inside = v >= weak[i];
      interior = interior && v >= strict[i];
    }
    if (inside) {
      out.all.push_back(m);
      if (interior) out.interior.push_back(m);
    }
    int c = n - 1;
    while (c >= 0 && m[c] == hi[c]) {
      m[c] = lo[c];
      --c;
    }
    if (c < 0) break;
    ++m[c];
  }
  return out;
}

}  // namespace branecharge
