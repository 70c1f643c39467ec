#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "branecharge/lattice.hpp"
#include "branecharge/rational.hpp"

namespace branecharge {

/// Facet inequality <m, normal> >= -offset, normal primitive and inward.
struct Facet {
  IntVector normal;
  std::int64_t offset = 0;

  friend bool operator==(const Facet&, const Facet&) = default;
};

/// Inequality <m, normal> >= -offset with a rational offset.
struct Halfspace {
  IntVector normal;
  Rational offset;
};

struct Face {
  int dim = 0;
  std::vector<int> vertices;  // sorted vertex indices
  std::vector<int> facets;    // sorted indices of all facets containing the face

  friend bool operator==(const Face&, const Face&) = default;
};

struct LatticePoints {
  std::vector<IntVector> all;
  std::vector<IntVector> interior;
};

/// Full-dimensional lattice polytope with both representations and its face
/// lattice. Immutable after construction.
class LatticePolytope {
 public:
  /// Builds the polytope spanned by `points`. Duplicates are merged and points
  /// that are not vertices are dropped (see dropped_points()).
  static LatticePolytope from_points(std::vector<IntVector> points);

  int dim() const { return dim_; }
  const std::vector<IntVector>& vertices() const { return vertices_; }
  /// Facets in canonical order: lexicographic on the normal vector.
  const std::vector<Facet>& facets() const { return facets_; }
  /// Faces of dimension k, 0 <= k <= dim-1.
  const std::vector<Face>& faces(int k) const { return faces_.at(k); }
  const std::vector<std::vector<Face>>& face_groups() const { return faces_; }
  /// The polytope itself as a face of dimension dim (contained in no facet).
  Face whole() const;
  /// Input points that were not vertices; non-empty means a warning.
  const std::vector<IntVector>& dropped_points() const { return dropped_; }

  /// Number of faces per dimension 0..dim-1.
  std::vector<std::size_t> f_vector() const;

  std::vector<Halfspace> halfspaces() const;

  /// Deterministic 64-bit FNV-1a hash of the sorted vertex list, as hex.
  std::string hash() const;

 private:
  int dim_ = 0;
  std::vector<IntVector> vertices_;
  std::vector<Facet> facets_;
  std::vector<std::vector<Face>> faces_;
  std::vector<IntVector> dropped_;
};

/// Complete irredundant facet list of conv(vertices), lexicographic by normal.
std::vector<Facet> compute_facets(std::span<const IntVector> vertices);

/// Faces grouped by dimension 0..n-1.
const std::vector<std::vector<Face>>& face_lattice(const LatticePolytope& p);

/// True iff every facet offset equals 1. Cross-checks that the origin is then
/// the unique interior lattice point.
bool is_reflexive(const LatticePolytope& p);

/// Polar dual of a reflexive polytope: its vertices are the facet normals.
LatticePolytope dual_polytope(const LatticePolytope& p);

/// Integer points of the bounded region cut out by `halfspaces`, with the
/// subset satisfying every inequality strictly. Throws Unbounded.
LatticePoints lattice_points(std::span<const Halfspace> halfspaces);

}  // namespace branecharge
