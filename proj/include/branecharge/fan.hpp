#pragma once

#include <map>
#include <optional>
#include <vector>

#include "branecharge/lattice.hpp"
#include "branecharge/polytope.hpp"

namespace branecharge {

/// Sorted set of ray indices. Cones of a simplicial fan are determined by
/// their rays, so set equality is cone equality.
using Cone = std::vector<int>;

/// Rational polyhedral fan given by ray generators and cones.
///
/// Cones are numbered by a stable id: ordered by dimension, then
/// lexicographically by ray set. Id 0 is the zero cone.
class Fan {
 public:
  /// Fan generated by simplicial maximal cones (all faces are the ray
  /// subsets). Throws InvalidFan if a listed cone is not simplicial.
  static Fan from_max_cones(int dim, std::vector<IntVector> rays, std::vector<Cone> max_cones);

  int dim() const { return dim_; }
  const std::vector<IntVector>& rays() const { return rays_; }
  int num_rays() const { return static_cast<int>(rays_.size()); }

  int num_cones() const { return static_cast<int>(cones_.size()); }
  const Cone& cone(int id) const { return cones_.at(id); }
  int cone_dim(int id) const { return dims_.at(id); }
  /// Ids of all cones of dimension k.
  const std::vector<int>& cones_of_dim(int k) const { return by_dim_.at(k); }
  const std::vector<int>& max_cones() const { return by_dim_.at(dim_); }

  std::optional<int> find(const Cone& rays) const;

  /// Generating matrix (rows = ray vectors) of a cone.
  IntMatrix generators(int id) const;

  /// For normal fans: the vertex set of the polytope face dual to each cone.
  std::optional<int> cone_of_face_vertices(const std::vector<int>& vertices) const;

 private:
  friend Fan normal_fan(const LatticePolytope& p);
  void index();

  int dim_ = 0;
  std::vector<IntVector> rays_;
  std::vector<Cone> cones_;
  std::vector<int> dims_;
  std::vector<std::vector<int>> by_dim_;
  std::map<Cone, int> lookup_;
  std::map<std::vector<int>, int> face_lookup_;
};

/// Normal fan of a full-dimensional polytope: rays are the facet normals in
/// canonical order; the face of codimension k gives a cone of dimension k.
Fan normal_fan(const LatticePolytope& p);

/// Every maximal cone is spanned by a lattice basis.
bool is_smooth(const Fan& f);

/// Every wall lies in exactly two maximal cones and the maximal cones are
/// connected through walls.
bool is_complete(const Fan& f);

/// The cone whose ray set equals `rays`, or nullopt.
std::optional<int> minimal_cone_over(const Fan& f, Cone rays);

/// Cone spanned by the normals of all facets containing `face`.
/// Throws FaceNotOfThisPolytope.
int face_to_cone(const Fan& f, const Face& face);

}  // namespace branecharge
