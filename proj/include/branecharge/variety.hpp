#pragma once

#include <memory>

#include "branecharge/fan.hpp"
#include "branecharge/intersection.hpp"
#include "branecharge/polytope.hpp"

namespace branecharge {

/// Largest dimension the charge formulas are implemented for.
inline constexpr int kMaxChargeDimension = 4;

/// Smooth Fano toric variety X of a reflexive polytope, carrying the
/// anticanonical hypersurface Y. Y itself is never built; everything lives
/// in the Chow ring of X.
class ToricVariety {
 public:
  /// Throws NotReflexive, NotSmooth, NotComplete or DimensionUnsupported.
  static ToricVariety from_polytope(LatticePolytope polytope);

  int dim() const { return polytope_.dim(); }
  const LatticePolytope& polytope() const { return polytope_; }
  const Fan& fan() const { return ring_->fan(); }
  const ChowRing& ring() const { return *ring_; }

  /// a = c_1(X) = c_1(N) = -K_X.
  DivisorClass anticanonical() const { return ring_->anticanonical(); }
  DivisorClass canonical() const { return ring_->canonical(); }

  /// Largest r with -K = r H for an integral divisor class H.
  int fano_index() const { return fano_index_; }
  /// A representative of H = -K / fano_index().
  const DivisorClass& fundamental_divisor() const { return fundamental_; }

 private:
  ToricVariety(LatticePolytope polytope, std::shared_ptr<const ChowRing> ring)
      : polytope_(std::move(polytope)), ring_(std::move(ring)) {}

  LatticePolytope polytope_;
  std::shared_ptr<const ChowRing> ring_;
  int fano_index_ = 1;
  DivisorClass fundamental_;
};

}  // namespace branecharge
