#pragma once

#include <cstdint>

#include "branecharge/intersection.hpp"
#include "branecharge/variety.hpp"

namespace branecharge {

/// Lattice-point evaluation of Euler characteristics for a nef divisor.
struct OracleResult {
  DivisorClass divisor;
  bool nef = false;
  std::int64_t chi_X = 0;  // chi(X, O(D)) = |P_D ∩ M|
  std::int64_t chi_Y = 0;  // chi(Y, O(D)|_Y)
  std::size_t total_points = 0;
  std::size_t interior_points = 0;  // relative interior of P_D
  int polytope_dim = 0;             // dimension of P_D
};

/// Halfspaces <m, u_rho> >= -a_rho of P_D.
std::vector<Halfspace> divisor_polytope(const Fan& fan, const DivisorClass& d);

/// chi(X, O(D)) = #(P_D ∩ M) for integral nef D. Throws NotNef.
std::int64_t chi_toric_nef(const ChowRing& ring, const DivisorClass& d);

/// Counts for chi(Y, i^* O(D)) on the anticanonical hypersurface, from
///   0 -> O(D+K) -> O(D) -> O_Y(D) -> 0
/// with chi(O(D+K)) = (-1)^{n + dim P_D} #relint(P_D ∩ M). Throws NotNef.
OracleResult evaluate_oracle(const ToricVariety& x, const DivisorClass& d);

/// chi(Y, i^* O(D)); equals |P_D| - |int P_D| when P_D is full-dimensional.
std::int64_t chi_hypersurface(const ToricVariety& x, const DivisorClass& d);

/// Topological Euler characteristic: the number of maximal cones.
std::int64_t euler_characteristic_top(const Fan& fan);

}  // namespace branecharge
