#include "branecharge/oracle.hpp"

#include <algorithm>

#include "branecharge/error.hpp"

namespace branecharge {

std::vector<Halfspace> divisor_polytope(const Fan& fan, const DivisorClass& d) {
  if (d.size() != fan.num_rays()) throw Error(Errc::InvalidDivisor, "divisor length does not match the number of rays");
  std::vector<Halfspace> out;
  for (int rho = 0; rho < fan.num_rays(); ++rho) out.push_back({fan.rays()[rho], d[rho]});
  return out;
}

std::int64_t chi_toric_nef(const ChowRing& ring, const DivisorClass& d) {
  if (!ring.is_nef(d)) throw Error(Errc::NotNef, "lattice-point count equals chi only for nef divisors");
  const auto hs = divisor_polytope(ring.fan(), d);
  return static_cast<std::int64_t>(lattice_points(hs).all.size());
}

OracleResult evaluate_oracle(const ToricVariety& x, const DivisorClass& d) {
  OracleResult r;
  r.divisor = d;
  r.nef = x.ring().is_nef(d);
  if (!r.nef) throw Error(Errc::NotNef, "hypersurface oracle requires a nef divisor");

  const auto hs = divisor_polytope(x.fan(), d);
  const auto pts = lattice_points(hs).all;
  r.total_points = pts.size();
  r.chi_X = static_cast<std::int64_t>(pts.size());
  // P_D is a lattice polytope (nef on a smooth fan), so its lattice points
  // span its affine hull.
  r.polytope_dim = affine_dimension(pts);

  // Inequalities tight on all of P_D cut out the affine hull; the relative
  // interior is strict on the rest.
  std::vector<bool> implicit(hs.size(), true);
  for (const auto& m : pts) {
    for (std::size_t i = 0; i < hs.size(); ++i) {
      if (Rational(static_cast<long>(dot(m, hs[i].normal))) != -hs[i].offset) implicit[i] = false;
    }
  }
  r.interior_points = static_cast<std::size_t>(std::count_if(pts.begin(), pts.end(), [&](const IntVector& m) {
    for (std::size_t i = 0; i < hs.size(); ++i) {
      if (!implicit[i] && Rational(static_cast<long>(dot(m, hs[i].normal))) == -hs[i].offset) return false;
    }
    return true;
  }));

  const int sign = ((x.dim() + r.polytope_dim) % 2 == 0) ? 1 : -1;
  r.chi_Y = r.chi_X - sign * static_cast<std::int64_t>(r.interior_points);
  return r;
}

std::int64_t chi_hypersurface(const ToricVariety& x, const DivisorClass& d) {
  return evaluate_oracle(x, d).chi_Y;
}

std::int64_t euler_characteristic_top(const Fan& fan) {
  if (!is_complete(fan)) throw Error(Errc::NotComplete, "topological Euler characteristic needs a complete fan");
  return static_cast<std::int64_t>(fan.max_cones().size());
}

}  // namespace branecharge
