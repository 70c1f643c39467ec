#pragma once

// Test-only fixture polytopes and independent reference computations.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "branecharge/intersection.hpp"
#include "branecharge/polytope.hpp"
#include "branecharge/variety.hpp"

namespace fixtures {

using branecharge::IntVector;
using branecharge::LatticePolytope;
using branecharge::Rational;

/// Polytope whose normal fan is P^n: the reflexive simplex with vertices
/// (-1,...,-1) and (-1,...,-1) + (n+1) e_j.
inline std::vector<IntVector> projective_space_vertices(int n) {
  std::vector<IntVector> v{IntVector(n, -1)};
  for (int j = 0; j < n; ++j) {
    IntVector p(n, -1);
    p[j] = n;
    v.push_back(p);
  }
  return v;
}

/// Cartesian product of vertex sets.
inline std::vector<IntVector> product(const std::vector<IntVector>& a, const std::vector<IntVector>& b) {
  std::vector<IntVector> out;
  for (const auto& x : a) {
    for (const auto& y : b) {
      IntVector p(x);
      p.insert(p.end(), y.begin(), y.end());
      out.push_back(p);
    }
  }
  return out;
}

/// Polytope of -K for the smooth Fano toric variety with these rays: the
/// polar dual of conv(rays).
inline LatticePolytope from_rays(std::vector<IntVector> rays) {
  return branecharge::dual_polytope(LatticePolytope::from_points(std::move(rays)));
}

struct Fixture {
  std::string name;
  LatticePolytope polytope;
  /// Dimensions of the projective-space factors when the variety is a
  /// product of projective spaces; empty otherwise.
  std::vector<int> factors;
};

inline Fixture projective(int n) {
  return {"P" + std::to_string(n), LatticePolytope::from_points(projective_space_vertices(n)), {n}};
}

inline Fixture product_of(std::vector<int> dims) {
  std::vector<IntVector> verts{IntVector{}};
  std::string name;
  for (int d : dims) {
    verts = product(verts, projective_space_vertices(d));
    name += (name.empty() ? "P" : "xP") + std::to_string(d);
  }
  return {name, LatticePolytope::from_points(verts), dims};
}

inline std::vector<Fixture> surfaces() {
  return {
      projective(2),
      product_of({1, 1}),
      {"dP8 (Bl1 P2)", from_rays({{1, 0}, {0, 1}, {-1, -1}, {1, 1}}), {}},
      {"dP7 (Bl2 P2)", from_rays({{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {0, -1}}), {}},
      {"dP6 hexagon", from_rays({{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}}), {}},
  };
}

inline std::vector<Fixture> threefolds() {
  return {
      projective(3),
      product_of({1, 1, 1}),
      product_of({1, 2}),
      {"Bl_pt P3", from_rays({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}, {1, 1, 1}}), {}},
  };
}

inline std::vector<Fixture> fourfolds() {
  return {projective(4), product_of({1, 3}), product_of({2, 2}), product_of({1, 1, 2}), product_of({1, 1, 1, 1})};
}

inline std::vector<Fixture> all_fixtures() {
  std::vector<Fixture> out{projective(1)};
  for (auto group : {surfaces(), threefolds(), fourfolds()}) {
    for (auto& f : group) out.push_back(std::move(f));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Independent reference computations on products of projective spaces.
// A ray whose normal is supported on the coordinates of factor i is a
// hyperplane class h_i of that factor.

/// Factor index of each ray of the normal fan of a product fixture.
inline std::vector<int> ray_factors(const branecharge::Fan& fan, const std::vector<int>& dims) {
  std::vector<int> out;
  for (const auto& u : fan.rays()) {
    int offset = 0;
    int which = -1;
    for (int i = 0; i < static_cast<int>(dims.size()); ++i) {
      for (int c = offset; c < offset + dims[i]; ++c) {
        if (u[c] != 0) which = i;
      }
      offset += dims[i];
    }
    out.push_back(which);
  }
  return out;
}

/// Generalized binomial C(d + a, a) as a polynomial in d (valid for d < 0):
/// chi(P^a, O(d)).
inline Rational chi_projective(int a, const Rational& d) {
  Rational r = 1;
  for (int i = 1; i <= a; ++i) r *= (d + i) / Rational(i);
  return r;
}

/// chi(X, O(D)) on a product of projective spaces by the Kunneth formula.
inline Rational chi_product(const branecharge::Fan& fan, const std::vector<int>& dims,
                            const branecharge::DivisorClass& d) {
  const auto fac = ray_factors(fan, dims);
  std::vector<Rational> deg(dims.size());
  for (int rho = 0; rho < fan.num_rays(); ++rho) deg[fac[rho]] += d[rho];
  Rational r = 1;
  for (std::size_t i = 0; i < dims.size(); ++i) r *= chi_projective(dims[i], deg[i]);
  return r;
}

/// deg(D_1 ... D_n) on a product of projective spaces: the coefficient of
/// prod h_i^{dim_i} in prod_j (sum_i c_{ji} h_i).
inline Rational degree_product(const branecharge::Fan& fan, const std::vector<int>& dims,
                               const std::vector<branecharge::DivisorClass>& divisors) {
  const auto fac = ray_factors(fan, dims);
  const int k = static_cast<int>(dims.size());
  // Polynomial in h_1..h_k as a map from exponent vectors.
  std::map<std::vector<int>, Rational> poly{{std::vector<int>(k, 0), Rational(1)}};
  for (const auto& d : divisors) {
    std::vector<Rational> lin(k);
    for (int rho = 0; rho < fan.num_rays(); ++rho) lin[fac[rho]] += d[rho];
    std::map<std::vector<int>, Rational> next;
    for (const auto& [exps, c] : poly) {
      for (int i = 0; i < k; ++i) {
        if (lin[i] == 0 || exps[i] == dims[i]) continue;
        auto e = exps;
        ++e[i];
        next[e] += c * lin[i];
      }
    }
    poly = std::move(next);
  }
  auto it = poly.find(dims);
  return it == poly.end() ? Rational(0) : it->second;
}

/// C(n, k) for n >= 0; 0 when k < 0 or k > n.
inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace fixtures
