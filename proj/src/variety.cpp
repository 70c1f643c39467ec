#include "branecharge/variety.hpp"

#include "branecharge/error.hpp"

namespace branecharge {

namespace {

// Finds m in (Z/r)^n with <m, u_rho> = 1 (mod r) for every ray; then
// (1 - <m, u_rho>)/r are the coefficients of H with -K = r H + div(chi^m).
std::optional<IntVector> index_witness(const Fan& fan, int r) {
  const int n = fan.dim();
  IntVector m(n, 0);
  while (true) {
    bool ok = true;
    for (const auto& u : fan.rays()) {
      auto v = dot(m, u) % r;
      if (v < 0) v += r;
      if (v != 1 % r) {
        ok = false;
        break;
      }
    }
    if (ok) return m;
    int c = n - 1;
    while (c >= 0 && m[c] == r - 1) {
      m[c] = 0;
      --c;
    }
    if (c < 0) return std::nullopt;
    ++m[c];
  }
}

}  // namespace

ToricVariety ToricVariety::from_polytope(LatticePolytope polytope) {
  if (polytope.dim() > kMaxChargeDimension) {
    throw Error(Errc::DimensionUnsupported,
                "charge formulas are implemented for n <= 4, got n = " + std::to_string(polytope.dim()));
  }
  if (!is_reflexive(polytope)) throw Error(Errc::NotReflexive, "some facet offset differs from 1");
  auto fan = normal_fan(polytope);
  if (!is_smooth(fan)) throw Error(Errc::NotSmooth, "the normal fan is not smooth");
  if (!is_complete(fan)) throw Error(Errc::NotComplete, "the normal fan is not complete");
  auto ring = std::make_shared<const ChowRing>(std::move(fan));

  ToricVariety v(std::move(polytope), std::move(ring));
  for (int r = v.dim() + 1; r >= 1; --r) {
    if (auto m = index_witness(v.fan(), r)) {
      std::vector<Rational> h;
      for (const auto& u : v.fan().rays()) {
        Rational q(BigInt(static_cast<long>(1 - dot(*m, u))), BigInt(r));
        q.canonicalize();
        h.push_back(q);
      }
      v.fano_index_ = r;
      v.fundamental_ = DivisorClass(std::move(h));
      break;
    }
  }
  return v;
}

}  // namespace branecharge
