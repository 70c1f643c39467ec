#include "branecharge/charges.hpp"

#include <algorithm>

#include "branecharge/error.hpp"
#include "branecharge/oracle.hpp"

namespace branecharge {

namespace {

void require_dim(const ToricVariety& x, int n, const char* what) {
  if (x.dim() != n) {
    throw Error(Errc::DimensionMismatch, std::string(what) + " needs n = " + std::to_string(n) +
                                             ", got n = " + std::to_string(x.dim()));
  }
}

void require_divisor(const ToricVariety& x, const DivisorClass& d) {
  if (d.size() != x.fan().num_rays()) {
    throw Error(Errc::InvalidDivisor, "divisor has " + std::to_string(d.size()) + " coefficients, expected " +
                                          std::to_string(x.fan().num_rays()));
  }
}

OracleCheck exact_check(std::string name, const Rational& expected, const Rational& got) {
  return {std::move(name), format_rational(expected), format_rational(got), expected == got, false, {}};
}

OracleCheck flag_check(std::string name, bool ok, std::string note = {}) {
  return {std::move(name), "true", ok ? "true" : "false", ok, false, std::move(note)};
}

}  // namespace

GradedClass charge_general(const ToricVariety& x, const DivisorClass& d) {
  require_divisor(x, d);
  const auto& ring = x.ring();
  const int n = x.dim();
  const auto a = x.anticanonical();
  // td(X) . ch(F') . (e^a - 1), all truncated at codim n.
  GradedClass c = ring.exp_times(d, ring.todd_class(n), n);
  return ring.exp_times(a, c, n) - c;
}

Rational chi_cy3(const ToricVariety& x, const DivisorClass& d) {
  require_dim(x, 4, "chi_cy3");
  require_divisor(x, d);
  const auto& ring = x.ring();
  const auto k = x.canonical();
  GradedClass inner = Rational(1, 6) * ring.power(d, 3, ring.fundamental_class()) +
                      Rational(1, 12) * ring.multiply(d, ring.c2_wall_sum());
  return degree(ring.multiply(-k, inner));
}

Rational chi_L_cy3(const ToricVariety& x) {
  require_dim(x, 4, "chi_L_cy3");
  const auto& ring = x.ring();
  const auto k = x.canonical();
  GradedClass inner = Rational(9, 2) * ring.power(k, 2, ring.fundamental_class()) +
                      Rational(1, 4) * ring.c2_wall_sum();
  return degree(ring.power(k, 2, inner));
}

GradedClass charge_dim3(const ToricVariety& x, const DivisorClass& d) {
  require_dim(x, 3, "charge_dim3");
  require_divisor(x, d);
  const auto& ring = x.ring();
  const auto k = x.canonical();
  const auto one = ring.fundamental_class();
  const auto kx = ring.multiply(k, one);
  const auto dx = ring.multiply(d, one);
  GradedClass inner = one - kx + dx;
  inner += Rational(1, 2) * (ring.multiply(k, kx) + ring.multiply(d, dx) +
                             Rational(1, 6) * ring.c2_wall_sum());
  inner -= ring.multiply(k, dx);
  return ring.multiply(-k, inner);
}

GradedClass charge_L_dim3(const ToricVariety& x) {
  require_dim(x, 3, "charge_L_dim3");
  const auto& ring = x.ring();
  const auto k = x.canonical();
  const auto one = ring.fundamental_class();
  GradedClass inner = one - Rational(3) * ring.multiply(k, one) +
                      Rational(9, 2) * ring.power(k, 2, one) + Rational(1, 12) * ring.c2_wall_sum();
  return ring.multiply(-k, inner);
}

GradedClass charge_surface(const ToricVariety& x, const DivisorClass& d) {
  require_dim(x, 2, "charge_surface");
  require_divisor(x, d);
  const auto& ring = x.ring();
  const auto k = x.canonical();
  const auto one = ring.fundamental_class();
  return ring.multiply(-k, one) + ring.multiply(k, ring.multiply(k, one) - ring.multiply(d, one));
}

bool ChargeReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const OracleCheck& c) { return c.skipped || c.pass; });
}

ChargeReport verify_grr(const ToricVariety& x, const DivisorClass& d) {
  require_divisor(x, d);
  const auto& ring = x.ring();
  const int n = x.dim();
  const auto a = x.anticanonical();

  ChargeReport r;
  r.polytope_hash = x.polytope().hash();
  r.dim = n;
  r.num_rays = x.fan().num_rays();
  r.divisor = d;
  r.charge = charge_general(x, d);
  r.degrees = ring.pairings_against(r.charge, x.fundamental_divisor());
  r.degrees_anticanonical = ring.pairings_against(r.charge, a);

  // (i)
  switch (n) {
    case 2:
      r.checks.push_back(flag_check("surface_formula", ring.equivalent(charge_surface(x, d), r.charge)));
      break;
    case 3:
      r.checks.push_back(flag_check("dim3_formula", ring.equivalent(charge_dim3(x, d), r.charge)));
      break;
    case 4: {
      r.genus = chi_cy3(x, d);
      // F = i^*(F' (x) N) = O_Y(D - K).
      r.checks.push_back(exact_check("cy3_genus_formula", chi_cy3(x, d + a), degree(r.charge)));
      break;
    }
    default: {
      OracleCheck c{"specialized_formula", "-", "-", true, true, "no dimension-specific formula for n = 1"};
      r.checks.push_back(c);
    }
  }

  // (ii)
  const auto one = ring.fundamental_class();
  const auto ch_f = ring.chern_character(d, n);
  const auto ch_fn = ring.chern_character(d + a, n);
  const auto lhs = ring.multiply(a, ring.exp_times(a, ch_f, n)).truncated(n);
  const auto rhs = ring.multiply(a, ch_fn).truncated(n);
  r.checks.push_back(flag_check("gysin_identity", ring.equivalent(lhs, rhs)));
  const auto resolved = ch_fn - ch_f;
  const auto twisted = ring.exp_times(a, ch_f, n) - ch_f;
  r.checks.push_back(flag_check("resolution_chern_character", ring.equivalent(resolved, twisted)));

  // (iii)
  const auto shifted = d + a;
  if (shifted.is_integral() && ring.is_nef(shifted)) {
    const auto oracle = evaluate_oracle(x, shifted);
    r.checks.push_back(exact_check("lattice_point_oracle", Rational(static_cast<long>(oracle.chi_Y)), degree(r.charge)));
  } else {
    r.checks.push_back({"lattice_point_oracle", "-", format_rational(degree(r.charge)), false, true,
                        "D - K is not nef; higher cohomology may not vanish"});
  }

  // (iv)
  r.checks.push_back(flag_check("codim1_is_anticanonical",
                                ring.equivalent(r.charge.component(1), ring.multiply(a, one))));
  return r;
}

}  // namespace branecharge
