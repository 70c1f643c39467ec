#pragma once

#include <optional>
#include <string>
#include <vector>

#include "branecharge/intersection.hpp"
#include "branecharge/variety.hpp"

namespace branecharge {

// Two sheaf conventions appear below:
//  * brane charge (charge_*): F' = O(D) on X gives F = i^*(F' (x) N) on Y,
//    resolved by 0 -> F' -> F' (x) N -> i_! F -> 0;
//  * arithmetic genus (chi_cy3): E = i^* O(D), the plain restriction.

/// i_* Q(F) = td(X) ch(F') (e^a - 1) capped with [X], any n <= 4.
GradedClass charge_general(const ToricVariety& x, const DivisorClass& d);

/// chi(Y, E) = -[K] . (1/6 [D]^3 + 1/12 [D] . sum_{codim-2 faces} [V(B)]), n = 4.
Rational chi_cy3(const ToricVariety& x, const DivisorClass& d);

/// chi(Y, L) = [K]^2 . (9/2 [K]^2 + 1/4 sum [V(B)]), L = i^* O(-3K), n = 4.
Rational chi_L_cy3(const ToricVariety& x);

/// -[K] . (1 - [K] + [D] + 1/2([K]^2 + [D]^2 + 1/6 sum [V(B)]) - [K][D]), n = 3.
GradedClass charge_dim3(const ToricVariety& x, const DivisorClass& d);

/// -[K] . (1 - 3[K] + 9/2 [K]^2 + 1/12 sum [V(B)]): the brane of -2K, n = 3.
GradedClass charge_L_dim3(const ToricVariety& x);

/// -[K] + [K] . ([K] - [D]), n = 2.
GradedClass charge_surface(const ToricVariety& x, const DivisorClass& d);

struct OracleCheck {
  std::string name;
  std::string expected;
  std::string got;
  bool pass = false;
  bool skipped = false;
  std::string note;
};

struct ChargeReport {
  std::string polytope_hash;
  int dim = 0;
  int num_rays = 0;
  DivisorClass divisor;
  GradedClass charge;
  /// deg(charge_k . H^{n-k}) for H = -K / fano index, k = 0..n.
  std::vector<Rational> degrees;
  /// deg(charge_k . (-K)^{n-k}), k = 0..n.
  std::vector<Rational> degrees_anticanonical;
  std::optional<Rational> genus;
  std::vector<OracleCheck> checks;

  bool all_pass() const;
};

/// Charge plus exact cross-checks:
///  (i)   the dimension-specific formula agrees with charge_general
///        (n = 4: chi_cy3(D - K) = deg charge_general(D));
///  (ii)  a e^a ch(F') = a ch(F' (x) N) and ch(F' (x) N) - ch(F') = ch(F')(e^a - 1);
///  (iii) deg charge equals the lattice-point value of chi(Y, O_Y(D - K)) when
///        D - K is nef (skipped otherwise);
///  (iv)  the codim-1 part is the class of -K.
ChargeReport verify_grr(const ToricVariety& x, const DivisorClass& d);

}  // namespace branecharge
