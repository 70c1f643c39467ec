#pragma once

#include <map>
#include <vector>

#include "branecharge/fan.hpp"
#include "branecharge/rational.hpp"

namespace branecharge {

/// Torus-invariant Q-divisor sum_rho a_rho D_rho, dense over the fan's rays.
class DivisorClass {
 public:
  DivisorClass() = default;
  explicit DivisorClass(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {}

  static DivisorClass zero(int num_rays) { return DivisorClass(std::vector<Rational>(num_rays)); }
  static DivisorClass ray(int num_rays, int index);
  /// K_X = -sum D_rho.
  static DivisorClass canonical(int num_rays);
  static DivisorClass from_integers(const std::vector<std::int64_t>& coefficients);

  int size() const { return static_cast<int>(coeffs_.size()); }
  const Rational& operator[](int rho) const { return coeffs_.at(rho); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  bool is_integral() const;

  DivisorClass& operator+=(const DivisorClass& o);
  DivisorClass& operator-=(const DivisorClass& o);
  DivisorClass& operator*=(const Rational& s);
  friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
  friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
  friend DivisorClass operator*(const Rational& s, DivisorClass a) { return a *= s; }
  friend DivisorClass operator-(DivisorClass a) { return a *= Rational(-1); }
  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;

 private:
  std::vector<Rational> coeffs_;
};

/// Rational combination of orbit closures [V(sigma)], graded by codimension
/// (= cone dimension). Zero coefficients are never stored.
class GradedClass {
 public:
  GradedClass() = default;
  explicit GradedClass(int dim) : parts_(dim + 1) {}

  int dim() const { return static_cast<int>(parts_.size()) - 1; }
  void add(int codim, int cone, const Rational& coefficient);
  const std::map<int, Rational>& part(int codim) const { return parts_.at(codim); }
  /// Only the codim-k component.
  GradedClass component(int codim) const;
  /// Components of codimension <= up_to.
  GradedClass truncated(int up_to) const;
  bool is_zero() const;

  GradedClass& operator+=(const GradedClass& o);
  GradedClass& operator-=(const GradedClass& o);
  GradedClass& operator*=(const Rational& s);
  friend GradedClass operator+(GradedClass a, const GradedClass& b) { return a += b; }
  friend GradedClass operator-(GradedClass a, const GradedClass& b) { return a -= b; }
  friend GradedClass operator*(const Rational& s, GradedClass a) { return a *= s; }
  /// Representation equality in the cone basis. For equality in the Chow
  /// group use ChowRing::equivalent.
  friend bool operator==(const GradedClass&, const GradedClass&) = default;

 private:
  std::vector<std::map<int, Rational>> parts_;
};

/// A monomial coeff * D_{r1} * ... * D_{rk} in ray divisors.
struct Monomial {
  Rational coefficient;
  std::vector<int> rays;
};
using DivisorPolynomial = std::vector<Monomial>;

/// Rational Chow ring of a smooth complete toric variety, in the basis of
/// orbit closures. Every product is computed as a divisor times a cycle.
class ChowRing {
 public:
  /// Throws NotSmooth / NotComplete.
  explicit ChowRing(Fan fan);

  const Fan& fan() const { return fan_; }
  int dim() const { return fan_.dim(); }
  int num_rays() const { return fan_.num_rays(); }

  /// [X].
  GradedClass fundamental_class() const;
  /// [V(sigma)].
  GradedClass orbit_class(int cone) const;

  /// D_rho . [V(sigma)].
  GradedClass ray_times_cycle(int rho, int cone) const;
  /// D . [V(sigma)], pure of codimension dim(sigma)+1.
  GradedClass divisor_mul_cycle(const DivisorClass& d, int cone) const;
  GradedClass multiply(const DivisorClass& d, const GradedClass& c) const;
  /// D^k . c.
  GradedClass power(const DivisorClass& d, int k, const GradedClass& c) const;
  /// sum_{k<=up_to} D^k/k! . c, truncated at codimension up_to.
  GradedClass exp_times(const DivisorClass& d, const GradedClass& c, int up_to) const;

  GradedClass evaluate_polynomial(const DivisorPolynomial& poly) const;

  /// prod_rho (1 + D_rho) . [X].
  GradedClass chern_total() const;
  /// Sum of [V(sigma)] over the two-dimensional cones.
  GradedClass c2_wall_sum() const;
  /// prod_rho td(D_rho) . [X] truncated at codimension up_to.
  GradedClass todd_class(int up_to) const;
  /// ch(O(D)) . [X] truncated at codimension up_to.
  GradedClass chern_character(const DivisorClass& d, int up_to) const;

  /// Throws NonIntegerCoefficients.
  bool is_nef(const DivisorClass& d) const;
  /// The characters m_sigma with <m_sigma, u_rho> = -a_rho on each maximal cone.
  std::vector<std::vector<Rational>> cone_characters(const DivisorClass& d) const;

  DivisorClass canonical() const { return DivisorClass::canonical(num_rays()); }
  DivisorClass anticanonical() const { return -canonical(); }
  /// div(chi^m) = sum <m, u_rho> D_rho.
  DivisorClass principal(const IntVector& m) const;

  /// Degrees of the codim-k part against every [V(tau)] with dim tau = n - k.
  std::vector<Rational> pairing_vector(const GradedClass& c, int codim) const;
  /// Equality in the rational Chow group (numerical equivalence).
  bool equivalent(const GradedClass& a, const GradedClass& b) const;
  /// deg(c_k . A^{n-k}) for every codimension k.
  std::vector<Rational> pairings_against(const GradedClass& c, const DivisorClass& ample) const;

 private:
  GradedClass ray_times_cycle(int rho, int cone, int depth) const;

  struct Rewrite {
    // D_rho restricted to V(sigma) as a combination of transverse rays.
    std::vector<std::pair<int, Rational>> terms;
  };

  Fan fan_;
  // rewrite_[cone][i] rewrites the i-th ray of the cone.
  std::vector<std::vector<Rewrite>> rewrite_;
  std::vector<int> max_cone_of_;
};

/// deg: sum of the codim-n coefficients.
Rational degree(const GradedClass& c);

/// Coefficients t_k of x/(1-e^{-x}) = sum t_k x^k, k = 0..up_to, from
/// Bernoulli numbers.
std::vector<Rational> todd_series(int up_to);

/// Bernoulli numbers B_0..B_up_to with B_1 = -1/2.
std::vector<Rational> bernoulli_numbers(int up_to);

}  // namespace branecharge
