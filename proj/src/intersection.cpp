#include "branecharge/intersection.hpp"

#include <algorithm>

#include "branecharge/error.hpp"

namespace branecharge {

// ---------------------------------------------------------------------------
// DivisorClass

DivisorClass DivisorClass::ray(int num_rays, int index) {
  auto d = zero(num_rays);
  d.coeffs_.at(index) = 1;
  return d;
}

DivisorClass DivisorClass::canonical(int num_rays) {
  return DivisorClass(std::vector<Rational>(num_rays, Rational(-1)));
}

DivisorClass DivisorClass::from_integers(const std::vector<std::int64_t>& coefficients) {
  std::vector<Rational> c;
  c.reserve(coefficients.size());
  for (auto x : coefficients) c.emplace_back(static_cast<long>(x));
  return DivisorClass(std::move(c));
}

bool DivisorClass::is_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& q) { return is_integer(q); });
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& o) {
  if (o.size() != size()) throw Error(Errc::InvalidDivisor, "divisors over different ray sets");
  for (int i = 0; i < size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& o) {
  if (o.size() != size()) throw Error(Errc::InvalidDivisor, "divisors over different ray sets");
  for (int i = 0; i < size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

DivisorClass& DivisorClass::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

// ---------------------------------------------------------------------------
// GradedClass

void GradedClass::add(int codim, int cone, const Rational& coefficient) {
  if (coefficient == 0) return;
  auto& part = parts_.at(codim);
  auto [it, inserted] = part.emplace(cone, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) part.erase(it);
  }
}

GradedClass GradedClass::component(int codim) const {
  GradedClass out(dim());
  out.parts_.at(codim) = parts_.at(codim);
  return out;
}

GradedClass GradedClass::truncated(int up_to) const {
  GradedClass out(*this);
  for (int k = up_to + 1; k <= dim(); ++k) out.parts_[k].clear();
  return out;
}

bool GradedClass::is_zero() const {
  return std::all_of(parts_.begin(), parts_.end(), [](const auto& p) { return p.empty(); });
}

GradedClass& GradedClass::operator+=(const GradedClass& o) {
  if (parts_.empty()) parts_.resize(o.parts_.size());
  for (int k = 0; k <= o.dim(); ++k) {
    for (const auto& [cone, c] : o.parts_[k]) add(k, cone, c);
  }
  return *this;
}

GradedClass& GradedClass::operator-=(const GradedClass& o) {
  if (parts_.empty()) parts_.resize(o.parts_.size());
  for (int k = 0; k <= o.dim(); ++k) {
    for (const auto& [cone, c] : o.parts_[k]) add(k, cone, -c);
  }
  return *this;
}

GradedClass& GradedClass::operator*=(const Rational& s) {
  for (auto& part : parts_) {
    if (s == 0) {
      part.clear();
      continue;
    }
    for (auto& entry : part) entry.second *= s;
  }
  return *this;
}

Rational degree(const GradedClass& c) {
  Rational total = 0;
  if (c.dim() < 0) return total;
  for (const auto& entry : c.part(c.dim())) total += entry.second;
  return total;
}

// ---------------------------------------------------------------------------
// Series

std::vector<Rational> bernoulli_numbers(int up_to) {
  std::vector<Rational> b(up_to + 1);
  b[0] = 1;
  for (int m = 1; m <= up_to; ++m) {
    // sum_{j=0}^{m} C(m+1, j) B_j = 0
    Rational s = 0;
    BigInt binom = 1;  // C(m+1, j)
    for (int j = 0; j < m; ++j) {
      s += Rational(binom) * b[j];
      binom = binom * (m + 1 - j) / (j + 1);
    }
    b[m] = -s / Rational(m + 1);
  }
  return b;
}

std::vector<Rational> todd_series(int up_to) {
  // x/(1-e^{-x}) = sum (-1)^k B_k x^k / k!
  const auto b = bernoulli_numbers(up_to);
  std::vector<Rational> t(up_to + 1);
  BigInt fact = 1;
  for (int k = 0; k <= up_to; ++k) {
    if (k > 0) fact *= k;
    t[k] = b[k] / Rational(fact);
    if (k % 2 == 1) t[k] = -t[k];
  }
  return t;
}

// ---------------------------------------------------------------------------
// ChowRing

ChowRing::ChowRing(Fan fan) : fan_(std::move(fan)) {
  if (!is_smooth(fan_)) throw Error(Errc::NotSmooth, "the fan has a maximal cone that is not unimodular");
  if (!is_complete(fan_)) throw Error(Errc::NotComplete, "the fan is not complete");

  const auto& maxes = fan_.max_cones();
  rewrite_.resize(fan_.num_cones());
  max_cone_of_.resize(fan_.num_cones());
  std::vector<RationalMatrix> inverses;
  for (int m : maxes) inverses.push_back(*inverse(fan_.generators(m)));

  for (int id = 0; id < fan_.num_cones(); ++id) {
    const auto& sigma = fan_.cone(id);
    std::size_t which = 0;
    while (!std::includes(fan_.cone(maxes[which]).begin(), fan_.cone(maxes[which]).end(),
                          sigma.begin(), sigma.end())) {
      ++which;
    }
    const int max_id = maxes[which];
    max_cone_of_[id] = max_id;
    const auto& big = fan_.cone(max_id);
    const auto& inv = inverses[which];

    for (int rho : sigma) {
      const auto pos = std::find(big.begin(), big.end(), rho) - big.begin();
      // m = U^{-1} e_pos: <m, u_rho> = 1, <m, u> = 0 on the other rays of the max cone.
      std::vector<Rational> m(fan_.dim());
      for (int r = 0; r < fan_.dim(); ++r) m[r] = inv[r][pos];
      Rewrite rw;
      for (int other = 0; other < fan_.num_rays(); ++other) {
        if (std::binary_search(big.begin(), big.end(), other)) continue;
        const Rational c = -dot(m, fan_.rays()[other]);
        if (c != 0) rw.terms.emplace_back(other, c);
      }
      rewrite_[id].push_back(std::move(rw));
    }
  }
}

GradedClass ChowRing::fundamental_class() const {
  GradedClass c(dim());
  c.add(0, 0, 1);
  return c;
}

GradedClass ChowRing::orbit_class(int cone) const {
  GradedClass c(dim());
  c.add(fan_.cone_dim(cone), cone, 1);
  return c;
}

GradedClass ChowRing::ray_times_cycle(int rho, int cone) const { return ray_times_cycle(rho, cone, 0); }

GradedClass ChowRing::ray_times_cycle(int rho, int cone, int depth) const {
  if (depth > 10 * dim()) {
    throw Error(Errc::InternalNonTermination, "divisor reduction exceeded its depth bound");
  }
  GradedClass out(dim());
  const auto& sigma = fan_.cone(cone);
  const int codim = fan_.cone_dim(cone) + 1;
  const auto pos = std::lower_bound(sigma.begin(), sigma.end(), rho);
  if (pos == sigma.end() || *pos != rho) {
    Cone tau(sigma);
    tau.insert(tau.begin() + (pos - sigma.begin()), rho);
    if (auto id = fan_.find(tau)) out.add(codim, *id, 1);
    return out;
  }
  const auto& rw = rewrite_[cone][pos - sigma.begin()];
  for (const auto& [other, c] : rw.terms) {
    out += c * ray_times_cycle(other, cone, depth + 1);
  }
  return out;
}

GradedClass ChowRing::divisor_mul_cycle(const DivisorClass& d, int cone) const {
  if (d.size() != num_rays()) throw Error(Errc::InvalidDivisor, "divisor length does not match the number of rays");
  GradedClass out(dim());
  for (int rho = 0; rho < num_rays(); ++rho) {
    if (d[rho] != 0) out += d[rho] * ray_times_cycle(rho, cone);
  }
  return out;
}

GradedClass ChowRing::multiply(const DivisorClass& d, const GradedClass& c) const {
  GradedClass out(dim());
  for (int k = 0; k < dim(); ++k) {
    for (const auto& [cone, coeff] : c.part(k)) out += coeff * divisor_mul_cycle(d, cone);
  }
  return out;
}

GradedClass ChowRing::power(const DivisorClass& d, int k, const GradedClass& c) const {
  GradedClass out = c;
  for (int i = 0; i < k; ++i) out = multiply(d, out);
  return out;
}

GradedClass ChowRing::exp_times(const DivisorClass& d, const GradedClass& c, int up_to) const {
  GradedClass out = c.truncated(up_to);
  GradedClass term = out;
  for (int k = 1; k <= up_to; ++k) {
    term = Rational(1, k) * multiply(d, term).truncated(up_to);
    if (term.is_zero()) break;
    out += term;
  }
  return out;
}

GradedClass ChowRing::evaluate_polynomial(const DivisorPolynomial& poly) const {
  GradedClass out(dim());
  for (const auto& mono : poly) {
    GradedClass term = fundamental_class();
    for (auto it = mono.rays.rbegin(); it != mono.rays.rend(); ++it) {
      term = multiply(DivisorClass::ray(num_rays(), *it), term);
    }
    out += mono.coefficient * term;
  }
  return out;
}

GradedClass ChowRing::chern_total() const {
  GradedClass c = fundamental_class();
  for (int rho = 0; rho < num_rays(); ++rho) {
    c += multiply(DivisorClass::ray(num_rays(), rho), c);
  }
  return c;
}

GradedClass ChowRing::c2_wall_sum() const {
  GradedClass c(dim());
  if (dim() < 2) return c;
  for (int id : fan_.cones_of_dim(2)) c.add(2, id, 1);
  return c;
}

GradedClass ChowRing::todd_class(int up_to) const {
  if (up_to < 0 || up_to > dim()) throw Error(Errc::DimensionMismatch, "Todd truncation outside 0..n");
  const auto t = todd_series(up_to);
  GradedClass c = fundamental_class();
  for (int rho = 0; rho < num_rays(); ++rho) {
    const auto d = DivisorClass::ray(num_rays(), rho);
    GradedClass next = c;
    GradedClass pow = c;
    for (int k = 1; k <= up_to; ++k) {
      pow = multiply(d, pow).truncated(up_to);
      if (pow.is_zero()) break;
      next += t[k] * pow;
    }
    c = std::move(next);
  }
  return c;
}

GradedClass ChowRing::chern_character(const DivisorClass& d, int up_to) const {
  return exp_times(d, fundamental_class(), up_to);
}

std::vector<std::vector<Rational>> ChowRing::cone_characters(const DivisorClass& d) const {
  if (d.size() != num_rays()) throw Error(Errc::InvalidDivisor, "divisor length does not match the number of rays");
  std::vector<std::vector<Rational>> out;
  for (int m : fan_.max_cones()) {
    std::vector<Rational> rhs;
    for (int rho : fan_.cone(m)) rhs.push_back(-d[rho]);
    out.push_back(*solve(fan_.generators(m), rhs));
  }
  return out;
}

bool ChowRing::is_nef(const DivisorClass& d) const {
  if (!d.is_integral()) throw Error(Errc::NonIntegerCoefficients, "nefness is checked for integral divisors only");
  for (const auto& m : cone_characters(d)) {
    for (int rho = 0; rho < num_rays(); ++rho) {
      if (dot(m, fan_.rays()[rho]) < -d[rho]) return false;
    }
  }
  return true;
}

DivisorClass ChowRing::principal(const IntVector& m) const {
  std::vector<Rational> c;
  for (const auto& u : fan_.rays()) c.emplace_back(static_cast<long>(dot(m, u)));
  return DivisorClass(std::move(c));
}

std::vector<Rational> ChowRing::pairing_vector(const GradedClass& c, int codim) const {
  std::vector<Rational> out;
  const GradedClass part = c.component(codim);
  for (int tau : fan_.cones_of_dim(dim() - codim)) {
    GradedClass prod = part;
    for (int rho : fan_.cone(tau)) prod = multiply(DivisorClass::ray(num_rays(), rho), prod);
    out.push_back(degree(prod));
  }
  return out;
}

bool ChowRing::equivalent(const GradedClass& a, const GradedClass& b) const {
  const GradedClass diff = a - b;
  for (int k = 0; k <= dim(); ++k) {
    if (diff.part(k).empty()) continue;
    for (const auto& v : pairing_vector(diff, k)) {
      if (v != 0) return false;
    }
  }
  return true;
}

std::vector<Rational> ChowRing::pairings_against(const GradedClass& c, const DivisorClass& ample) const {
  std::vector<Rational> out;
  for (int k = 0; k <= dim(); ++k) out.push_back(degree(power(ample, dim() - k, c.component(k))));
  return out;
}

}  // namespace branecharge
