#pragma once

// Truncated polynomials in the power sums p_1, p_2, ... and the genus-2
// equivariant Euler characteristic generating function z_2.

#include <map>
#include <string>
#include <vector>

#include "delta2n/scalar.hpp"
#include "delta2n/symmetric_group.hpp"

namespace delta2n {

// Exponents keyed by variable index i of p_i; no zero exponents stored.
using PowerSumMonomial = std::map<int, int>;

int degree(const PowerSumMonomial& m);
// psi(mu) = p_{mu_1} p_{mu_2} ... p_{mu_l}.
PowerSumMonomial psi(const Partition& mu);

class PowerSumPoly {
 public:
  explicit PowerSumPoly(int truncation) : truncation_(truncation) {}

  static PowerSumPoly constant(int truncation, const Rational& c);
  // c * p_i (dropped if i exceeds the truncation).
  static PowerSumPoly variable(int truncation, int i, const Rational& c = 1);

  int truncation() const { return truncation_; }
  const std::map<PowerSumMonomial, Rational>& terms() const { return terms_; }
  Rational coefficient(const PowerSumMonomial& m) const;
  // Terms of exact degree d.
  PowerSumPoly homogeneous_part(int d) const;
  // Same polynomial truncated further.
  PowerSumPoly truncate(int truncation) const;

  PowerSumPoly& operator+=(const PowerSumPoly& other);
  PowerSumPoly& operator-=(const PowerSumPoly& other);
  PowerSumPoly& operator*=(const Rational& s);
  friend PowerSumPoly operator+(PowerSumPoly a, const PowerSumPoly& b) { return a += b; }
  friend PowerSumPoly operator-(PowerSumPoly a, const PowerSumPoly& b) { return a -= b; }
  friend PowerSumPoly operator*(const Rational& s, PowerSumPoly a) { return a *= s; }
  friend PowerSumPoly operator*(const PowerSumPoly& a, const PowerSumPoly& b);
  // a^k for k >= 0.
  PowerSumPoly pow(int k) const;
  bool operator==(const PowerSumPoly& other) const = default;

  std::string to_string() const;

 private:
  void add_term(const PowerSumMonomial& m, const Rational& c);

  int truncation_;
  std::map<PowerSumMonomial, Rational> terms_;
};

// 1 + p_i and its inverse sum_k (-p_i)^k, both truncated.
PowerSumPoly one_plus_p(int truncation, int i);
PowerSumPoly inverse_one_plus_p(int truncation, int i);

PowerSumPoly z2_truncated(int truncation);

struct EulerClassCheck {
  Partition mu;
  Rational z2_coefficient;  // coefficient of psi(mu) in z_2
  Rational bracket;         // |C(mu)|/n! ((-1)^n next(mu) + (-1)^(n+1) top(mu))
  bool pass() const { return z2_coefficient == bracket; }
};

struct EulerReport {
  int n = 0;
  std::vector<EulerClassCheck> classes;
  bool pass() const;
};

// top = chi(H_{n+2}), next = chi(H_{n+1}).
EulerReport check_euler(int n, const ClassFunction& top, const ClassFunction& next);

}  // namespace delta2n
