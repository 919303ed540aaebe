#include "delta2n/symfunc.hpp"

#include <algorithm>
#include <stdexcept>

namespace delta2n {

int degree(const PowerSumMonomial& m) {
  int d = 0;
  for (const auto& [i, e] : m) d += i * e;
  return d;
}

PowerSumMonomial psi(const Partition& mu) {
  PowerSumMonomial m;
  for (int part : mu.parts()) ++m[part];
  return m;
}

void PowerSumPoly::add_term(const PowerSumMonomial& m, const Rational& c) {
  if (c == 0 || degree(m) > truncation_) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

PowerSumPoly PowerSumPoly::constant(int truncation, const Rational& c) {
  PowerSumPoly p(truncation);
  p.add_term({}, c);
  return p;
}

PowerSumPoly PowerSumPoly::variable(int truncation, int i, const Rational& c) {
  if (i < 1) throw std::invalid_argument("power sums are indexed from 1");
  PowerSumPoly p(truncation);
  p.add_term({{i, 1}}, c);
  return p;
}

Rational PowerSumPoly::coefficient(const PowerSumMonomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

PowerSumPoly PowerSumPoly::homogeneous_part(int d) const {
  PowerSumPoly p(truncation_);
  for (const auto& [m, c] : terms_) {
    if (degree(m) == d) p.terms_.emplace(m, c);
  }
  return p;
}

PowerSumPoly PowerSumPoly::truncate(int truncation) const {
  PowerSumPoly p(truncation);
  for (const auto& [m, c] : terms_) p.add_term(m, c);
  return p;
}

PowerSumPoly& PowerSumPoly::operator+=(const PowerSumPoly& other) {
  truncation_ = std::min(truncation_, other.truncation_);
  std::erase_if(terms_, [&](const auto& kv) { return degree(kv.first) > truncation_; });
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

PowerSumPoly& PowerSumPoly::operator-=(const PowerSumPoly& other) {
  return *this += Rational(-1) * other;
}

PowerSumPoly& PowerSumPoly::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

PowerSumPoly operator*(const PowerSumPoly& a, const PowerSumPoly& b) {
  PowerSumPoly p(std::min(a.truncation_, b.truncation_));
  for (const auto& [ma, ca] : a.terms_) {
    const int da = degree(ma);
    if (da > p.truncation_) continue;
    for (const auto& [mb, cb] : b.terms_) {
      if (da + degree(mb) > p.truncation_) continue;
      PowerSumMonomial m = ma;
      for (const auto& [i, e] : mb) m[i] += e;
      p.add_term(m, ca * cb);
    }
  }
  return p;
}

PowerSumPoly PowerSumPoly::pow(int k) const {
  if (k < 0) throw std::invalid_argument("PowerSumPoly::pow: negative exponent");
  PowerSumPoly result = constant(truncation_, 1);
  for (int i = 0; i < k; ++i) result = result * *this;
  return result;
}

std::string PowerSumPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.str() + ")";
    for (const auto& [i, e] : m) {
      s += "*p" + std::to_string(i);
      if (e > 1) s += "^" + std::to_string(e);
    }
  }
  return s;
}

PowerSumPoly one_plus_p(int truncation, int i) {
  return PowerSumPoly::constant(truncation, 1) + PowerSumPoly::variable(truncation, i);
}

PowerSumPoly inverse_one_plus_p(int truncation, int i) {
  PowerSumPoly p(truncation);
  Rational sign = 1;
  for (int k = 0; k * i <= truncation; ++k) {
    p += PowerSumPoly::variable(truncation, i).pow(k) * PowerSumPoly::constant(truncation, sign);
    sign = -sign;
  }
  return p;
}

PowerSumPoly z2_truncated(int truncation) {
  const int t = truncation;
  auto P = [t](int i) { return one_plus_p(t, i); };
  auto Pinv = [t](int i) { return inverse_one_plus_p(t, i); };
  PowerSumPoly z(t);
  z += Rational(-1, 12) * Pinv(1);
  z += Rational(1, 2) * (P(1) * Pinv(2));
  z += Rational(-1, 6) * (P(1).pow(2) * Pinv(3));
  z += Rational(-1, 12) * (P(1).pow(3) * Pinv(2).pow(2));
  z += Rational(-1, 6) * (P(2) * P(3) * Pinv(6));
  return z;
}

bool EulerReport::pass() const {
  return std::all_of(classes.begin(), classes.end(), [](const auto& c) { return c.pass(); });
}

EulerReport check_euler(int n, const ClassFunction& top, const ClassFunction& next) {
  if (top.n != n || next.n != n) throw std::invalid_argument("check_euler: characters of another S_n");
  const PowerSumPoly z = z2_truncated(n);
  EulerReport report;
  report.n = n;
  const Rational sign_next = n % 2 == 0 ? 1 : -1;
  for (const auto& mu : partitions(n)) {
    EulerClassCheck c;
    c.mu = mu;
    c.z2_coefficient = z.coefficient(psi(mu));
    c.bracket = Rational(class_size(mu)) / Rational(factorial(n)) *
                (sign_next * next.at(mu) - sign_next * top.at(mu));
    report.classes.push_back(std::move(c));
  }
  return report;
}

}  // namespace delta2n
