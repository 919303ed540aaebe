#pragma once

// Symmetric group combinatorics: permutations, partitions, conjugacy classes,
// irreducible characters (Murnaghan-Nakayama) and class-function
// decomposition.

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "delta2n/scalar.hpp"

namespace delta2n {

// One-line notation on 0..n-1: i -> perm[i].
using Permutation = std::vector<int>;

Permutation identity_permutation(int n);
// (a * b)(i) = a(b(i)).
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& p);
int sign(const Permutation& p);
// The transposition (i i+1).
Permutation adjacent_transposition(int n, int i);
// Cycle notation, e.g. {{0,1,2}} for (012).
Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

// Positions j of a walk e = h_0, h_1 = s_{j_0} h_0, h_2 = s_{j_1} h_1, ...
// that visits every element of S_n exactly once (Steinhaus-Johnson-Trotter
// order). Has n! - 1 entries.
std::vector<int> adjacent_transposition_walk(int n);

std::int64_t factorial(int n);

class Partition {
 public:
  Partition() = default;
  // Parts must be positive; they are sorted into weakly decreasing order.
  explicit Partition(std::vector<int> parts);

  // Accepts "3,1,1", "311", "1^6", "21^4", or "" for the empty partition.
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;  // the n it partitions
  int length() const { return static_cast<int>(parts_.size()); }
  int multiplicity(int part) const;
  Partition conjugate() const;

  std::string to_string() const;  // "3,1,1"
  std::string compact() const;    // "311"

  auto operator<=>(const Partition&) const = default;
  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

// All partitions of n in increasing lexicographic order of their parts:
// 1^n first, (n) last. This is also the column order used for class functions.
const std::vector<Partition>& partitions(int n);
std::size_t partition_index(const Partition& p);

Partition cycle_type(const Permutation& p);
std::int64_t class_size(const Partition& mu);
// Cycles are consecutive blocks of 0..n-1, longest first.
Permutation class_representative(const Partition& mu);

std::int64_t mn_character(const Partition& lambda, const Partition& mu);
std::int64_t hook_dimension(const Partition& lambda);

// Rational-valued function on the conjugacy classes of S_n, indexed like
// partitions(n).
struct ClassFunction {
  int n = 0;
  std::vector<Rational> values;

  static ClassFunction zero(int n);
  const Rational& at(const Partition& mu) const { return values.at(partition_index(mu)); }
  Rational& at(const Partition& mu) { return values.at(partition_index(mu)); }

  ClassFunction& operator+=(const ClassFunction& other);
  ClassFunction& operator-=(const ClassFunction& other);
  ClassFunction& operator*=(const Rational& s);
  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
  friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
  friend ClassFunction operator*(const Rational& s, ClassFunction a) { return a *= s; }
  bool operator==(const ClassFunction&) const = default;
};

class CharacterTable {
 public:
  explicit CharacterTable(int n);

  int n() const { return n_; }
  // Rows (irreducibles) and columns (classes) share this order.
  const std::vector<Partition>& labels() const { return partitions(n_); }
  const std::vector<std::int64_t>& class_sizes() const { return class_sizes_; }
  // values()(lambda, mu) = chi_lambda(mu).
  const IntMatrix& values() const { return values_; }
  std::int64_t operator()(const Partition& lambda, const Partition& mu) const;
  ClassFunction character(const Partition& lambda) const;

 private:
  int n_;
  std::vector<std::int64_t> class_sizes_;
  IntMatrix values_;
};

// (1/n!) sum_mu |C(mu)| f(mu) g(mu).
Rational inner_product(const ClassFunction& f, const ClassFunction& g);

using Multiplicities = std::map<Partition, std::int64_t>;

// <f, chi_lambda> for every lambda, zero multiplicities omitted. Throws
// NotACharacter on a non-integral multiplicity, or on a negative one unless
// allow_virtual is set.
Multiplicities decompose(const ClassFunction& f, const CharacterTable& table,
                         bool allow_virtual = false);
Multiplicities decompose(const ClassFunction& f, bool allow_virtual = false);

ClassFunction character_of(const Multiplicities& m, const CharacterTable& table);

// "chi_{211} + 2 chi_{33}" style rendering; "0" for the empty sum.
std::string format_decomposition(const Multiplicities& m);

}  // namespace delta2n
