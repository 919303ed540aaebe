#pragma once

// Exact linear algebra over Q on Eigen containers.
//
// Ranks and kernels are computed by fraction-free sparse elimination over Z
// (rows are first cleared of denominators; row content is divided out after
// every update to keep entries small). A modular rank over word-sized primes is
// available as an independent cross-check and as a fast lower bound.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>

#include "delta2n/scalar.hpp"

namespace delta2n {

inline constexpr std::array<std::uint32_t, 3> kRankPrimes = {2147483629u, 2147483587u,
                                                             2147483579u};

std::size_t rank(const SparseRationalMatrix& m);

// Rank over GF(prime); prime must be below 2^31 and must not divide any
// denominator.
std::size_t rank_mod_p(const SparseRationalMatrix& m, std::uint32_t prime);

// Columns form a basis of the right kernel. Column j has entry 1 at the j-th
// free column (in the elimination's column order) and 0 at every other free
// column, so the free rows of the result form an identity block.
struct KernelBasis {
  SparseRationalMatrix basis;
  std::vector<Eigen::Index> free_rows;  // row indices of the identity block
};

KernelBasis kernel(const SparseRationalMatrix& m);
SparseRationalMatrix kernel_basis(const SparseRationalMatrix& m);

// Drops explicitly stored zeros.
void prune_zeros(SparseRationalMatrix& m);
bool is_zero(const SparseRationalMatrix& m);

template <typename Derived>
SparseRationalMatrix to_sparse(const Eigen::MatrixBase<Derived>& dense) {
  std::vector<RationalTriplet> triplets;
  for (Eigen::Index j = 0; j < dense.cols(); ++j) {
    for (Eigen::Index i = 0; i < dense.rows(); ++i) {
      Rational v(dense(i, j));
      if (v != 0) triplets.emplace_back(i, j, v);
    }
  }
  SparseRationalMatrix m(dense.rows(), dense.cols());
  m.setFromTriplets(triplets.begin(), triplets.end());
  return m;
}

template <typename Derived>
std::size_t rank(const Eigen::MatrixBase<Derived>& dense) {
  return rank(to_sparse(dense));
}

RationalMatrix to_dense(const SparseRationalMatrix& m);

// X with a * X == b, provided a has full column rank and every column of b
// lies in the column span of a; std::nullopt otherwise.
std::optional<RationalMatrix> solve_in_column_span(const RationalMatrix& a,
                                                   const RationalMatrix& b);

// Plain-text triplet format: "rows cols nnz" then one "row col num/den" per
// stored entry in column-major order.
void write_triplets(std::ostream& os, const SparseRationalMatrix& m);
SparseRationalMatrix read_triplets(std::istream& is);

}  // namespace delta2n
