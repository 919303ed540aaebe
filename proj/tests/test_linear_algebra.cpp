#include <catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include "delta2n/linear_algebra.hpp"
#include "oracles.hpp"

using namespace delta2n;

namespace {

RationalMatrix random_matrix(std::mt19937_64& rng, Eigen::Index rows, Eigen::Index cols, int density_pct,
                             bool fractions) {
  RationalMatrix m = RationalMatrix::Zero(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      if (static_cast<int>(rng() % 100) >= density_pct) continue;
      const long num = static_cast<long>(rng() % 11) - 5;
      const long den = fractions ? static_cast<long>(rng() % 4) + 1 : 1;
      m(i, j) = Rational(num, den);
    }
  }
  return m;
}

// Rank-deficient by construction: product of a rows x k and a k x cols factor.
RationalMatrix low_rank(std::mt19937_64& rng, Eigen::Index rows, Eigen::Index cols, Eigen::Index k) {
  return random_matrix(rng, rows, k, 60, false) * random_matrix(rng, k, cols, 60, false);
}

}  // namespace

TEST_CASE("rank of trivial matrices") {
  CHECK(rank(SparseRationalMatrix(4, 7)) == 0);
  CHECK(rank(SparseRationalMatrix(0, 0)) == 0);
  for (int k : {1, 5, 17}) {
    const RationalMatrix id = RationalMatrix::Identity(k, k);
    CHECK(rank(id) == static_cast<std::size_t>(k));
  }
}

TEST_CASE("exact rank agrees with dense elimination and with modular ranks") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const Eigen::Index rows = 1 + static_cast<Eigen::Index>(rng() % 14);
    const Eigen::Index cols = 1 + static_cast<Eigen::Index>(rng() % 14);
    const RationalMatrix m = trial % 2 == 0
                                 ? random_matrix(rng, rows, cols, 35, trial % 3 == 0)
                                 : low_rank(rng, rows, cols, 1 + static_cast<Eigen::Index>(rng() % 4));
    const std::size_t expected = oracle::dense_rank(m);
    const SparseRationalMatrix s = to_sparse(m);
    CAPTURE(trial, rows, cols);
    CHECK(rank(s) == expected);
    for (auto p : kRankPrimes) CHECK(rank_mod_p(s, p) == expected);
  }
}

TEST_CASE("kernel of (1 1) is spanned by (1, -1)") {
  RationalMatrix m(1, 2);
  m << 1, 1;
  const RationalMatrix k = to_dense(kernel_basis(to_sparse(m)));
  REQUIRE(k.cols() == 1);
  CHECK(k(0, 0) == -k(1, 0));
  CHECK(k(0, 0) != 0);
}

TEST_CASE("kernel of an identity matrix is empty") {
  const RationalMatrix id = RationalMatrix::Identity(6, 6);
  CHECK(kernel_basis(to_sparse(id)).cols() == 0);
}

TEST_CASE("kernel bases are annihilated, independent and of the right size") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const Eigen::Index rows = 1 + static_cast<Eigen::Index>(rng() % 10);
    const Eigen::Index cols = 1 + static_cast<Eigen::Index>(rng() % 12);
    const RationalMatrix m = trial % 2 ? random_matrix(rng, rows, cols, 40, true)
                                       : low_rank(rng, rows, cols, 1 + static_cast<Eigen::Index>(rng() % 3));
    const KernelBasis kb = kernel(to_sparse(m));
    const RationalMatrix k = to_dense(kb.basis);
    const std::size_t r = oracle::dense_rank(m);
    CAPTURE(trial);
    REQUIRE(k.rows() == cols);
    CHECK(static_cast<std::size_t>(k.cols()) == static_cast<std::size_t>(cols) - r);
    if (k.cols() == 0) continue;
    CHECK(is_zero(to_sparse(RationalMatrix(m * k))));
    CHECK(oracle::dense_rank(k) == static_cast<std::size_t>(k.cols()));
    REQUIRE(kb.free_rows.size() == static_cast<std::size_t>(k.cols()));
    for (std::size_t a = 0; a < kb.free_rows.size(); ++a) {
      for (Eigen::Index b = 0; b < k.cols(); ++b) {
        CHECK(k(kb.free_rows[a], b) == (static_cast<Eigen::Index>(a) == b ? 1 : 0));
      }
    }
  }
}

TEST_CASE("solve_in_column_span") {
  RationalMatrix a(3, 2);
  a << 1, 0, 0, 1, 1, 1;
  RationalMatrix b(3, 1);
  b << 2, 3, 5;
  const auto x = solve_in_column_span(a, b);
  REQUIRE(x);
  CHECK((*x)(0, 0) == 2);
  CHECK((*x)(1, 0) == 3);
  b(2, 0) = 4;
  CHECK_FALSE(solve_in_column_span(a, b));
  RationalMatrix deficient(2, 2);
  deficient << 1, 2, 2, 4;
  CHECK_FALSE(solve_in_column_span(deficient, RationalMatrix::Zero(2, 1)));
}

TEST_CASE("triplet format round trip keeps exact entries") {
  std::mt19937_64 rng(3);
  const SparseRationalMatrix m = to_sparse(random_matrix(rng, 9, 7, 30, true));
  std::stringstream ss;
  write_triplets(ss, m);
  const SparseRationalMatrix back = read_triplets(ss);
  CHECK(back.rows() == m.rows());
  CHECK(back.cols() == m.cols());
  CHECK(to_dense(back) == to_dense(m));
  std::stringstream header(ss.str());
  Eigen::Index rows, cols, nnz;
  header >> rows >> cols >> nnz;
  CHECK(nnz == m.nonZeros());
  std::stringstream bad("2 2 1\n0 5 1/1\n");
  CHECK_THROWS(read_triplets(bad));
}

TEST_CASE("prune_zeros drops stored zeros") {
  SparseRationalMatrix m(2, 2);
  m.insert(0, 0) = 0;
  m.insert(1, 1) = 3;
  prune_zeros(m);
  CHECK(m.nonZeros() == 1);
  CHECK_FALSE(is_zero(m));
}
