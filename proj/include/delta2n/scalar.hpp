#pragma once

// Exact scalar types and the Eigen container aliases used across the library.

#include <cstdint>

#include <Eigen/Core>
#include <Eigen/SparseCore>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

namespace delta2n {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RationalMatrix = DenseMatrix<Rational>;
using RationalVector = DenseVector<Rational>;
using IntMatrix = DenseMatrix<std::int64_t>;
using IntVector = DenseVector<std::int64_t>;

// Column-major sparse matrix over Q. Stored entries are never zero.
using SparseRationalMatrix = Eigen::SparseMatrix<Rational, Eigen::ColMajor>;
using RationalTriplet = Eigen::Triplet<Rational>;

inline bool is_integral(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

}  // namespace delta2n
