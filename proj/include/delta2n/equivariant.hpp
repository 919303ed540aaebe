#pragma once

// The S_n action on chain bases and the equivariant homology characters.
//
// Top-degree characters come from isotypic projection: for each irreducible
// S^lambda with multiplicity c in C_{n+2}, project c generic integer vectors
// with p_11 = (d/n!) sum_g r_11(g^{-1}) rho(g) and read off the multiplicity
// of S^lambda in ker d_{n+2} as c - rank(d_{n+2} * projections). The
// next-degree character follows from the equivariant Euler characteristic.

#include <cstdint>
#include <vector>

#include "delta2n/chain_complex.hpp"
#include "delta2n/scalar.hpp"
#include "delta2n/specht.hpp"
#include "delta2n/symmetric_group.hpp"

namespace delta2n {

// sigma.cell[i] = sign[i] * cell[index[i]].
struct SignedAction {
  std::vector<std::int32_t> index;
  std::vector<std::int8_t> sign;

  std::size_t size() const { return index.size(); }
  std::int64_t trace() const;
  SparseRationalMatrix matrix() const;

  template <typename Derived>
  DenseMatrix<typename Derived::Scalar> operator*(const Eigen::MatrixBase<Derived>& x) const {
    DenseMatrix<typename Derived::Scalar> y(x.rows(), x.cols());
    for (std::size_t i = 0; i < index.size(); ++i) {
      const auto row = static_cast<Eigen::Index>(i);
      if (sign[i] > 0) {
        y.row(index[i]) = x.row(row);
      } else {
        y.row(index[i]) = -x.row(row);
      }
    }
    return y;
  }
};

SignedAction act(const Permutation& sigma, const ChainBasis& basis);
// (a * b) acts as b first, then a.
SignedAction compose(const SignedAction& a, const SignedAction& b);

ClassFunction chain_character(const ChainBasis& basis);

inline constexpr std::uint64_t kDefaultSeed = 20240229;

enum class Method { projection, kernel_trace };

struct CharacterOptions {
  Method method = Method::projection;
  std::uint64_t seed = kDefaultSeed;
  int threads = 1;
  // Seed vectors tried per requested vector before ProjectionFailure.
  int oversample = 3;
};

// (n!/d) p_11 x for every column x, computed by streaming group elements along
// an adjacent-transposition walk. Exact: the scaled projection is integral.
IntMatrix scaled_projection(const SpechtRep& specht, const ChainBasis& basis, const IntMatrix& x);
// p_11 x.
RationalMatrix projection(const SpechtRep& specht, const ChainBasis& basis, const RationalMatrix& x);

// `multiplicity` linearly independent vectors in the image of p_11, projected
// from seeded pseudorandom vectors with entries in -9..9. Throws
// ProjectionFailure if the retry budget runs out first.
RationalMatrix isotypic_seed_basis(const SpechtRep& specht, const ChainBasis& basis,
                                   std::int64_t multiplicity, std::uint64_t seed,
                                   int oversample = 3);

// Multiplicity of S^lambda in ker d_{n+2}.
std::int64_t kernel_multiplicity(const Partition& lambda, const RelativeComplex& complex,
                                 std::uint64_t seed = kDefaultSeed);

struct HomologyCharacters {
  ClassFunction top;   // H_{n+2}
  ClassFunction next;  // H_{n+1}
  Multiplicities top_decomposition;
  Multiplicities next_decomposition;
};

ClassFunction homology_character_top(const RelativeComplex& complex,
                                     const CharacterOptions& options = {});
// chi(H_{n+2}) - chi(C_{n+2}) + chi(C_{n+1}) - chi(C_n). Throws
// ConsistencyError if the result is not a character.
ClassFunction homology_character_next(const RelativeComplex& complex, const ClassFunction& top);
HomologyCharacters homology_characters(const RelativeComplex& complex,
                                       const CharacterOptions& options = {});

// Trace of each class representative on ker d_{n+2}, from an explicit kernel
// basis. Throws ConsistencyError if the kernel is not invariant.
ClassFunction kernel_character_oracle(const RelativeComplex& complex);

}  // namespace delta2n
