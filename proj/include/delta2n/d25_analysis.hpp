#pragma once

// The S^{311}-isotypic part of H_7 for five markings: an explicit cycle built
// as an orbit sum under the 5-cycle (01234), its S_{0,1,2}-orbit basis, and an
// equivariant isomorphism onto the Specht module S^{311}.

#include <iosfwd>
#include <utility>
#include <vector>

#include "delta2n/chain_complex.hpp"
#include "delta2n/equivariant.hpp"
#include "delta2n/scalar.hpp"
#include "delta2n/specht.hpp"

namespace delta2n {

inline constexpr int kD25Markings = 5;

// All of S_n in lexicographic order of one-line notation.
std::vector<Permutation> all_permutations(int n);

// (d_lambda/n!) sum_pi chi_lambda(pi) A_pi applied to every column of x.
RationalMatrix isotypic_projector_apply(const Partition& lambda, const ChainBasis& basis,
                                        const RationalMatrix& x);

// The isotypic projector restricted to ker d_top, in the coordinates of
// kernel_basis(d_top).
RationalMatrix projection_on_kernel(const Partition& lambda, const RelativeComplex& complex);

struct IsotypicCycle {
  RationalVector v;
  // Seed u with v = sum_i (01234)^i u; empty for the fallback vector.
  std::vector<std::pair<ThetaGraph, int>> seed;
  bool from_search = false;
};

// Searches the +-1 combinations of two {3,1,1}-shaped and two {2,2,1}-shaped
// orbit sums for a nonzero cycle fixed by P_311. Falls back to P_311 applied
// to a seeded random cycle.
IsotypicCycle find_isotypic_cycle(const RelativeComplex& complex, std::uint64_t seed = kDefaultSeed);

// e, (01), (02), (12), (012), (021).
std::vector<Permutation> orbit_permutations();

// Columns sigma.v for sigma in orbit_permutations(). Throws DegenerateVector
// unless they are linearly independent.
RationalMatrix orbit_basis(const ChainBasis& basis, const RationalVector& v);

struct EquivariantIsomorphism {
  RationalMatrix h0;
  Rational determinant;
  bool intertwines = false;  // h0 rho1(pi) == rho2(pi) h0 for every pi in S_5
};

// h0 = sum_pi rho2(pi)^{-1} rho1(pi), with rho1 the action on the orbit basis
// and rho2 the Specht action.
EquivariantIsomorphism equivariant_isomorphism(const ChainBasis& basis, const RationalMatrix& v_basis,
                                               const SpechtRep& specht);

// Whitespace-separated integer matrix with the given number of columns.
IntMatrix read_integer_matrix(std::istream& is, Eigen::Index cols);

}  // namespace delta2n
