#pragma once

// Cellular chains of theta-type cells and their boundary matrices.
//
// For n >= 4 the homology of Delta_{2,n} is computed relative to the
// subcomplex generated by the bridge locus and the cyclic-theta graphs. Its
// chain groups are spanned by full theta-type cells, and it is concentrated in
// the three degrees n, n+1, n+2:
//
//   0 -> C_{n+2} --d_top--> C_{n+1} --d_middle--> C_n -> 0
//
// For small n the complex relative to the bridge locus alone is available; its
// cells are all theta-type graphs (cyclic ones included).

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "delta2n/scalar.hpp"
#include "delta2n/theta_graph.hpp"

namespace delta2n {

enum class Subcomplex {
  theta_locus,   // bridge locus + cyclic theta: cells are full theta graphs
  bridge_locus,  // bridge locus only: cells are all theta-type graphs
};

inline constexpr int kMinMarkings = 2;
inline constexpr int kMaxMarkings = 8;

struct ChainBasis {
  int n = 0;
  int degree = 0;
  Subcomplex relative_to = Subcomplex::theta_locus;
  std::vector<ThetaGraph> cells;  // canonical, sorted, no odd automorphisms

  std::size_t size() const { return cells.size(); }
  std::optional<std::size_t> index_of(const ThetaGraph& canonical) const;
};

// Cells of degree p (p+1 edges). Throws std::invalid_argument when n lies
// outside 2..8 for the theta-locus complex.
ChainBasis build_basis(int n, int degree, Subcomplex relative_to = Subcomplex::theta_locus);

// Column j is the boundary of domain.cells[j] written in the codomain basis.
SparseRationalMatrix boundary_matrix(const ChainBasis& domain, const ChainBasis& codomain,
                                     int threads = 1);
SparseRationalMatrix boundary_matrix(int n, int degree);

struct BuildOptions {
  int threads = 1;
  std::optional<std::filesystem::path> cache_dir;
};

struct RelativeComplex {
  int n = 0;
  ChainBasis bottom;  // degree n
  ChainBasis middle;  // degree n+1
  ChainBasis top;     // degree n+2
  SparseRationalMatrix d_top;     // C_{n+2} -> C_{n+1}
  SparseRationalMatrix d_middle;  // C_{n+1} -> C_n

  const ChainBasis& basis(int degree) const;
};

RelativeComplex build_relative_complex(int n, const BuildOptions& options = {});

struct BettiNumbers {
  std::size_t top = 0;   // dim H_{n+2}
  std::size_t next = 0;  // dim H_{n+1}
};

// Throws ConsistencyError when d_middle is not surjective.
BettiNumbers betti(const RelativeComplex& complex);
BettiNumbers betti(int n, const BuildOptions& options = {});

// Throws ConsistencyError unless d_middle * d_top == 0 and d_middle is onto.
void check_complex(const RelativeComplex& complex);

// Rational Betti numbers of the complex relative to the bridge locus, indexed
// by degree 0..n+2. Intended for n <= 3, where theta-type cells are few.
std::vector<std::size_t> bridge_relative_betti(int n);

// Versioned cache of boundary matrices in the triplet format.
class MatrixCache {
 public:
  explicit MatrixCache(std::filesystem::path dir);

  std::filesystem::path path_for(int n, int degree) const;
  std::optional<SparseRationalMatrix> load(int n, int degree) const;
  void store(int n, int degree, const SparseRationalMatrix& m) const;

 private:
  std::filesystem::path dir_;
};

// Stable hash of the cell conventions; part of every cache key.
std::string code_version_hash();

}  // namespace delta2n
