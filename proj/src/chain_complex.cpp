#include "delta2n/chain_complex.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "delta2n/errors.hpp"
#include "delta2n/linear_algebra.hpp"
#include "delta2n/parallel.hpp"

namespace delta2n {

namespace {

constexpr const char* kCellConventions =
    "theta-cells/v1: canonical=lexmin(a,b,p0,p1,p2) over S3xZ2; "
    "edges path-major u->v; faces gap-closed; triplets row col num/den";

}  // namespace

std::optional<std::size_t> ChainBasis::index_of(const ThetaGraph& canonical) const {
  const auto it = std::lower_bound(cells.begin(), cells.end(), canonical);
  if (it == cells.end() || *it != canonical) return std::nullopt;
  return static_cast<std::size_t>(it - cells.begin());
}

ChainBasis build_basis(int n, int degree, Subcomplex relative_to) {
  if (relative_to == Subcomplex::theta_locus && (n < kMinMarkings || n > kMaxMarkings)) {
    throw std::invalid_argument("n = " + std::to_string(n) + " outside supported range " +
                                std::to_string(kMinMarkings) + ".." +
                                std::to_string(kMaxMarkings));
  }
  ChainBasis basis;
  basis.n = n;
  basis.degree = degree;
  basis.relative_to = relative_to;
  for (auto& g : enumerate_theta(n, degree + 1, relative_to == Subcomplex::theta_locus)) {
    if (!has_odd_automorphism(g)) basis.cells.push_back(std::move(g));
  }
  return basis;
}

SparseRationalMatrix boundary_matrix(const ChainBasis& domain, const ChainBasis& codomain,
                                     int threads) {
  if (domain.n != codomain.n || domain.degree != codomain.degree + 1 ||
      domain.relative_to != codomain.relative_to) {
    throw std::invalid_argument("boundary_matrix: bases do not form a (p, p-1) pair");
  }
  const bool keep_cyclic = domain.relative_to == Subcomplex::bridge_locus;
  const std::size_t cols = domain.size();

  // Each column is independent; collected per column and assembled in order.
  std::vector<std::vector<std::pair<int, int>>> columns(cols);
  parallel_for(cols, threads, [&](std::size_t j) {
    const ThetaGraph& g = domain.cells[j];
    std::vector<std::pair<int, int>> entries;
    for (int i = 0; i < g.edge_count(); ++i) {
      const ContractionResult face = contract(g, i);
      const bool survives =
          face.outcome == ContractionOutcome::full_theta ||
          (keep_cyclic && face.outcome == ContractionOutcome::cyclic_theta);
      if (!survives) continue;
      // Faces with odd automorphisms vanish and are absent from the basis.
      const auto row = codomain.index_of(face.image->target);
      if (!row) continue;
      const int coefficient = (i % 2 == 0 ? 1 : -1) * face.image->sign;
      entries.emplace_back(static_cast<int>(*row), coefficient);
    }
    std::sort(entries.begin(), entries.end());
    std::vector<std::pair<int, int>> merged;
    for (const auto& [r, c] : entries) {
      if (!merged.empty() && merged.back().first == r) {
        merged.back().second += c;
      } else {
        merged.emplace_back(r, c);
      }
    }
    std::erase_if(merged, [](const auto& e) { return e.second == 0; });
    columns[j] = std::move(merged);
  });

  std::vector<RationalTriplet> triplets;
  for (std::size_t j = 0; j < cols; ++j) {
    for (const auto& [r, c] : columns[j]) triplets.emplace_back(r, static_cast<int>(j), Rational(c));
  }
  SparseRationalMatrix m(static_cast<Eigen::Index>(codomain.size()), static_cast<Eigen::Index>(cols));
  m.setFromTriplets(triplets.begin(), triplets.end());
  return m;
}

SparseRationalMatrix boundary_matrix(int n, int degree) {
  return boundary_matrix(build_basis(n, degree), build_basis(n, degree - 1));
}

const ChainBasis& RelativeComplex::basis(int degree) const {
  if (degree == n) return bottom;
  if (degree == n + 1) return middle;
  if (degree == n + 2) return top;
  throw std::out_of_range("relative complex has no degree " + std::to_string(degree));
}

RelativeComplex build_relative_complex(int n, const BuildOptions& options) {
  RelativeComplex c;
  c.n = n;
  c.bottom = build_basis(n, n);
  c.middle = build_basis(n, n + 1);
  c.top = build_basis(n, n + 2);

  std::optional<MatrixCache> cache;
  if (options.cache_dir) cache.emplace(*options.cache_dir);
  auto load_or_build = [&](const ChainBasis& dom, const ChainBasis& cod) {
    if (cache) {
      if (auto hit = cache->load(n, dom.degree);
          hit && hit->rows() == static_cast<Eigen::Index>(cod.size()) &&
          hit->cols() == static_cast<Eigen::Index>(dom.size())) {
        return std::move(*hit);
      }
    }
    SparseRationalMatrix m = boundary_matrix(dom, cod, options.threads);
    if (cache) cache->store(n, dom.degree, m);
    return m;
  };
  c.d_top = load_or_build(c.top, c.middle);
  c.d_middle = load_or_build(c.middle, c.bottom);
  return c;
}

void check_complex(const RelativeComplex& c) {
  SparseRationalMatrix square = c.d_middle * c.d_top;
  if (!is_zero(square)) {
    throw ConsistencyError("d_{n+1} * d_{n+2} != 0 for n = " + std::to_string(c.n));
  }
  if (rank(c.d_middle) != c.bottom.size()) {
    throw ConsistencyError("d_{n+1} is not surjective for n = " + std::to_string(c.n));
  }
}

BettiNumbers betti(const RelativeComplex& c) {
  const std::size_t rank_middle = rank(c.d_middle);
  if (rank_middle != c.bottom.size()) {
    throw ConsistencyError("d_{n+1} is not surjective for n = " + std::to_string(c.n) +
                           " (rank " + std::to_string(rank_middle) + ", dim C_n " +
                           std::to_string(c.bottom.size()) + ")");
  }
  const std::size_t rank_top = rank(c.d_top);
  return BettiNumbers{c.top.size() - rank_top, c.middle.size() - rank_middle - rank_top};
}

BettiNumbers betti(int n, const BuildOptions& options) {
  return betti(build_relative_complex(n, options));
}

std::vector<std::size_t> bridge_relative_betti(int n) {
  // Theta-type cells have n+1..n+3 edges when all n markings sit on distinct
  // vertices; fewer markings on branch vertices means more edges.
  const int max_degree = n + 2;
  std::vector<ChainBasis> bases;
  for (int p = 0; p <= max_degree; ++p) bases.push_back(build_basis(n, p, Subcomplex::bridge_locus));
  std::vector<std::size_t> ranks(max_degree + 2, 0);  // ranks[p] = rank d_p
  for (int p = 1; p <= max_degree; ++p) {
    if (bases[p].size() == 0 || bases[p - 1].size() == 0) continue;
    ranks[p] = rank(boundary_matrix(bases[p], bases[p - 1]));
  }
  std::vector<std::size_t> betti_numbers(max_degree + 1);
  for (int p = 0; p <= max_degree; ++p) {
    betti_numbers[p] = bases[p].size() - ranks[p] - ranks[p + 1];
  }
  return betti_numbers;
}

std::string code_version_hash() {
  // FNV-1a, 64 bit.
  std::uint64_t h = 1469598103934665603ull;
  for (const char* s = kCellConventions; *s; ++s) {
    h ^= static_cast<unsigned char>(*s);
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

MatrixCache::MatrixCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path MatrixCache::path_for(int n, int degree) const {
  return dir_ / ("d_n" + std::to_string(n) + "_p" + std::to_string(degree) + "_" +
                 code_version_hash() + ".txt");
}

std::optional<SparseRationalMatrix> MatrixCache::load(int n, int degree) const {
  std::ifstream in(path_for(n, degree));
  if (!in) return std::nullopt;
  try {
    return read_triplets(in);
  } catch (const std::exception&) {
    return std::nullopt;  // corrupt entry: rebuild
  }
}

void MatrixCache::store(int n, int degree, const SparseRationalMatrix& m) const {
  std::filesystem::create_directories(dir_);
  const auto target = path_for(n, degree);
  const auto tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp);
    write_triplets(out, m);
  }
  std::filesystem::rename(tmp, target);
}

}  // namespace delta2n
