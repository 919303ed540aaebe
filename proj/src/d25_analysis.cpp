#include "delta2n/d25_analysis.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <random>
#include <stdexcept>

#include "delta2n/errors.hpp"
#include "delta2n/linear_algebra.hpp"

namespace delta2n {

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  Permutation p = identity_permutation(n);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

RationalMatrix isotypic_projector_apply(const Partition& lambda, const ChainBasis& basis,
                                        const RationalMatrix& x) {
  const int n = basis.n;
  RationalMatrix sum = RationalMatrix::Zero(x.rows(), x.cols());
  for (const auto& pi : all_permutations(n)) {
    const std::int64_t chi = mn_character(lambda, cycle_type(pi));
    if (chi == 0) continue;
    sum += Rational(chi) * (act(pi, basis) * x);
  }
  const Rational scale = Rational(hook_dimension(lambda)) / Rational(factorial(n));
  return scale * sum;
}

RationalMatrix projection_on_kernel(const Partition& lambda, const RelativeComplex& complex) {
  const RationalMatrix k = to_dense(kernel_basis(complex.d_top));
  const auto m = solve_in_column_span(k, isotypic_projector_apply(lambda, complex.top, k));
  if (!m) throw ConsistencyError("isotypic projector does not preserve ker d_top");
  return *m;
}

namespace {

const Partition& shape_311() {
  static const Partition p({3, 1, 1});
  return p;
}

RationalVector unit(Eigen::Index size, Eigen::Index i) {
  RationalVector e = RationalVector::Zero(size);
  e(i) = 1;
  return e;
}

bool is_zero_vector(const RationalMatrix& v) {
  for (Eigen::Index j = 0; j < v.cols(); ++j) {
    for (Eigen::Index i = 0; i < v.rows(); ++i) {
      if (v(i, j) != 0) return false;
    }
  }
  return true;
}

}  // namespace

IsotypicCycle find_isotypic_cycle(const RelativeComplex& complex, std::uint64_t seed) {
  if (complex.n != kD25Markings) throw std::invalid_argument("find_isotypic_cycle needs n = 5");
  const ChainBasis& basis = complex.top;
  const auto dim = static_cast<Eigen::Index>(basis.size());
  const SignedAction rotate = act(from_cycles(kD25Markings, {{0, 1, 2, 3, 4}}), basis);

  // One orbit sum per <(01234)>-orbit, represented by its smallest cell.
  std::vector<Eigen::Index> reps311, reps221;
  std::vector<char> seen(basis.size(), 0);
  std::vector<RationalVector> orbit_sum(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (seen[i]) continue;
    RationalVector sum = RationalVector::Zero(dim);
    RationalVector term = unit(dim, static_cast<Eigen::Index>(i));
    for (int k = 0; k < kD25Markings; ++k) {
      sum += term;
      for (Eigen::Index j = 0; j < dim; ++j) {
        if (term(j) != 0) seen[static_cast<std::size_t>(j)] = 1;
      }
      term = rotate * term;
    }
    orbit_sum[i] = sum;
    const auto shape = basis.cells[i].path_shape();
    if (shape == std::array<int, 3>{3, 1, 1}) reps311.push_back(static_cast<Eigen::Index>(i));
    if (shape == std::array<int, 3>{2, 2, 1}) reps221.push_back(static_cast<Eigen::Index>(i));
  }

  // Boundaries and projections are linear, so evaluate them once per orbit.
  auto columns_of = [&](const std::vector<Eigen::Index>& reps) {
    RationalMatrix m(dim, static_cast<Eigen::Index>(reps.size()));
    for (std::size_t c = 0; c < reps.size(); ++c) m.col(static_cast<Eigen::Index>(c)) = orbit_sum[reps[c]];
    return m;
  };
  const RationalMatrix o311 = columns_of(reps311), o221 = columns_of(reps221);
  const RationalMatrix d311 = complex.d_top * o311, d221 = complex.d_top * o221;
  const RationalMatrix p311 = isotypic_projector_apply(shape_311(), basis, o311);
  const RationalMatrix p221 = isotypic_projector_apply(shape_311(), basis, o221);

  for (Eigen::Index a = 0; a < o311.cols(); ++a) {
    for (Eigen::Index b = a + 1; b < o311.cols(); ++b) {
      for (Eigen::Index c = 0; c < o221.cols(); ++c) {
        for (Eigen::Index d = c + 1; d < o221.cols(); ++d) {
          // The overall sign is irrelevant; fix the first coefficient to +1.
          for (int signs = 0; signs < 8; ++signs) {
            const int sb = signs & 1 ? -1 : 1, sc = signs & 2 ? -1 : 1, sd = signs & 4 ? -1 : 1;
            const Rational qb = sb, qc = sc, qd = sd;
            const RationalVector boundary =
                d311.col(a) + qb * d311.col(b) + qc * d221.col(c) + qd * d221.col(d);
            if (!is_zero_vector(boundary)) continue;
            const RationalVector v = o311.col(a) + qb * o311.col(b) + qc * o221.col(c) + qd * o221.col(d);
            if (is_zero_vector(v)) continue;
            const RationalVector pv = p311.col(a) + qb * p311.col(b) + qc * p221.col(c) + qd * p221.col(d);
            if (pv != v) continue;
            IsotypicCycle found;
            found.v = v;
            found.from_search = true;
            found.seed = {{basis.cells[reps311[a]], 1},
                          {basis.cells[reps311[b]], sb},
                          {basis.cells[reps221[c]], sc},
                          {basis.cells[reps221[d]], sd}};
            return found;
          }
        }
      }
    }
  }

  // Fallback: project a seeded random cycle.
  const RationalMatrix k = to_dense(kernel_basis(complex.d_top));
  std::mt19937_64 rng(seed);
  RationalVector coefficients(k.cols());
  for (Eigen::Index j = 0; j < k.cols(); ++j) coefficients(j) = static_cast<std::int64_t>(rng() % 19) - 9;
  IsotypicCycle fallback;
  fallback.v = isotypic_projector_apply(shape_311(), basis, k * coefficients).col(0);
  if (is_zero_vector(fallback.v)) throw DegenerateVector("fallback projection of a random cycle vanished");
  return fallback;
}

std::vector<Permutation> orbit_permutations() {
  const int n = kD25Markings;
  return {identity_permutation(n),          from_cycles(n, {{0, 1}}),    from_cycles(n, {{0, 2}}),
          from_cycles(n, {{1, 2}}),         from_cycles(n, {{0, 1, 2}}), from_cycles(n, {{0, 2, 1}})};
}

RationalMatrix orbit_basis(const ChainBasis& basis, const RationalVector& v) {
  const auto perms = orbit_permutations();
  RationalMatrix out(v.size(), static_cast<Eigen::Index>(perms.size()));
  for (std::size_t i = 0; i < perms.size(); ++i) {
    out.col(static_cast<Eigen::Index>(i)) = act(perms[i], basis) * v;
  }
  const std::size_t r = rank(out);
  if (r != perms.size()) {
    throw DegenerateVector("orbit of v has rank " + std::to_string(r) + ", expected " +
                           std::to_string(perms.size()));
  }
  return out;
}

EquivariantIsomorphism equivariant_isomorphism(const ChainBasis& basis, const RationalMatrix& v_basis,
                                               const SpechtRep& specht) {
  if (specht.dimension() != v_basis.cols()) {
    throw std::invalid_argument("equivariant_isomorphism: dimensions differ");
  }
  const auto d = v_basis.cols();
  const auto group = all_permutations(basis.n);
  std::vector<RationalMatrix> rho1, rho2;
  for (const auto& pi : group) {
    const auto r1 = solve_in_column_span(v_basis, act(pi, basis) * v_basis);
    if (!r1) throw ConsistencyError("span of the orbit basis is not S_n-invariant");
    rho1.push_back(*r1);
    rho2.push_back(specht.matrix(pi).cast<Rational>());
  }
  EquivariantIsomorphism iso;
  iso.h0 = RationalMatrix::Zero(d, d);
  for (std::size_t g = 0; g < group.size(); ++g) {
    iso.h0 += specht.matrix(inverse(group[g])).cast<Rational>() * rho1[g];
  }
  iso.intertwines = true;
  for (std::size_t g = 0; g < group.size(); ++g) {
    if (RationalMatrix(iso.h0 * rho1[g]) != RationalMatrix(rho2[g] * iso.h0)) iso.intertwines = false;
  }
  // Exact determinant by elimination.
  RationalMatrix m = iso.h0;
  Rational det = 1;
  for (Eigen::Index c = 0; c < d; ++c) {
    Eigen::Index p = c;
    while (p < d && m(p, c) == 0) ++p;
    if (p == d) {
      det = 0;
      break;
    }
    if (p != c) {
      m.row(p).swap(m.row(c));
      det = -det;
    }
    det *= m(c, c);
    for (Eigen::Index i = c + 1; i < d; ++i) {
      if (m(i, c) == 0) continue;
      const Rational f = m(i, c) / m(c, c);
      m.row(i) -= f * m.row(c);
    }
  }
  iso.determinant = det;
  return iso;
}

IntMatrix read_integer_matrix(std::istream& is, Eigen::Index cols) {
  std::vector<std::int64_t> values;
  std::int64_t x;
  while (is >> x) values.push_back(x);
  if (!is.eof()) throw std::runtime_error("read_integer_matrix: non-integer token");
  if (cols <= 0 || values.size() % static_cast<std::size_t>(cols) != 0) {
    throw std::runtime_error("read_integer_matrix: entry count not a multiple of the column count");
  }
  const auto rows = static_cast<Eigen::Index>(values.size()) / cols;
  IntMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = values[static_cast<std::size_t>(i * cols + j)];
  }
  return m;
}

}  // namespace delta2n
