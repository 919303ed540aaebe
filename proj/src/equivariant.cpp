#include "delta2n/equivariant.hpp"

#include <cstdlib>
#include <random>
#include <stdexcept>

#include "delta2n/errors.hpp"
#include "delta2n/linear_algebra.hpp"
#include "delta2n/parallel.hpp"

namespace delta2n {

std::int64_t SignedAction::trace() const {
  std::int64_t t = 0;
  for (std::size_t i = 0; i < index.size(); ++i) {
    if (index[i] == static_cast<std::int32_t>(i)) t += sign[i];
  }
  return t;
}

SparseRationalMatrix SignedAction::matrix() const {
  std::vector<RationalTriplet> triplets;
  triplets.reserve(index.size());
  for (std::size_t i = 0; i < index.size(); ++i) {
    triplets.emplace_back(index[i], static_cast<int>(i), Rational(sign[i]));
  }
  const auto n = static_cast<Eigen::Index>(index.size());
  SparseRationalMatrix m(n, n);
  m.setFromTriplets(triplets.begin(), triplets.end());
  return m;
}

SignedAction act(const Permutation& sigma, const ChainBasis& basis) {
  if (static_cast<int>(sigma.size()) != basis.n) {
    throw std::invalid_argument("act: permutation degree differs from marking count");
  }
  SignedAction a;
  a.index.resize(basis.size());
  a.sign.resize(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const SignedIso image = canonicalize(relabel(basis.cells[i], sigma));
    const auto j = basis.index_of(image.target);
    if (!j) throw ConsistencyError("basis is not closed under the S_n action: " + to_line(image.target));
    a.index[i] = static_cast<std::int32_t>(*j);
    a.sign[i] = static_cast<std::int8_t>(image.sign);
  }
  return a;
}

SignedAction compose(const SignedAction& a, const SignedAction& b) {
  if (a.size() != b.size()) throw std::invalid_argument("compose: actions on different bases");
  SignedAction c;
  c.index.resize(b.size());
  c.sign.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) {
    c.index[i] = a.index[b.index[i]];
    c.sign[i] = static_cast<std::int8_t>(b.sign[i] * a.sign[b.index[i]]);
  }
  return c;
}

ClassFunction chain_character(const ChainBasis& basis) {
  ClassFunction f = ClassFunction::zero(basis.n);
  const auto& classes = partitions(basis.n);
  for (std::size_t k = 0; k < classes.size(); ++k) {
    f.values[k] = act(class_representative(classes[k]), basis).trace();
  }
  return f;
}

IntMatrix scaled_projection(const SpechtRep& specht, const ChainBasis& basis, const IntMatrix& x) {
  const int n = basis.n;
  if (specht.n() != n) throw std::invalid_argument("scaled_projection: Specht module for another S_n");
  const std::size_t dim = basis.size();
  if (static_cast<std::size_t>(x.rows()) != dim) {
    throw std::invalid_argument("scaled_projection: vector length differs from basis size");
  }
  const auto k = static_cast<std::size_t>(x.cols());

  std::vector<SignedAction> generators;
  for (int j = 0; j + 1 < n; ++j) generators.push_back(act(adjacent_transposition(n, j), basis));

  // Row-major copies so that one chain coordinate is one contiguous block.
  std::vector<std::int64_t> in(dim * k), out(dim * k, 0);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t c = 0; c < k; ++c) {
      in[i * k + c] = x(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c));
    }
  }

  // rho(h) on chains as a signed permutation; r = row 0 of rho_specht(h^{-1}).
  std::vector<std::int32_t> where(dim);
  std::vector<std::int8_t> sign(dim, 1);
  for (std::size_t i = 0; i < dim; ++i) where[i] = static_cast<std::int32_t>(i);
  Eigen::Matrix<std::int64_t, 1, Eigen::Dynamic> r =
      Eigen::Matrix<std::int64_t, 1, Eigen::Dynamic>::Zero(specht.dimension());
  r(0) = 1;

  auto accumulate = [&](std::int64_t coefficient) {
    if (coefficient == 0) return;
    // Keeps n! * |coefficient| * |entry| well inside int64.
    if (std::llabs(coefficient) > (std::int64_t{1} << 24)) {
      throw std::overflow_error("scaled_projection: Specht coefficient too large");
    }
    for (std::size_t i = 0; i < dim; ++i) {
      const std::int64_t s = sign[i] > 0 ? coefficient : -coefficient;
      const std::int64_t* src = &in[i * k];
      std::int64_t* dst = &out[static_cast<std::size_t>(where[i]) * k];
      for (std::size_t c = 0; c < k; ++c) dst[c] += s * src[c];
    }
  };

  accumulate(1);
  for (int j : adjacent_transposition_walk(n)) {
    const SignedAction& g = generators[static_cast<std::size_t>(j)];
    for (std::size_t i = 0; i < dim; ++i) {
      sign[i] = static_cast<std::int8_t>(sign[i] * g.sign[where[i]]);
      where[i] = g.index[where[i]];
    }
    r = (r * specht.generator(j)).eval();
    accumulate(r(0));
  }

  IntMatrix y(x.rows(), x.cols());
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t c = 0; c < k; ++c) {
      y(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) = out[i * k + c];
    }
  }
  return y;
}

namespace {

Rational projection_scale(const SpechtRep& specht) {
  return Rational(specht.dimension()) / Rational(factorial(specht.n()));
}

RationalMatrix to_rational(const IntMatrix& m) {
  RationalMatrix out(m.rows(), m.cols());
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) out(i, j) = m(i, j);
  }
  return out;
}

}  // namespace

RationalMatrix projection(const SpechtRep& specht, const ChainBasis& basis, const RationalMatrix& x) {
  // Clear denominators column by column, project over Z, scale back.
  IntMatrix scaled(x.rows(), x.cols());
  std::vector<Integer> lcms(static_cast<std::size_t>(x.cols()), Integer(1));
  for (Eigen::Index j = 0; j < x.cols(); ++j) {
    Integer l = 1;
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
      l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(x(i, j)));
    }
    lcms[static_cast<std::size_t>(j)] = l;
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
      const Rational v = x(i, j) * Rational(l);
      const Integer num = boost::multiprecision::numerator(v);
      if (boost::multiprecision::abs(num) > Integer(1) << 20) {
        throw std::overflow_error("projection: input entries too large for the int64 kernel");
      }
      scaled(i, j) = num.convert_to<std::int64_t>();
    }
  }
  RationalMatrix y = to_rational(scaled_projection(specht, basis, scaled));
  const Rational s = projection_scale(specht);
  for (Eigen::Index j = 0; j < y.cols(); ++j) {
    const Rational f = s / Rational(lcms[static_cast<std::size_t>(j)]);
    for (Eigen::Index i = 0; i < y.rows(); ++i) y(i, j) *= f;
  }
  return y;
}

RationalMatrix isotypic_seed_basis(const SpechtRep& specht, const ChainBasis& basis,
                                   std::int64_t multiplicity, std::uint64_t seed, int oversample) {
  const auto dim = static_cast<Eigen::Index>(basis.size());
  if (multiplicity <= 0) return RationalMatrix(dim, 0);
  std::mt19937_64 rng(seed);
  auto draw = [&](std::int64_t count) {
    IntMatrix x(dim, count);
    for (Eigen::Index j = 0; j < count; ++j) {
      for (Eigen::Index i = 0; i < dim; ++i) x(i, j) = static_cast<std::int64_t>(rng() % 19) - 9;
    }
    return x;
  };

  const std::int64_t budget = multiplicity * std::max(oversample, 1);
  std::int64_t drawn = 0;
  std::vector<IntVector> kept;
  std::size_t kept_rank = 0;
  while (static_cast<std::int64_t>(kept.size()) < multiplicity) {
    const std::int64_t want = multiplicity - static_cast<std::int64_t>(kept.size());
    if (drawn + want > budget) {
      throw ProjectionFailure("projection onto chi_" + specht.shape().compact() + " gave rank " +
                              std::to_string(kept.size()) + " < " + std::to_string(multiplicity) +
                              " after " + std::to_string(drawn) + " seed vectors");
    }
    const IntMatrix y = scaled_projection(specht, basis, draw(want));
    drawn += want;
    if (kept.empty()) {
      // Generic seeds are independent; one rank computation settles that.
      const std::size_t r = rank(to_rational(y));
      if (r == static_cast<std::size_t>(multiplicity)) {
        for (Eigen::Index j = 0; j < y.cols(); ++j) kept.push_back(y.col(j));
        break;
      }
    }
    // Otherwise keep the projections that enlarge the span.
    for (Eigen::Index j = 0; j < y.cols(); ++j) {
      IntMatrix trial(dim, static_cast<Eigen::Index>(kept.size()) + 1);
      for (std::size_t c = 0; c < kept.size(); ++c) trial.col(static_cast<Eigen::Index>(c)) = kept[c];
      trial.col(trial.cols() - 1) = y.col(j);
      const std::size_t r = rank(to_rational(trial));
      if (r > kept_rank) {
        kept.push_back(y.col(j));
        kept_rank = r;
      }
    }
  }

  RationalMatrix out(dim, multiplicity);
  const Rational s = projection_scale(specht);
  for (Eigen::Index j = 0; j < multiplicity; ++j) {
    for (Eigen::Index i = 0; i < dim; ++i) out(i, j) = Rational(kept[static_cast<std::size_t>(j)](i)) * s;
  }
  return out;
}

namespace {

std::uint64_t seed_for(std::uint64_t seed, std::size_t lambda_index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(lambda_index)};
  std::array<std::uint32_t, 2> words{};
  seq.generate(words.begin(), words.end());
  return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

std::int64_t multiplicity_in(const ClassFunction& f, const CharacterTable& table,
                             const Partition& lambda) {
  const Rational m = inner_product(f, table.character(lambda));
  if (!is_integral(m) || m < 0) {
    throw ConsistencyError("chain character has multiplicity " + m.str() + " at chi_" + lambda.compact());
  }
  return boost::multiprecision::numerator(m).convert_to<std::int64_t>();
}

std::int64_t kernel_multiplicity_with(const Partition& lambda, const RelativeComplex& complex,
                                      std::int64_t chain_multiplicity, std::uint64_t seed,
                                      int oversample) {
  if (chain_multiplicity == 0) return 0;
  const SpechtRep specht(lambda);
  const RationalMatrix y = isotypic_seed_basis(specht, complex.top, chain_multiplicity, seed, oversample);
  const RationalMatrix image = complex.d_top * y;
  return chain_multiplicity - static_cast<std::int64_t>(rank(image));
}

}  // namespace

std::int64_t kernel_multiplicity(const Partition& lambda, const RelativeComplex& complex,
                                 std::uint64_t seed) {
  const CharacterTable table(complex.n);
  const ClassFunction chi = chain_character(complex.top);
  return kernel_multiplicity_with(lambda, complex, multiplicity_in(chi, table, lambda),
                                  seed_for(seed, partition_index(lambda)), 3);
}

ClassFunction homology_character_top(const RelativeComplex& complex, const CharacterOptions& options) {
  if (options.method == Method::kernel_trace) return kernel_character_oracle(complex);
  const CharacterTable table(complex.n);
  const ClassFunction chi = chain_character(complex.top);
  const auto& labels = table.labels();
  std::vector<std::int64_t> k(labels.size(), 0);
  // Each lambda draws from its own stream, so results do not depend on threads.
  parallel_for(labels.size(), options.threads, [&](std::size_t i) {
    k[i] = kernel_multiplicity_with(labels[i], complex, multiplicity_in(chi, table, labels[i]),
                                    seed_for(options.seed, i), options.oversample);
  });
  ClassFunction top = ClassFunction::zero(complex.n);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (k[i] != 0) top += Rational(k[i]) * table.character(labels[i]);
  }
  return top;
}

ClassFunction homology_character_next(const RelativeComplex& complex, const ClassFunction& top) {
  ClassFunction next = top - chain_character(complex.top) + chain_character(complex.middle) -
                       chain_character(complex.bottom);
  try {
    decompose(next);
  } catch (const NotACharacter& e) {
    throw ConsistencyError(std::string("Euler-derived H_{n+1} character is not a character: ") + e.what());
  }
  return next;
}

HomologyCharacters homology_characters(const RelativeComplex& complex, const CharacterOptions& options) {
  HomologyCharacters h;
  h.top = homology_character_top(complex, options);
  h.next = homology_character_next(complex, h.top);
  try {
    h.top_decomposition = decompose(h.top);
  } catch (const NotACharacter& e) {
    throw ConsistencyError(std::string("H_{n+2} character is not a character: ") + e.what());
  }
  h.next_decomposition = decompose(h.next);
  return h;
}

ClassFunction kernel_character_oracle(const RelativeComplex& complex) {
  const KernelBasis k = kernel(complex.d_top);
  const RationalMatrix basis = to_dense(k.basis);
  ClassFunction f = ClassFunction::zero(complex.n);
  const auto& classes = partitions(complex.n);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const SignedAction a = act(class_representative(classes[c]), complex.top);
    const RationalMatrix moved = a * basis;
    // The identity block of the kernel basis makes the free rows the solution.
    RationalMatrix x(basis.cols(), basis.cols());
    for (std::size_t r = 0; r < k.free_rows.size(); ++r) {
      x.row(static_cast<Eigen::Index>(r)) = moved.row(k.free_rows[r]);
    }
    const RationalMatrix check = k.basis * x;
    if (check != moved) {
      throw ConsistencyError("ker d_{n+2} is not invariant under class " + classes[c].compact());
    }
    Rational t = 0;
    for (Eigen::Index i = 0; i < x.rows(); ++i) t += x(i, i);
    f.values[c] = t;
  }
  return f;
}

}  // namespace delta2n
