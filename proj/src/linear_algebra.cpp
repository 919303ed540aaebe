#include "delta2n/linear_algebra.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace delta2n {

namespace {

template <typename Value>
struct SparseRow {
  std::vector<int> cols;  // strictly increasing
  std::vector<Value> vals;

  bool empty() const { return cols.empty(); }
  int lead() const { return cols.front(); }
};

using IntRow = SparseRow<Integer>;
using ModRow = SparseRow<std::uint64_t>;

// Column order used by the eliminator: sparsest columns first, which keeps
// leading entries in short columns and limits fill-in.
std::vector<int> sparsest_first_order(const SparseRationalMatrix& m) {
  std::vector<int> order(m.cols());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return m.col(a).nonZeros() < m.col(b).nonZeros();
  });
  return order;
}

// Rows of m with columns renamed through `position` (original col -> slot),
// each row scaled by the lcm of its denominators.
std::vector<IntRow> integer_rows(const SparseRationalMatrix& m, const std::vector<int>& position) {
  std::vector<std::vector<std::pair<int, Rational>>> raw(m.rows());
  for (int j = 0; j < m.outerSize(); ++j) {
    for (SparseRationalMatrix::InnerIterator it(m, j); it; ++it) {
      if (it.value() != 0) raw[it.row()].emplace_back(position[j], it.value());
    }
  }
  std::vector<IntRow> rows;
  rows.reserve(raw.size());
  for (auto& entries : raw) {
    if (entries.empty()) continue;
    std::sort(entries.begin(), entries.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    Integer scale = 1;
    for (const auto& [c, v] : entries) {
      scale = boost::multiprecision::lcm(scale, Integer(boost::multiprecision::denominator(v)));
    }
    IntRow row;
    for (const auto& [c, v] : entries) {
      row.cols.push_back(c);
      row.vals.push_back(Integer(boost::multiprecision::numerator(v)) *
                         (scale / Integer(boost::multiprecision::denominator(v))));
    }
    rows.push_back(std::move(row));
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [](const IntRow& a, const IntRow& b) { return a.cols.size() < b.cols.size(); });
  return rows;
}

void make_primitive(IntRow& row) {
  Integer g = 0;
  for (const auto& v : row.vals) {
    g = boost::multiprecision::gcd(g, v);
    if (g == 1) break;
  }
  if (row.vals.front() < 0) g = -g;
  if (g != 1) {
    for (auto& v : row.vals) v /= g;
  }
}

// target <- alpha * target - beta * source, dropping cancelled entries.
void combine(IntRow& target, const Integer& alpha, const IntRow& source, const Integer& beta) {
  IntRow out;
  out.cols.reserve(target.cols.size() + source.cols.size());
  out.vals.reserve(target.cols.size() + source.cols.size());
  std::size_t i = 0, j = 0;
  while (i < target.cols.size() || j < source.cols.size()) {
    if (j == source.cols.size() || (i < target.cols.size() && target.cols[i] < source.cols[j])) {
      out.cols.push_back(target.cols[i]);
      out.vals.push_back(alpha * target.vals[i]);
      ++i;
    } else if (i == target.cols.size() || source.cols[j] < target.cols[i]) {
      out.cols.push_back(source.cols[j]);
      out.vals.push_back(-beta * source.vals[j]);
      ++j;
    } else {
      Integer v = alpha * target.vals[i] - beta * source.vals[j];
      if (v != 0) {
        out.cols.push_back(target.cols[i]);
        out.vals.push_back(std::move(v));
      }
      ++i;
      ++j;
    }
  }
  target = std::move(out);
}

// Eliminates `row` against the pivot rows, in increasing leading column.
// Returns true if a new pivot row was produced.
bool reduce_into(IntRow row, std::vector<IntRow>& pivots, std::vector<int>& pivot_of_col) {
  while (!row.empty()) {
    const int c = row.lead();
    const int p = pivot_of_col[c];
    if (p < 0) {
      make_primitive(row);
      pivot_of_col[c] = static_cast<int>(pivots.size());
      pivots.push_back(std::move(row));
      return true;
    }
    const IntRow& pivot = pivots[p];
    const Integer g = boost::multiprecision::gcd(pivot.vals.front(), row.vals.front());
    combine(row, pivot.vals.front() / g, pivot, row.vals.front() / g);
    if (!row.empty()) make_primitive(row);
  }
  return false;
}

struct Echelon {
  std::vector<IntRow> pivots;
  std::vector<int> pivot_of_col;  // in permuted column slots
  std::vector<int> slot_to_col;   // permuted slot -> original column
};

Echelon echelon(const SparseRationalMatrix& m) {
  Echelon e;
  e.slot_to_col = sparsest_first_order(m);
  std::vector<int> position(m.cols());
  for (int s = 0; s < static_cast<int>(e.slot_to_col.size()); ++s) position[e.slot_to_col[s]] = s;
  e.pivot_of_col.assign(m.cols(), -1);
  for (auto& row : integer_rows(m, position)) {
    reduce_into(std::move(row), e.pivots, e.pivot_of_col);
  }
  return e;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  std::uint64_t result = 1, base = a % p, exp = p - 2;
  while (exp) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

std::uint64_t reduce_mod(const Integer& z, std::uint64_t p) {
  Integer r = z % Integer(p);
  if (r < 0) r += p;
  return r.convert_to<std::uint64_t>();
}

}  // namespace

std::size_t rank(const SparseRationalMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return echelon(m).pivots.size();
}

std::size_t rank_mod_p(const SparseRationalMatrix& m, std::uint32_t prime) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  const std::uint64_t p = prime;
  const auto order = sparsest_first_order(m);
  std::vector<int> position(m.cols());
  for (int s = 0; s < static_cast<int>(order.size()); ++s) position[order[s]] = s;

  std::vector<std::vector<std::pair<int, std::uint64_t>>> raw(m.rows());
  for (int j = 0; j < m.outerSize(); ++j) {
    for (SparseRationalMatrix::InnerIterator it(m, j); it; ++it) {
      const std::uint64_t num = reduce_mod(boost::multiprecision::numerator(it.value()), p);
      const std::uint64_t den = reduce_mod(boost::multiprecision::denominator(it.value()), p);
      if (den == 0) throw std::domain_error("denominator divisible by the rank prime");
      const std::uint64_t v = num * mod_inverse(den, p) % p;
      if (v) raw[it.row()].emplace_back(position[j], v);
    }
  }
  std::vector<ModRow> rows;
  for (auto& entries : raw) {
    if (entries.empty()) continue;
    std::sort(entries.begin(), entries.end());
    ModRow row;
    for (const auto& [c, v] : entries) {
      row.cols.push_back(c);
      row.vals.push_back(v);
    }
    rows.push_back(std::move(row));
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [](const ModRow& a, const ModRow& b) { return a.cols.size() < b.cols.size(); });

  std::vector<ModRow> pivots;
  std::vector<int> pivot_of_col(m.cols(), -1);
  for (auto& row : rows) {
    while (!row.empty()) {
      const int q = pivot_of_col[row.lead()];
      if (q < 0) {
        const std::uint64_t inv = mod_inverse(row.vals.front(), p);
        for (auto& v : row.vals) v = v * inv % p;
        pivot_of_col[row.lead()] = static_cast<int>(pivots.size());
        pivots.push_back(std::move(row));
        break;
      }
      const ModRow& pivot = pivots[q];
      const std::uint64_t factor = row.vals.front();
      ModRow out;
      std::size_t i = 0, j = 0;
      while (i < row.cols.size() || j < pivot.cols.size()) {
        if (j == pivot.cols.size() || (i < row.cols.size() && row.cols[i] < pivot.cols[j])) {
          out.cols.push_back(row.cols[i]);
          out.vals.push_back(row.vals[i]);
          ++i;
        } else if (i == row.cols.size() || pivot.cols[j] < row.cols[i]) {
          out.cols.push_back(pivot.cols[j]);
          out.vals.push_back((p - factor * pivot.vals[j] % p) % p);
          ++j;
        } else {
          const std::uint64_t v = (row.vals[i] + p - factor * pivot.vals[j] % p) % p;
          if (v) {
            out.cols.push_back(row.cols[i]);
            out.vals.push_back(v);
          }
          ++i;
          ++j;
        }
      }
      row = std::move(out);
    }
  }
  return pivots.size();
}

KernelBasis kernel(const SparseRationalMatrix& m) {
  const int ncols = static_cast<int>(m.cols());
  Echelon e = echelon(m);

  // Back-substitution to reduced form: walk pivots by decreasing leading slot
  // and clear that slot from every pivot row with a smaller leading slot.
  std::vector<int> by_lead(e.pivots.size());
  std::iota(by_lead.begin(), by_lead.end(), 0);
  std::sort(by_lead.begin(), by_lead.end(),
            [&](int a, int b) { return e.pivots[a].lead() > e.pivots[b].lead(); });
  for (int p : by_lead) {
    const IntRow& pivot = e.pivots[p];
    const int c = pivot.lead();
    for (auto& other : e.pivots) {
      if (&other == &pivot || other.lead() >= c) continue;
      const auto it = std::lower_bound(other.cols.begin(), other.cols.end(), c);
      if (it == other.cols.end() || *it != c) continue;
      const Integer& b = other.vals[it - other.cols.begin()];
      const Integer g = boost::multiprecision::gcd(pivot.vals.front(), b);
      const Integer beta = b / g;
      combine(other, pivot.vals.front() / g, pivot, beta);
      make_primitive(other);
    }
  }

  std::vector<char> is_pivot(ncols, 0);
  for (const auto& row : e.pivots) is_pivot[row.lead()] = 1;
  std::vector<int> free_slots;
  std::vector<int> free_index(ncols, -1);
  for (int s = 0; s < ncols; ++s) {
    if (!is_pivot[s]) {
      free_index[s] = static_cast<int>(free_slots.size());
      free_slots.push_back(s);
    }
  }

  KernelBasis out;
  std::vector<RationalTriplet> triplets;
  for (std::size_t k = 0; k < free_slots.size(); ++k) {
    triplets.emplace_back(e.slot_to_col[free_slots[k]], static_cast<int>(k), Rational(1));
    out.free_rows.push_back(e.slot_to_col[free_slots[k]]);
  }
  // Row `row` reads lead * x_lead + sum_f row[f] * x_f = 0.
  for (const auto& row : e.pivots) {
    const Integer& lead = row.vals.front();
    for (std::size_t i = 1; i < row.cols.size(); ++i) {
      const int k = free_index[row.cols[i]];
      triplets.emplace_back(e.slot_to_col[row.lead()], k, Rational(-row.vals[i], lead));
    }
  }
  out.basis.resize(m.cols(), static_cast<Eigen::Index>(free_slots.size()));
  out.basis.setFromTriplets(triplets.begin(), triplets.end());
  return out;
}

SparseRationalMatrix kernel_basis(const SparseRationalMatrix& m) { return kernel(m).basis; }

void prune_zeros(SparseRationalMatrix& m) {
  m.prune([](const Eigen::Index&, const Eigen::Index&, const Rational& v) { return v != 0; });
}

bool is_zero(const SparseRationalMatrix& m) {
  for (int j = 0; j < m.outerSize(); ++j) {
    for (SparseRationalMatrix::InnerIterator it(m, j); it; ++it) {
      if (it.value() != 0) return false;
    }
  }
  return true;
}

RationalMatrix to_dense(const SparseRationalMatrix& m) {
  RationalMatrix out = RationalMatrix::Zero(m.rows(), m.cols());
  for (int j = 0; j < m.outerSize(); ++j) {
    for (SparseRationalMatrix::InnerIterator it(m, j); it; ++it) out(it.row(), j) = it.value();
  }
  return out;
}

std::optional<RationalMatrix> solve_in_column_span(const RationalMatrix& a,
                                                   const RationalMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve_in_column_span: row mismatch");
  const Eigen::Index rows = a.rows(), cols = a.cols();
  RationalMatrix aug(rows, cols + b.cols());
  aug << a, b;
  // Gauss-Jordan on the first `cols` columns.
  std::vector<Eigen::Index> pivot_row(cols, -1);
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols; ++c) {
    Eigen::Index found = -1;
    for (Eigen::Index i = r; i < rows; ++i) {
      if (aug(i, c) != 0) {
        found = i;
        break;
      }
    }
    if (found < 0) return std::nullopt;  // rank deficient
    aug.row(r).swap(aug.row(found));
    const Rational inv = 1 / aug(r, c);
    aug.row(r) *= inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || aug(i, c) == 0) continue;
      const Rational f = aug(i, c);
      aug.row(i) -= f * aug.row(r);
    }
    pivot_row[c] = r++;
  }
  for (Eigen::Index i = r; i < rows; ++i) {
    for (Eigen::Index j = cols; j < aug.cols(); ++j) {
      if (aug(i, j) != 0) return std::nullopt;  // b outside the span
    }
  }
  return RationalMatrix(aug.block(0, cols, cols, b.cols()));
}

void write_triplets(std::ostream& os, const SparseRationalMatrix& m) {
  os << m.rows() << ' ' << m.cols() << ' ' << m.nonZeros() << '\n';
  for (int j = 0; j < m.outerSize(); ++j) {
    for (SparseRationalMatrix::InnerIterator it(m, j); it; ++it) {
      os << it.row() << ' ' << j << ' ' << boost::multiprecision::numerator(it.value()) << '/'
         << boost::multiprecision::denominator(it.value()) << '\n';
    }
  }
}

SparseRationalMatrix read_triplets(std::istream& is) {
  long long rows = 0, cols = 0, nnz = 0;
  if (!(is >> rows >> cols >> nnz) || rows < 0 || cols < 0 || nnz < 0) {
    throw std::runtime_error("triplet file: bad header");
  }
  std::vector<RationalTriplet> triplets;
  triplets.reserve(nnz);
  for (long long k = 0; k < nnz; ++k) {
    long long i = 0, j = 0;
    std::string value;
    if (!(is >> i >> j >> value) || i < 0 || i >= rows || j < 0 || j >= cols) {
      throw std::runtime_error("triplet file: bad entry " + std::to_string(k));
    }
    const auto slash = value.find('/');
    Rational q = slash == std::string::npos
                     ? Rational(Integer(value))
                     : Rational(Integer(value.substr(0, slash)), Integer(value.substr(slash + 1)));
    triplets.emplace_back(i, j, q);
  }
  SparseRationalMatrix m(rows, cols);
  m.setFromTriplets(triplets.begin(), triplets.end());
  prune_zeros(m);
  return m;
}

}  // namespace delta2n
