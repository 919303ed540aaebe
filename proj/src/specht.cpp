#include "delta2n/specht.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace delta2n {

namespace {

// A tabloid is recorded as the row index of every label; the lexicographic
// order on these keys (label 0 most significant, smaller row first) extends
// the dominance order on tabloids.
using TabloidKey = std::vector<std::int8_t>;
using TabloidVector = std::map<TabloidKey, std::int64_t>;

void place(const std::vector<int>& shape, int next, int n, Tableau& t, std::vector<Tableau>& out) {
  if (next == n) {
    out.push_back(t);
    return;
  }
  for (std::size_t r = 0; r < shape.size(); ++r) {
    const auto len = t[r].size();
    if (len == static_cast<std::size_t>(shape[r])) continue;
    if (r > 0 && t[r - 1].size() <= len) continue;
    t[r].push_back(next);
    place(shape, next + 1, n, t, out);
    t[r].pop_back();
  }
}

std::vector<int> reading_word(const Tableau& t) {
  std::vector<int> w;
  for (const auto& row : t) w.insert(w.end(), row.begin(), row.end());
  return w;
}

TabloidKey tabloid_of(const Tableau& t, int n) {
  TabloidKey key(n);
  for (std::size_t r = 0; r < t.size(); ++r) {
    for (int x : t[r]) key[x] = static_cast<std::int8_t>(r);
  }
  return key;
}

// e_t = sum over the column group C_t of sign(c) {c t}.
TabloidVector polytabloid(const Tableau& t, int n) {
  std::vector<std::vector<int>> columns;
  for (std::size_t j = 0; j < t.front().size(); ++j) {
    std::vector<int> col;
    for (const auto& row : t) {
      if (j < row.size()) col.push_back(row[j]);
    }
    columns.push_back(std::move(col));
  }
  TabloidVector out;
  TabloidKey key = tabloid_of(t, n);
  auto recurse = [&](auto&& self, std::size_t c, int sgn) -> void {
    if (c == columns.size()) {
      out[key] += sgn;
      return;
    }
    const auto& col = columns[c];
    std::vector<int> rows(col.size());
    std::iota(rows.begin(), rows.end(), 0);
    do {
      for (std::size_t k = 0; k < col.size(); ++k) key[col[k]] = static_cast<std::int8_t>(rows[k]);
      self(self, c + 1, sgn * sign(rows));
    } while (std::next_permutation(rows.begin(), rows.end()));
    for (std::size_t k = 0; k < col.size(); ++k) key[col[k]] = static_cast<std::int8_t>(k);
  };
  recurse(recurse, 0, 1);
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

}  // namespace

std::vector<Tableau> standard_tableaux(const Partition& lambda) {
  std::vector<Tableau> out;
  Tableau t(lambda.length());
  place(lambda.parts(), 0, lambda.size(), t, out);
  std::sort(out.begin(), out.end(),
            [](const Tableau& a, const Tableau& b) { return reading_word(a) < reading_word(b); });
  return out;
}

struct SpechtRep::Straightener {
  std::map<TabloidKey, std::size_t> index_of_standard;
  std::vector<TabloidVector> standard_polytabloids;
};

SpechtRep::SpechtRep(Partition lambda)
    : shape_(std::move(lambda)), tableaux_(standard_tableaux(shape_)) {
  const int n = shape_.size();
  auto s = std::make_shared<Straightener>();
  for (std::size_t k = 0; k < tableaux_.size(); ++k) {
    s->index_of_standard.emplace(tabloid_of(tableaux_[k], n), k);
    s->standard_polytabloids.push_back(polytabloid(tableaux_[k], n));
  }
  straightener_ = std::move(s);
  for (int i = 0; i + 1 < n; ++i) generators_.push_back(matrix(adjacent_transposition(n, i)));
}

IntVector SpechtRep::straighten(const Tableau& t) const {
  const Straightener& cache = *straightener_;

  IntVector coords = IntVector::Zero(dimension());
  TabloidVector rest = polytabloid(t, shape_.size());
  while (!rest.empty()) {
    const auto& [top_key, top_coeff] = *rest.begin();
    const auto found = cache.index_of_standard.find(top_key);
    if (found == cache.index_of_standard.end()) {
      throw std::logic_error("straightening reached a non-standard leading tabloid");
    }
    const std::int64_t c = top_coeff;
    coords(static_cast<Eigen::Index>(found->second)) += c;
    for (const auto& [key, v] : cache.standard_polytabloids[found->second]) {
      auto& slot = rest[key];
      slot -= c * v;
      if (slot == 0) rest.erase(key);
    }
  }
  return coords;
}

IntMatrix SpechtRep::matrix(const Permutation& sigma) const {
  if (static_cast<int>(sigma.size()) != n()) throw std::invalid_argument("SpechtRep: wrong degree");
  IntMatrix m(dimension(), dimension());
  for (Eigen::Index j = 0; j < dimension(); ++j) {
    Tableau moved = tableaux_[static_cast<std::size_t>(j)];
    for (auto& row : moved) {
      for (int& x : row) x = sigma[x];
    }
    m.col(j) = straighten(moved);
  }
  return m;
}

}  // namespace delta2n
