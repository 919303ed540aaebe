#pragma once

// Young's natural representation of S_n on the Specht module S^lambda.
//
// Basis: the polytabloids e_t of the standard tableaux t of shape lambda,
// ordered lexicographically by row-reading word. sigma acts by
// sigma.e_t = e_{sigma t}, and e_{sigma t} is rewritten in the standard basis
// by straightening through tabloids, so every matrix has integer entries.

#include <memory>
#include <vector>

#include "delta2n/scalar.hpp"
#include "delta2n/symmetric_group.hpp"

namespace delta2n {

// Rows of entries from 0..n-1.
using Tableau = std::vector<std::vector<int>>;

// Standard tableaux of shape lambda, ordered by row-reading word.
std::vector<Tableau> standard_tableaux(const Partition& lambda);

class SpechtRep {
 public:
  explicit SpechtRep(Partition lambda);

  const Partition& shape() const { return shape_; }
  int n() const { return shape_.size(); }
  Eigen::Index dimension() const { return static_cast<Eigen::Index>(tableaux_.size()); }
  const std::vector<Tableau>& tableaux() const { return tableaux_; }

  // rho((i i+1)), precomputed.
  const IntMatrix& generator(int i) const { return generators_.at(i); }
  // rho(sigma), straightened directly from the tableaux sigma t.
  IntMatrix matrix(const Permutation& sigma) const;

 private:
  struct Straightener;

  IntVector straighten(const Tableau& t) const;

  Partition shape_;
  std::vector<Tableau> tableaux_;
  std::shared_ptr<const Straightener> straightener_;
  std::vector<IntMatrix> generators_;
};

}  // namespace delta2n
