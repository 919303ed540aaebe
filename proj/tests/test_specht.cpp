#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "delta2n/specht.hpp"
#include "oracles.hpp"

using namespace delta2n;

namespace {

std::int64_t trace(const IntMatrix& m) { return m.trace(); }

std::vector<int> reading_word(const Tableau& t) {
  std::vector<int> w;
  for (const auto& row : t) w.insert(w.end(), row.begin(), row.end());
  return w;
}

}  // namespace

TEST_CASE("standard tableaux: counts, standardness and order") {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& lambda : partitions(n)) {
      const auto ts = standard_tableaux(lambda);
      CHECK(static_cast<std::int64_t>(ts.size()) == hook_dimension(lambda));
      for (std::size_t k = 1; k < ts.size(); ++k) CHECK(reading_word(ts[k - 1]) < reading_word(ts[k]));
      for (const auto& t : ts) {
        for (std::size_t r = 0; r < t.size(); ++r) {
          CHECK(static_cast<int>(t[r].size()) == lambda.parts()[r]);
          CHECK(std::is_sorted(t[r].begin(), t[r].end()));
          if (r == 0) continue;
          for (std::size_t j = 0; j < t[r].size(); ++j) CHECK(t[r - 1][j] < t[r][j]);
        }
      }
    }
  }
}

TEST_CASE("the six standard tableaux of shape 311") {
  const auto ts = standard_tableaux(Partition({3, 1, 1}));
  REQUIRE(ts.size() == 6);
  CHECK(ts.front() == Tableau{{0, 1, 2}, {3}, {4}});
  CHECK(ts.back() == Tableau{{0, 3, 4}, {1}, {2}});
}

TEST_CASE("identity and generators") {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& lambda : partitions(n)) {
      const SpechtRep rho(lambda);
      const IntMatrix id = IntMatrix::Identity(rho.dimension(), rho.dimension());
      CHECK(rho.matrix(identity_permutation(n)) == id);
      for (int i = 0; i + 1 < n; ++i) {
        const IntMatrix& s = rho.generator(i);
        CHECK(s * s == id);
        CHECK(s == rho.matrix(adjacent_transposition(n, i)));
        if (i + 2 < n) {
          const IntMatrix& t = rho.generator(i + 1);
          CHECK(s * t * s == t * s * t);
        }
      }
    }
  }
}

TEST_CASE("Specht traces equal Murnaghan-Nakayama values on every element, n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    std::vector<int> p(n);
    for (const auto& lambda : partitions(n)) {
      const SpechtRep rho(lambda);
      Permutation sigma = identity_permutation(n);
      do {
        CAPTURE(lambda.compact());
        REQUIRE(trace(rho.matrix(sigma)) == mn_character(lambda, cycle_type(sigma)));
      } while (std::next_permutation(sigma.begin(), sigma.end()));
    }
  }
}

TEST_CASE("Specht traces on class representatives, n = 6..8") {
  for (int n = 6; n <= 8; ++n) {
    for (const auto& lambda : partitions(n)) {
      const SpechtRep rho(lambda);
      for (const auto& mu : partitions(n)) {
        CHECK(trace(rho.matrix(class_representative(mu))) == mn_character(lambda, mu));
      }
    }
  }
}

TEST_CASE("multiplicativity on random triples") {
  std::mt19937_64 rng(2024);
  for (int n = 2; n <= 8; ++n) {
    for (const auto& lambda : partitions(n)) {
      const SpechtRep rho(lambda);
      for (int trial = 0; trial < 3; ++trial) {
        const Permutation g = oracle::random_permutation(n, rng);
        const Permutation h = oracle::random_permutation(n, rng);
        CAPTURE(n, lambda.compact());
        CHECK(rho.matrix(compose(g, h)) == rho.matrix(g) * rho.matrix(h));
      }
    }
  }
}
