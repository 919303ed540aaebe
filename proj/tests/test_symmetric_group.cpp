#include <catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "delta2n/errors.hpp"
#include "delta2n/symmetric_group.hpp"

using namespace delta2n;

namespace {

std::vector<Permutation> every_permutation(int n) {
  std::vector<Permutation> out;
  Permutation p = identity_permutation(n);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

TEST_CASE("partition parsing and printing") {
  CHECK(Partition::parse("3,1,1").parts() == std::vector<int>{3, 1, 1});
  CHECK(Partition::parse("311") == Partition({1, 3, 1}));
  CHECK(Partition::parse("1^6") == Partition({1, 1, 1, 1, 1, 1}));
  CHECK(Partition::parse("21^4") == Partition({2, 1, 1, 1, 1}));
  CHECK(Partition::parse("2^311").parts() == std::vector<int>{2, 2, 2, 1, 1});
  CHECK(Partition::parse("2^3,1,1") == Partition::parse("2^311"));
  CHECK(Partition::parse("10,1").parts() == std::vector<int>{10, 1});
  CHECK_THROWS(Partition::parse("2^"));
  CHECK_THROWS(Partition::parse("2^x,1"));
  CHECK(Partition({3, 2, 1}).to_string() == "3,2,1");
  CHECK(Partition({3, 2, 1}).compact() == "321");
  CHECK(Partition({3, 1, 1}).conjugate() == Partition({3, 1, 1}));
  CHECK(Partition({4, 2}).conjugate() == Partition({2, 2, 1, 1}));
  CHECK_THROWS(Partition({2, 0}));
  CHECK_THROWS(Partition::parse("3,,1"));
  CHECK_THROWS(Partition::parse("x1"));
}

TEST_CASE("partition counts and order") {
  const std::vector<std::size_t> p = {1, 1, 2, 3, 5, 7, 11, 15, 22};
  for (int n = 0; n <= 8; ++n) CHECK(partitions(n).size() == p[static_cast<std::size_t>(n)]);
  std::vector<std::string> names;
  for (const auto& mu : partitions(4)) names.push_back(mu.compact());
  CHECK(names == std::vector<std::string>{"1111", "211", "22", "31", "4"});
  for (int n = 1; n <= 8; ++n) {
    for (std::size_t i = 0; i < partitions(n).size(); ++i) CHECK(partition_index(partitions(n)[i]) == i);
  }
}

TEST_CASE("permutation basics") {
  const Permutation a = from_cycles(5, {{0, 1, 2}});
  const Permutation b = from_cycles(5, {{2, 3}});
  CHECK(compose(a, inverse(a)) == identity_permutation(5));
  CHECK(compose(a, b)[2] == a[b[2]]);
  CHECK(sign(a) == 1);
  CHECK(sign(b) == -1);
  CHECK(cycle_type(compose(a, b)) == Partition({4, 1}));
  CHECK(adjacent_transposition(4, 1) == Permutation{0, 2, 1, 3});
  CHECK_THROWS(from_cycles(4, {{0, 1}, {1, 2}}));
}

TEST_CASE("class sizes match brute-force counts") {
  for (int n = 1; n <= 7; ++n) {
    std::map<Partition, std::int64_t> counts;
    for (const auto& p : every_permutation(n)) ++counts[cycle_type(p)];
    std::int64_t total = 0;
    for (const auto& mu : partitions(n)) {
      CAPTURE(n, mu.compact());
      CHECK(class_size(mu) == counts[mu]);
      CHECK(cycle_type(class_representative(mu)) == mu);
      total += class_size(mu);
    }
    CHECK(total == factorial(n));
    CHECK(class_size(Partition(std::vector<int>(n, 1))) == 1);
    CHECK(class_size(Partition({n})) == factorial(n - 1));
  }
}

TEST_CASE("class representatives are consecutive blocks, longest first") {
  CHECK(class_representative(Partition({3, 2})) == from_cycles(5, {{0, 1, 2}, {3, 4}}));
  CHECK(class_representative(Partition({2, 1, 1})) == from_cycles(4, {{0, 1}}));
}

TEST_CASE("adjacent-transposition walk visits every permutation once") {
  for (int n = 1; n <= 7; ++n) {
    const auto walk = adjacent_transposition_walk(n);
    CHECK(static_cast<std::int64_t>(walk.size()) == factorial(n) - 1);
    std::set<Permutation> seen;
    Permutation h = identity_permutation(n);
    seen.insert(h);
    for (int j : walk) {
      REQUIRE(j >= 0);
      REQUIRE(j + 1 < n);
      h = compose(adjacent_transposition(n, j), h);
      seen.insert(h);
    }
    CHECK(static_cast<std::int64_t>(seen.size()) == factorial(n));
  }
}

TEST_CASE("Murnaghan-Nakayama: trivial, sign and a documented row") {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& mu : partitions(n)) {
      CHECK(mn_character(Partition({n}), mu) == 1);
      CHECK(mn_character(Partition(std::vector<int>(n, 1)), mu) == ((n - mu.length()) % 2 == 0 ? 1 : -1));
    }
  }
  const Partition l({2, 1, 1});
  std::vector<std::int64_t> row;
  for (const auto& mu : partitions(4)) row.push_back(mn_character(l, mu));
  CHECK(row == std::vector<std::int64_t>{3, -1, -1, 0, 1});
}

TEST_CASE("character tables: orthogonality, dimensions, sum of squares") {
  for (int n = 1; n <= 8; ++n) {
    const CharacterTable t(n);
    const auto& labels = t.labels();
    std::int64_t squares = 0;
    for (std::size_t a = 0; a < labels.size(); ++a) {
      const std::int64_t d = hook_dimension(labels[a]);
      CHECK(t(labels[a], partitions(n).front()) == d);
      squares += d * d;
      for (std::size_t b = 0; b < labels.size(); ++b) {
        std::int64_t s = 0;
        for (std::size_t c = 0; c < labels.size(); ++c) {
          s += t.class_sizes()[c] * t.values()(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(c)) *
               t.values()(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(c));
        }
        CHECK(s == (a == b ? factorial(n) : 0));
      }
    }
    CHECK(squares == factorial(n));
    // Column orthogonality: sum_lambda chi(mu)^2 = n!/|C(mu)|.
    for (std::size_t c = 0; c < labels.size(); ++c) {
      std::int64_t s = 0;
      for (std::size_t a = 0; a < labels.size(); ++a) {
        const auto v = t.values()(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(c));
        s += v * v;
      }
      CHECK(s * t.class_sizes()[c] == factorial(n));
    }
  }
}

TEST_CASE("hook dimensions") {
  CHECK(hook_dimension(Partition({3, 1, 1})) == 6);
  CHECK(hook_dimension(Partition({3, 2})) == 5);
  CHECK(hook_dimension(Partition({3, 2})) == mn_character(Partition({3, 2}), Partition({1, 1, 1, 1, 1})));
  for (int n = 1; n <= 8; ++n) CHECK(hook_dimension(Partition({n})) == 1);
}

TEST_CASE("decompose") {
  const CharacterTable t5(5);
  SECTION("an irreducible") {
    const Multiplicities m = decompose(t5.character(Partition({2, 1, 1, 1})));
    CHECK(m == Multiplicities{{Partition({2, 1, 1, 1}), 1}});
  }
  SECTION("a tabulated five-marking character") {
    ClassFunction f = ClassFunction::zero(5);
    const std::vector<int> v = {15, 3, -1, 0, 0, -1, 0};
    for (std::size_t i = 0; i < v.size(); ++i) f.values[i] = v[i];
    const Multiplicities expected{{Partition({4, 1}), 1}, {Partition({3, 2}), 1}, {Partition({3, 1, 1}), 1}};
    CHECK(decompose(f) == expected);
    CHECK(format_decomposition(expected) == "chi_41 + chi_32 + chi_311");
  }
  SECTION("round trip on random multiplicity maps") {
    for (int n = 2; n <= 7; ++n) {
      const CharacterTable t(n);
      Multiplicities m;
      int k = 0;
      for (const auto& l : t.labels()) {
        if (++k % 3 != 0) m[l] = k % 5;
      }
      std::erase_if(m, [](const auto& kv) { return kv.second == 0; });
      CHECK(decompose(character_of(m, t), t) == m);
    }
  }
  SECTION("errors and virtual characters") {
    ClassFunction half = t5.character(Partition({5}));
    half *= Rational(1, 2);
    CHECK_THROWS_AS(decompose(half), NotACharacter);
    const ClassFunction diff = t5.character(Partition({5})) - t5.character(Partition({4, 1}));
    CHECK_THROWS_AS(decompose(diff), NotACharacter);
    const Multiplicities v = decompose(diff, true);
    CHECK(v.at(Partition({4, 1})) == -1);
    CHECK(format_decomposition(v) == "chi_5 - chi_41");
  }
  CHECK(format_decomposition({}) == "0");
}

TEST_CASE("inner products of class functions") {
  const CharacterTable t(6);
  const ClassFunction a = t.character(Partition({3, 3}));
  CHECK(inner_product(a, a) == 1);
  CHECK(inner_product(a, t.character(Partition({2, 2, 2}))) == 0);
}
