#pragma once

// Published homology characters and decompositions for 4 <= n <= 8, in the
// class order of delta2n::partitions(n). Transcribed by hand.

#include <map>
#include <string>
#include <vector>

#include "delta2n/symmetric_group.hpp"

namespace reference {

struct CharacterRow {
  int n;
  std::vector<int> top;   // H_{n+2}
  std::vector<int> next;  // H_{n+1}
};

inline const std::vector<CharacterRow>& character_rows() {
  static const std::vector<CharacterRow> rows = {
      {4, {3, -1, -1, 0, 1}, {1, 1, 1, 1, 1}},
      {5, {15, 3, -1, 0, 0, -1, 0}, {5, 1, 1, -1, 1, -1, 0}},
      {6, {86, 2, 10, 6, -1, -1, 2, 0, 0, 1, 0}, {26, 2, -2, -2, -1, -1, -1, 0, 0, 1, 1}},
      {7,
       {575, 5, -13, 17, -1, -1, -1, -1, -1, 1, -1, 0, 0, -1, 1},
       {155, 5, -1, -7, -1, -1, -1, 5, -1, 1, -1, 0, 0, -1, 1}},
      {8,
       {4426, 16, -2, -84, -30, 1, 1, 1, 4, 4, -2, 0, 2, 1, -2, 1, 1, 1, 0, 0, 2, 0},
       {1066, 16, -2, 12, 2, 1, 1, 1, -2, 4, -2, 0, 2, 1, -2, 1, 1, 1, 0, 2, 2, 0}},
  };
  return rows;
}

inline const CharacterRow& character_row(int n) {
  for (const auto& r : character_rows()) {
    if (r.n == n) return r;
  }
  throw std::out_of_range("no reference row");
}

inline delta2n::ClassFunction to_class_function(int n, const std::vector<int>& values) {
  delta2n::ClassFunction f = delta2n::ClassFunction::zero(n);
  for (std::size_t i = 0; i < values.size(); ++i) f.values[i] = values[i];
  return f;
}

// Decompositions keyed by compact partition strings.
struct DecompositionRow {
  int n;
  std::map<std::string, int> top;
  std::map<std::string, int> next;
};

inline const std::vector<DecompositionRow>& decomposition_rows() {
  static const std::vector<DecompositionRow> rows = {
      {4, {{"211", 1}}, {{"4", 1}}},
      {5, {{"41", 1}, {"32", 1}, {"311", 1}}, {{"32", 1}}},
      {6,
       {{"6", 1}, {"111111", 1}, {"51", 1}, {"21111", 1}, {"33", 2}, {"222", 1}, {"42", 2}, {"2211", 1},
        {"321", 2}},
       {{"411", 1}, {"321", 1}}},
      {7,
       {{"2221", 1}, {"31111", 3}, {"3211", 4}, {"322", 3}, {"331", 1}, {"4111", 3}, {"421", 5}, {"43", 1},
        {"511", 1}, {"52", 2}},
       {{"1111111", 1}, {"2221", 1}, {"3211", 1}, {"331", 1}, {"4111", 1}, {"421", 1}, {"43", 1}, {"511", 1}}},
  };
  return rows;
}

inline delta2n::Multiplicities to_multiplicities(const std::map<std::string, int>& m) {
  delta2n::Multiplicities out;
  for (const auto& [name, k] : m) out[delta2n::Partition::parse(name)] = k;
  return out;
}

}  // namespace reference
