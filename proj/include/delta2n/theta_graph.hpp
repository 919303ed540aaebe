#pragma once

/**
 * Theta-type n-marked genus-2 graphs.
 *
 * A theta-type graph is a subdivision of the theta graph (two branch vertices
 * u, v joined by three parallel paths) whose vertices carry pairwise distinct
 * marking labels 0..n-1. Every interior vertex of a path carries exactly one
 * label; the branch vertices carry at most one. All vertex weights are zero,
 * so the graph is determined by
 *
 *   (branch_a, branch_b, paths[0], paths[1], paths[2])
 *
 * where paths[i] lists the interior labels of path i from u to v.
 *
 * Edges carry a reference labelling: path 0's edges in u->v order, then
 * path 1's, then path 2's. Path i with k interior vertices has k+1 edges.
 *
 * Isomorphisms of theta-type graphs are the 12 symmetries S_3 x Z_2 (permute
 * paths; optionally swap u <-> v, which reverses every path).
 */

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace delta2n {

using Label = int;
inline constexpr Label kUnmarked = -1;

struct ThetaGraph {
  Label branch_a = kUnmarked;
  Label branch_b = kUnmarked;
  std::array<std::vector<Label>, 3> paths;

  // Member order defines the canonical (lexicographic) order; kUnmarked sorts
  // before every label.
  auto operator<=>(const ThetaGraph&) const = default;
  bool operator==(const ThetaGraph&) const = default;

  int marking_count() const;
  int interior_count() const;
  int edge_count() const { return interior_count() + 3; }
  // Chain degree p of a cell with p+1 edges.
  int degree() const { return edge_count() - 1; }
  // All three paths carry at least one interior marking.
  bool is_full() const;
  // Sorted path lengths, largest first, e.g. {2,2,1}.
  std::array<int, 3> path_shape() const;
};

// Throws MalformedGraph unless the labels are exactly 0..marking_count()-1,
// each used once.
void validate(const ThetaGraph& g);

// Marking relabelled by a permutation in one-line notation: label l -> sigma[l].
ThetaGraph relabel(const ThetaGraph& g, const std::vector<int>& sigma);

struct Symmetry {
  std::array<int, 3> path_map{0, 1, 2};  // path i of the source lands on path_map[i]
  bool flip = false;                     // swap u <-> v and reverse all paths

  bool operator==(const Symmetry&) const = default;
};

// The 12 symmetries in a fixed order; index 0 is the identity.
const std::array<Symmetry, 12>& symmetries();

ThetaGraph apply(const Symmetry& s, const ThetaGraph& g);

// Image of each reference edge label of g under s, as reference labels of
// apply(s, g).
std::vector<int> edge_permutation(const Symmetry& s, const ThetaGraph& g);

// +1 or -1.
int permutation_parity(const std::vector<int>& perm);

struct SignedIso {
  ThetaGraph target;
  int sign = 1;  // [raw, ref] = sign * [target, ref]
};

// Lexicographically least image of raw under the 12 symmetries, together with
// the parity of the induced edge permutation. Throws MalformedGraph.
SignedIso canonicalize(const ThetaGraph& raw);

bool is_canonical(const ThetaGraph& g);

// Canonical theta-type graphs with n markings and the given edge count,
// sorted. Out-of-range edge counts give an empty list.
std::vector<ThetaGraph> enumerate_theta(int n, int edges, bool full_only);

struct Automorphism {
  Symmetry symmetry;
  int edge_parity = 1;
};

std::vector<Automorphism> automorphisms(const ThetaGraph& g);
bool has_odd_automorphism(const ThetaGraph& g);

enum class ContractionOutcome {
  full_theta,             // result is a full theta-type graph
  cyclic_theta,           // a path emptied: all markings now lie on one cycle
  non_injective_marking,  // two markings merged onto one vertex
  leaves_theta_type,      // a direct u-v edge collapsed (only for non-full graphs)
};

struct ContractionResult {
  ContractionOutcome outcome;
  // Canonical image with the sign of the gap-closed labelling; set for
  // full_theta and cyclic_theta.
  std::optional<SignedIso> image;

  bool is_full_theta() const { return outcome == ContractionOutcome::full_theta; }
};

// Contract the edge with reference label edge_index. Remaining edges keep
// their relative order (gap-closing relabelling) before canonicalization.
// Throws std::out_of_range for an invalid edge index.
ContractionResult contract(const ThetaGraph& g, int edge_index);

// Line format: a=<label|->;b=<label|->;p0=<l,l,...>;p1=...;p2=...
// `label_base` is added to every label on output and subtracted on input
// (0 for cache files, 1 for user-facing output).
std::string to_line(const ThetaGraph& g, int label_base = 0);
ThetaGraph from_line(std::string_view line, int label_base = 0);

std::string to_string(ContractionOutcome outcome);

}  // namespace delta2n
