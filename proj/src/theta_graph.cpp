#include "delta2n/theta_graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "delta2n/errors.hpp"

namespace delta2n {

int ThetaGraph::interior_count() const {
  return static_cast<int>(paths[0].size() + paths[1].size() + paths[2].size());
}

int ThetaGraph::marking_count() const {
  return interior_count() + (branch_a != kUnmarked) + (branch_b != kUnmarked);
}

bool ThetaGraph::is_full() const {
  return !paths[0].empty() && !paths[1].empty() && !paths[2].empty();
}

std::array<int, 3> ThetaGraph::path_shape() const {
  std::array<int, 3> shape{static_cast<int>(paths[0].size()),
                           static_cast<int>(paths[1].size()),
                           static_cast<int>(paths[2].size())};
  std::sort(shape.begin(), shape.end(), std::greater<>());
  return shape;
}

void validate(const ThetaGraph& g) {
  const int n = g.marking_count();
  std::vector<int> seen(n, 0);
  auto mark = [&](Label l) {
    if (l < 0 || l >= n) {
      throw MalformedGraph("marking label " + std::to_string(l) + " outside 0.." +
                           std::to_string(n - 1));
    }
    if (seen[l]++) throw MalformedGraph("duplicate marking label " + std::to_string(l));
  };
  if (g.branch_a != kUnmarked) mark(g.branch_a);
  if (g.branch_b != kUnmarked) mark(g.branch_b);
  for (const auto& path : g.paths) {
    for (Label l : path) mark(l);
  }
}

ThetaGraph relabel(const ThetaGraph& g, const std::vector<int>& sigma) {
  auto map = [&](Label l) { return l == kUnmarked ? kUnmarked : sigma.at(l); };
  ThetaGraph out;
  out.branch_a = map(g.branch_a);
  out.branch_b = map(g.branch_b);
  for (int i = 0; i < 3; ++i) {
    out.paths[i].reserve(g.paths[i].size());
    for (Label l : g.paths[i]) out.paths[i].push_back(map(l));
  }
  return out;
}

const std::array<Symmetry, 12>& symmetries() {
  static const std::array<Symmetry, 12> table = [] {
    std::array<Symmetry, 12> t;
    std::size_t k = 0;
    for (bool flip : {false, true}) {
      std::array<int, 3> perm{0, 1, 2};
      do {
        t[k++] = Symmetry{perm, flip};
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return t;
  }();
  return table;
}

ThetaGraph apply(const Symmetry& s, const ThetaGraph& g) {
  ThetaGraph out;
  out.branch_a = s.flip ? g.branch_b : g.branch_a;
  out.branch_b = s.flip ? g.branch_a : g.branch_b;
  for (int i = 0; i < 3; ++i) {
    auto& dst = out.paths[s.path_map[i]];
    dst = g.paths[i];
    if (s.flip) std::reverse(dst.begin(), dst.end());
  }
  return out;
}

namespace {

std::array<int, 3> path_offsets(const std::array<int, 3>& lengths) {
  return {0, lengths[0] + 1, lengths[0] + lengths[1] + 2};
}

std::array<int, 3> path_lengths(const ThetaGraph& g) {
  return {static_cast<int>(g.paths[0].size()), static_cast<int>(g.paths[1].size()),
          static_cast<int>(g.paths[2].size())};
}

}  // namespace

std::vector<int> edge_permutation(const Symmetry& s, const ThetaGraph& g) {
  const auto len = path_lengths(g);
  std::array<int, 3> image_len{};
  for (int i = 0; i < 3; ++i) image_len[s.path_map[i]] = len[i];
  const auto src_off = path_offsets(len);
  const auto dst_off = path_offsets(image_len);

  std::vector<int> perm(g.edge_count());
  for (int i = 0; i < 3; ++i) {
    const int edges = len[i] + 1;
    for (int j = 0; j < edges; ++j) {
      perm[src_off[i] + j] = dst_off[s.path_map[i]] + (s.flip ? edges - 1 - j : j);
    }
  }
  return perm;
}

int permutation_parity(const std::vector<int>& perm) {
  std::vector<char> seen(perm.size(), 0);
  int parity = 1;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = 1;
      ++len;
    }
    if (len % 2 == 0) parity = -parity;
  }
  return parity;
}

SignedIso canonicalize(const ThetaGraph& raw) {
  validate(raw);
  const auto& syms = symmetries();
  std::size_t best = 0;
  ThetaGraph best_image = raw;
  for (std::size_t k = 1; k < syms.size(); ++k) {
    ThetaGraph image = apply(syms[k], raw);
    if (image < best_image) {
      best_image = std::move(image);
      best = k;
    }
  }
  const int sign = permutation_parity(edge_permutation(syms[best], raw));
  return SignedIso{std::move(best_image), sign};
}

bool is_canonical(const ThetaGraph& g) {
  for (const auto& s : symmetries()) {
    if (apply(s, g) < g) return false;
  }
  return true;
}

namespace {

// Calls visit(ThetaGraph) for every way of distributing `labels` (in this
// order) over the three paths, with each path nonempty when full_only.
template <typename Visit>
void for_each_split(const std::vector<Label>& labels, bool full_only, Label a, Label b,
                    Visit&& visit) {
  const int m = static_cast<int>(labels.size());
  const int lo = full_only ? 1 : 0;
  for (int i = lo; i <= m; ++i) {
    for (int j = i + lo; j <= m - lo; ++j) {
      ThetaGraph g;
      g.branch_a = a;
      g.branch_b = b;
      g.paths[0].assign(labels.begin(), labels.begin() + i);
      g.paths[1].assign(labels.begin() + i, labels.begin() + j);
      g.paths[2].assign(labels.begin() + j, labels.end());
      visit(g);
    }
  }
}

}  // namespace

std::vector<ThetaGraph> enumerate_theta(int n, int edges, bool full_only) {
  const int interior = edges - 3;
  const int on_branch = n - interior;
  if (n < 0 || interior < 0 || on_branch < 0 || on_branch > 2) return {};
  if (full_only && interior < 3) return {};

  std::set<ThetaGraph> found;
  std::vector<Label> labels(n);
  std::iota(labels.begin(), labels.end(), 0);
  // Every raw placement is a permutation of the labels read as
  // (branch labels..., path labels...). A single branch label may sit on
  // either branch vertex.
  auto keep_canonical = [&](const ThetaGraph& g) {
    if (is_canonical(g)) found.insert(g);
  };
  do {
    std::vector<Label> rest(labels.begin() + on_branch, labels.end());
    switch (on_branch) {
      case 0:
        for_each_split(rest, full_only, kUnmarked, kUnmarked, keep_canonical);
        break;
      case 1:
        for_each_split(rest, full_only, labels[0], kUnmarked, keep_canonical);
        for_each_split(rest, full_only, kUnmarked, labels[0], keep_canonical);
        break;
      default:
        for_each_split(rest, full_only, labels[0], labels[1], keep_canonical);
    }
  } while (std::next_permutation(labels.begin(), labels.end()));
  return {found.begin(), found.end()};
}

std::vector<Automorphism> automorphisms(const ThetaGraph& g) {
  std::vector<Automorphism> out;
  for (const auto& s : symmetries()) {
    if (apply(s, g) == g) {
      out.push_back({s, permutation_parity(edge_permutation(s, g))});
    }
  }
  return out;
}

bool has_odd_automorphism(const ThetaGraph& g) {
  for (const auto& s : symmetries()) {
    if (apply(s, g) == g && permutation_parity(edge_permutation(s, g)) < 0) return true;
  }
  return false;
}

ContractionResult contract(const ThetaGraph& g, int edge_index) {
  if (edge_index < 0 || edge_index >= g.edge_count()) {
    throw std::out_of_range("edge index " + std::to_string(edge_index) +
                            " outside 0.." + std::to_string(g.edge_count() - 1));
  }
  // Locate the path and position: edge j of path i joins vertex j and j+1 of
  // the walk u, interior..., v.
  int path = 0;
  int pos = edge_index;
  while (pos > static_cast<int>(g.paths[path].size())) {
    pos -= static_cast<int>(g.paths[path].size()) + 1;
    ++path;
  }
  const auto& interior = g.paths[path];
  const int k = static_cast<int>(interior.size());
  const bool starts_at_u = pos == 0;
  const bool ends_at_v = pos == k;

  if (!starts_at_u && !ends_at_v) {
    return {ContractionOutcome::non_injective_marking, std::nullopt};
  }
  if (starts_at_u && ends_at_v) {
    // Direct u-v edge: collapsing it destroys the theta shape.
    if (g.branch_a != kUnmarked && g.branch_b != kUnmarked) {
      return {ContractionOutcome::non_injective_marking, std::nullopt};
    }
    return {ContractionOutcome::leaves_theta_type, std::nullopt};
  }

  ThetaGraph out = g;
  auto& new_path = out.paths[path];
  if (starts_at_u) {
    if (g.branch_a != kUnmarked) return {ContractionOutcome::non_injective_marking, std::nullopt};
    out.branch_a = interior.front();
    new_path.erase(new_path.begin());
  } else {
    if (g.branch_b != kUnmarked) return {ContractionOutcome::non_injective_marking, std::nullopt};
    out.branch_b = interior.back();
    new_path.pop_back();
  }
  // The path-major labelling of `out` is exactly the gap-closed labelling
  // inherited from g, so canonicalize's sign is the cell's coefficient sign.
  const auto outcome =
      out.is_full() ? ContractionOutcome::full_theta : ContractionOutcome::cyclic_theta;
  return {outcome, canonicalize(out)};
}

namespace {

std::string label_text(Label l, int base) {
  return l == kUnmarked ? "-" : std::to_string(l + base);
}

Label parse_label(std::string_view text, int base) {
  if (text == "-") return kUnmarked;
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw MalformedGraph("bad label '" + std::string(text) + "'");
  }
  return value - base;
}

}  // namespace

std::string to_line(const ThetaGraph& g, int label_base) {
  std::ostringstream os;
  os << "a=" << label_text(g.branch_a, label_base) << ";b=" << label_text(g.branch_b, label_base);
  for (int i = 0; i < 3; ++i) {
    os << ";p" << i << '=';
    for (std::size_t j = 0; j < g.paths[i].size(); ++j) {
      if (j) os << ',';
      os << g.paths[i][j] + label_base;
    }
  }
  return os.str();
}

ThetaGraph from_line(std::string_view line, int label_base) {
  ThetaGraph g;
  std::array<bool, 5> have{};
  while (!line.empty()) {
    const auto semi = line.find(';');
    std::string_view field = line.substr(0, semi);
    line = semi == std::string_view::npos ? std::string_view{} : line.substr(semi + 1);
    const auto eq = field.find('=');
    if (eq == std::string_view::npos) throw MalformedGraph("missing '=' in '" + std::string(field) + "'");
    const auto key = field.substr(0, eq);
    auto value = field.substr(eq + 1);
    if (key == "a" || key == "b") {
      (key == "a" ? g.branch_a : g.branch_b) = parse_label(value, label_base);
      have[key == "a" ? 0 : 1] = true;
    } else if (key.size() == 2 && key[0] == 'p' && key[1] >= '0' && key[1] <= '2') {
      const int i = key[1] - '0';
      while (!value.empty()) {
        const auto comma = value.find(',');
        g.paths[i].push_back(parse_label(value.substr(0, comma), label_base));
        value = comma == std::string_view::npos ? std::string_view{} : value.substr(comma + 1);
      }
      have[2 + i] = true;
    } else {
      throw MalformedGraph("unknown field '" + std::string(key) + "'");
    }
  }
  if (!std::all_of(have.begin(), have.end(), [](bool b) { return b; })) {
    throw MalformedGraph("graph line needs fields a, b, p0, p1, p2");
  }
  validate(g);
  return g;
}

std::string to_string(ContractionOutcome outcome) {
  switch (outcome) {
    case ContractionOutcome::full_theta: return "full-theta";
    case ContractionOutcome::cyclic_theta: return "cyclic-theta";
    case ContractionOutcome::non_injective_marking: return "non-injective-marking";
    case ContractionOutcome::leaves_theta_type: return "leaves-theta-type";
  }
  return "?";
}

}  // namespace delta2n
