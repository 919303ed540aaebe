// One PASS/FAIL line per acceptance criterion. All comparisons are exact.
// Exit status is nonzero if any criterion fails other than the documented
// reference-data discrepancy in criterion 3.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "delta2n/chain_complex.hpp"
#include "delta2n/d25_analysis.hpp"
#include "delta2n/equivariant.hpp"
#include "delta2n/linear_algebra.hpp"
#include "delta2n/specht.hpp"
#include "delta2n/symfunc.hpp"
#include "delta2n/theta_graph.hpp"
#include "reference_data.hpp"

using namespace delta2n;

namespace {

struct Outcome {
  bool pass = true;
  bool known_discrepancy = false;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

int unexpected_failures = 0;

void report(int id, const std::string& title, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.pass = false;
    o.known_discrepancy = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream line;
  line << (o.pass ? "PASS" : "FAIL") << " [" << id << "] " << title;
  line.precision(2);
  line << std::fixed << " (" << secs << " s)";
  if (!o.detail.empty()) line << ": " << o.detail;
  std::cout << line.str() << std::endl;
  if (!o.pass && !o.known_discrepancy) ++unexpected_failures;
}

std::string show(const ClassFunction& f) {
  std::string s;
  for (const auto& v : f.values) s += (s.empty() ? "" : ",") + v.str();
  return s;
}

const RelativeComplex& complex(int n) {
  static std::map<int, RelativeComplex> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_relative_complex(n)).first;
  return it->second;
}

const HomologyCharacters& characters(int n) {
  static std::map<int, HomologyCharacters> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, homology_characters(complex(n))).first;
  return it->second;
}

RationalMatrix times_action(const RationalMatrix& d, const SignedAction& a) {
  RationalMatrix out(d.rows(), d.cols());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto col = static_cast<Eigen::Index>(i);
    out.col(col) = d.col(a.index[i]);
    if (a.sign[i] < 0) out.col(col) = -out.col(col);
  }
  return out;
}

Permutation random_permutation(int n, std::mt19937_64& rng) {
  Permutation p = identity_permutation(n);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

Outcome betti_numbers() {
  Outcome o;
  const std::map<int, std::pair<std::size_t, std::size_t>> expected = {{4, {3, 1}}, {5, {15, 5}}, {6, {86, 26}}};
  for (const auto& [n, e] : expected) {
    const BettiNumbers b = betti(complex(n));
    o.require(b.top == e.first && b.next == e.second,
              "n=" + std::to_string(n) + " got (" + std::to_string(b.top) + "," + std::to_string(b.next) + ")");
  }
  return o;
}

Outcome character_tables() {
  Outcome o;
  for (int n = 4; n <= 6; ++n) {
    const auto& row = reference::character_row(n);
    const auto& h = characters(n);
    o.require(h.top == reference::to_class_function(n, row.top), "n=" + std::to_string(n) + " top " + show(h.top));
    o.require(h.next == reference::to_class_function(n, row.next),
              "n=" + std::to_string(n) + " next " + show(h.next));
  }
  return o;
}

Outcome decompositions() {
  Outcome o;
  bool only_known = true;
  for (const auto& row : reference::decomposition_rows()) {
    if (row.n > 6) continue;
    const auto& h = characters(row.n);
    const auto top = reference::to_multiplicities(row.top);
    const auto next = reference::to_multiplicities(row.next);
    if (decompose(h.top) != top) {
      o.require(false, "n=" + std::to_string(row.n) + " H_" + std::to_string(row.n + 2) + " computed " +
                           format_decomposition(decompose(h.top)) + ", reference " + format_decomposition(top));
      // The tabulated n=6 top decomposition disagrees with the tabulated
      // n=6 top character, which the computation reproduces exactly.
      const bool table_character_agrees =
          row.n == 6 && h.top == reference::to_class_function(6, reference::character_row(6).top);
      only_known = only_known && table_character_agrees;
    }
    if (decompose(h.next) != next) {
      o.require(false, "n=" + std::to_string(row.n) + " H_" + std::to_string(row.n + 1) + " computed " +
                           format_decomposition(decompose(h.next)));
      only_known = false;
    }
  }
  if (!o.pass && only_known) {
    o.known_discrepancy = true;
    o.detail += " [known: the reference decomposition is not the decomposition of the reference character "
                "(they differ on classes 21111, 222, 321, 411)]";
  }
  return o;
}

Outcome seven_markings() {
  Outcome o;
  const auto& row = reference::character_row(7);
  const auto& h = characters(7);
  o.require(h.top == reference::to_class_function(7, row.top), "top " + show(h.top));
  o.require(h.next == reference::to_class_function(7, row.next), "next " + show(h.next));
  for (const auto& d : reference::decomposition_rows()) {
    if (d.n != 7) continue;
    o.require(decompose(h.top) == reference::to_multiplicities(d.top), "top decomposition");
    o.require(decompose(h.next) == reference::to_multiplicities(d.next), "next decomposition");
  }
  return o;
}

Outcome method_agreement() {
  Outcome o;
  for (int n = 4; n <= 5; ++n) {
    const ClassFunction oracle = kernel_character_oracle(complex(n));
    o.require(oracle == characters(n).top, "n=" + std::to_string(n) + " oracle " + show(oracle));
  }
  return o;
}

Outcome euler_check() {
  Outcome o;
  for (int n = 4; n <= 6; ++n) {
    const EulerReport r = check_euler(n, characters(n).top, characters(n).next);
    o.require(r.classes.size() == partitions(n).size(), "class count");
    for (const auto& c : r.classes) {
      o.require(c.pass(), "n=" + std::to_string(n) + " class " + c.mu.compact() + ": " + c.z2_coefficient.str() +
                              " vs " + c.bracket.str());
    }
  }
  return o;
}

ThetaGraph theta(Label a, Label b, std::vector<Label> p0, std::vector<Label> p1, std::vector<Label> p2) {
  ThetaGraph g;
  g.branch_a = a;
  g.branch_b = b;
  g.paths = {std::move(p0), std::move(p1), std::move(p2)};
  return canonicalize(g).target;
}

Outcome two_markings() {
  Outcome o;
  const std::vector<ThetaGraph> t = {theta(kUnmarked, kUnmarked, {0}, {1}, {}), theta(1, kUnmarked, {0}, {}, {}),
                                     theta(0, kUnmarked, {1}, {}, {}), theta(0, 1, {}, {}, {})};
  std::set<ThetaGraph> all;
  for (int edges = 3; edges <= 5; ++edges) {
    for (const auto& g : enumerate_theta(2, edges, false)) all.insert(g);
  }
  for (std::size_t i = 0; i < t.size(); ++i) {
    o.require(all.count(t[i]) == 1, "T_" + std::to_string(i + 1) + " not enumerated");
    o.require(has_odd_automorphism(t[i]) == (i != 0), "odd automorphism of T_" + std::to_string(i + 1));
  }
  const auto b = bridge_relative_betti(2);
  o.require(b == std::vector<std::size_t>{0, 0, 0, 0, 1}, "bridge-relative Betti numbers");
  const ChainBasis c4 = build_basis(2, 4, Subcomplex::bridge_locus);
  o.require(c4.size() == 1 && c4.cells.front() == t[0], "degree-4 cell is not T_1");
  o.require(decompose(chain_character(c4)) == Multiplicities{{Partition({2}), 1}}, "H_4 is not trivial");
  return o;
}

Outcome representation_theory() {
  Outcome o;
  std::mt19937_64 rng(8);
  for (int n = 1; n <= 8; ++n) {
    const CharacterTable t(n);
    const auto k = static_cast<Eigen::Index>(t.labels().size());
    std::int64_t squares = 0;
    for (Eigen::Index a = 0; a < k; ++a) {
      const std::int64_t d = hook_dimension(t.labels()[static_cast<std::size_t>(a)]);
      o.require(t.values()(a, 0) == d, "identity column");
      squares += d * d;
      for (Eigen::Index b = 0; b < k; ++b) {
        std::int64_t s = 0;
        for (Eigen::Index c = 0; c < k; ++c) s += t.class_sizes()[static_cast<std::size_t>(c)] * t.values()(a, c) * t.values()(b, c);
        o.require(s == (a == b ? factorial(n) : 0), "row orthogonality n=" + std::to_string(n));
      }
    }
    o.require(squares == factorial(n), "sum of squares n=" + std::to_string(n));
    for (const auto& lambda : partitions(n)) {
      const SpechtRep rho(lambda);
      for (int trial = 0; trial < 3; ++trial) {
        const Permutation g = random_permutation(n, rng), h = random_permutation(n, rng);
        o.require(rho.matrix(compose(g, h)) == rho.matrix(g) * rho.matrix(h), "multiplicativity " + lambda.compact());
      }
      if (n > 5) continue;
      Permutation s = identity_permutation(n);
      do {
        o.require(rho.matrix(s).trace() == mn_character(lambda, cycle_type(s)), "trace vs MN " + lambda.compact());
      } while (std::next_permutation(s.begin(), s.end()));
    }
  }
  return o;
}

Outcome structure() {
  Outcome o;
  std::mt19937_64 rng(9);
  for (int n = 4; n <= 6; ++n) {
    const RelativeComplex& c = complex(n);
    const std::string tag = "n=" + std::to_string(n) + " ";
    o.require(is_zero(SparseRationalMatrix(c.d_middle * c.d_top)), tag + "d^2 != 0");
    o.require(rank(c.d_middle) == c.bottom.size(), tag + "d_{n+1} not onto");
    const RationalMatrix dt = to_dense(c.d_top), dm = to_dense(c.d_middle);
    for (int trial = 0; trial < 5; ++trial) {
      const Permutation g = random_permutation(n, rng);
      o.require(act(g, c.middle) * dt == times_action(dt, act(g, c.top)), tag + "d_top not equivariant");
      if (c.bottom.size() > 0) {
        o.require(act(g, c.bottom) * dm == times_action(dm, act(g, c.middle)), tag + "d_middle not equivariant");
      }
    }
    for (int threads : {2, 4}) {
      BuildOptions b;
      b.threads = threads;
      const RelativeComplex other = build_relative_complex(n, b);
      o.require(to_dense(other.d_top) == dt && to_dense(other.d_middle) == dm, tag + "matrices vary with threads");
      CharacterOptions co;
      co.threads = threads;
      o.require(homology_character_top(other, co) == characters(n).top, tag + "characters vary with threads");
    }
  }
  return o;
}

Outcome d25_suite() {
  Outcome o;
  const RelativeComplex& c = complex(5);
  const Partition shape({3, 1, 1});
  const RationalMatrix pk = projection_on_kernel(shape, c);
  o.require(pk.trace() == 6 && rank(pk) == 6, "311-isotypic part of ker d_7 is not 6-dimensional");
  const IsotypicCycle cycle = find_isotypic_cycle(c);
  const RationalMatrix v = cycle.v;
  o.require(!v.isZero(), "v = 0");
  o.require(is_zero(to_sparse(RationalMatrix(c.d_top * v))), "dv != 0");
  o.require(isotypic_projector_apply(shape, c.top, v) == v, "P_311 v != v");
  if (!cycle.from_search) o.detail += "cycle from fallback projection";
  const RationalMatrix vb = orbit_basis(c.top, cycle.v);
  o.require(rank(vb) == 6, "orbit basis rank");
  const EquivariantIsomorphism iso = equivariant_isomorphism(c.top, vb, SpechtRep(shape));
  o.require(iso.intertwines, "h0 does not intertwine");
  o.require(iso.determinant != 0, "h0 singular");

  const std::string dir = DELTA2N_TEST_DATA;
  std::ifstream pin(dir + "/p311_kernel_projection_scaled.txt");
  const IntMatrix m = read_integer_matrix(pin, 15);
  o.require(IntMatrix(m * m) == 20 * m, "transcribed M^2 != 20M");
  o.require(m.trace() == 120, "transcribed trace(M) != 120");
  std::ifstream hin(dir + "/h0_311_scaled_unit.txt");
  const IntMatrix h0 = 20 * read_integer_matrix(hin, 6);
  o.require(h0.rows() == 6 && h0.cwiseAbs().minCoeff() == 20 && h0.cwiseAbs().maxCoeff() == 20,
            "transcribed h0 entries are not +-20");
  return o;
}

}  // namespace

int main() {
  report(1, "Betti numbers n=4,5,6", betti_numbers);
  report(2, "homology character tables n=4,5,6", character_tables);
  report(3, "decompositions n=4,5,6", decompositions);
  report(4, "n=7 characters and decompositions", seven_markings);
  report(5, "projection vs explicit kernel traces n=4,5", method_agreement);
  report(6, "z_2 Euler characteristic check n=4,5,6", euler_check);
  report(7, "two markings: theta types, odd automorphisms, trivial H_4", two_markings);
  report(8, "representation theory suite", representation_theory);
  report(9, "structural properties n=4,5,6", structure);
  report(10, "S^311 cycle and equivariant isomorphism for n=5", d25_suite);
  return unexpected_failures == 0 ? 0 : 1;
}
