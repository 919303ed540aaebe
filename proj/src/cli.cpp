#include "delta2n/cli.hpp"

#include <chrono>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include <json.hpp>

#include "delta2n/chain_complex.hpp"
#include "delta2n/d25_analysis.hpp"
#include "delta2n/errors.hpp"
#include "delta2n/linear_algebra.hpp"
#include "delta2n/symfunc.hpp"

namespace delta2n {

namespace {

using nlohmann::ordered_json;

// Thrown for user errors that should exit with status 1.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Stopwatch {
 public:
  void start(std::string stage) {
    stage_ = std::move(stage);
    begin_ = std::chrono::steady_clock::now();
  }
  void stop() {
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - begin_;
    timings_.emplace_back(stage_, dt.count());
  }
  const std::vector<std::pair<std::string, double>>& timings() const { return timings_; }

 private:
  std::string stage_;
  std::chrono::steady_clock::time_point begin_;
  std::vector<std::pair<std::string, double>> timings_;
};

struct Context {
  const RunConfig& config;
  std::ostream& out;
  std::ostream& err;
  Stopwatch clock;
  ordered_json payload = ordered_json::object();
  bool failed = false;
};

ordered_json rational_json(const Rational& q) {
  if (is_integral(q)) return boost::multiprecision::numerator(q).convert_to<long long>();
  return q.str();
}

std::string label_for(const Partition& p) { return p.compact(); }

ordered_json decomposition_json(const Multiplicities& m) {
  ordered_json j = ordered_json::object();
  for (auto it = m.rbegin(); it != m.rend(); ++it) j[it->first.to_string()] = it->second;
  return j;
}

void require_range(int n, int lo, int hi) {
  if (n < lo || n > hi) {
    throw ConfigError("--n must lie in " + std::to_string(lo) + ".." + std::to_string(hi) +
                      " for this subcommand");
  }
}

void warn_if_expensive(Context& ctx) {
  if (ctx.config.n >= 8) {
    ctx.err << "warning: n = 8 needs hours of CPU time and tens of GB of memory for exact "
               "elimination; consider --cache and --threads\n";
  }
}

RelativeComplex build_complex(Context& ctx) {
  BuildOptions options;
  options.threads = ctx.config.threads;
  options.cache_dir = ctx.config.cache_dir;
  ctx.clock.start("build_complex");
  RelativeComplex c = build_relative_complex(ctx.config.n, options);
  ctx.clock.stop();
  return c;
}

// Rows of a character table in the column layout of the usual printed tables.
void print_table(std::ostream& out, int n, const std::vector<std::pair<std::string, ClassFunction>>& rows) {
  const auto& classes = partitions(n);
  std::size_t head = std::string("class").size();
  for (const auto& [name, f] : rows) head = std::max(head, name.size());
  std::vector<std::size_t> width(classes.size());
  for (std::size_t c = 0; c < classes.size(); ++c) {
    width[c] = label_for(classes[c]).size();
    for (const auto& [name, f] : rows) width[c] = std::max(width[c], f.values[c].str().size());
  }
  out << std::left << std::setw(static_cast<int>(head)) << "class";
  for (std::size_t c = 0; c < classes.size(); ++c) {
    out << "  " << std::right << std::setw(static_cast<int>(width[c])) << label_for(classes[c]);
  }
  out << '\n';
  for (const auto& [name, f] : rows) {
    out << std::left << std::setw(static_cast<int>(head)) << name;
    for (std::size_t c = 0; c < classes.size(); ++c) {
      out << "  " << std::right << std::setw(static_cast<int>(width[c])) << f.values[c].str();
    }
    out << '\n';
  }
}

ordered_json character_json(const RunConfig& config, int degree, const ClassFunction& f,
                            const Multiplicities& m) {
  ordered_json j;
  j["n"] = config.n;
  j["degree"] = degree;
  ordered_json classes = ordered_json::array(), values = ordered_json::array();
  for (std::size_t c = 0; c < f.values.size(); ++c) {
    classes.push_back(partitions(config.n)[c].to_string());
    values.push_back(rational_json(f.values[c]));
  }
  j["classes"] = classes;
  j["values"] = values;
  j["decomposition"] = decomposition_json(m);
  j["seed"] = config.seed;
  return j;
}

// --- subcommands --------------------------------------------------------------

void cmd_enumerate(Context& ctx) {
  const RunConfig& cfg = ctx.config;
  require_range(cfg.n, 2, kMaxMarkings);
  const int degree = cfg.degree.value_or(cfg.n + 2);
  ctx.clock.start("enumerate");
  const auto graphs = enumerate_theta(cfg.n, degree + 1, !cfg.all_types);
  ctx.clock.stop();
  ordered_json list = ordered_json::array();
  for (const auto& g : graphs) {
    ordered_json entry;
    entry["graph"] = to_line(g, 1);
    entry["odd_automorphism"] = has_odd_automorphism(g);
    list.push_back(entry);
  }
  ctx.payload["n"] = cfg.n;
  ctx.payload["degree"] = degree;
  ctx.payload["count"] = graphs.size();
  ctx.payload["graphs"] = list;
  if (cfg.format == OutputFormat::text) {
    ctx.out << graphs.size() << (cfg.all_types ? " theta-type" : " full theta-type")
            << " graphs with " << degree + 1 << " edges\n";
    for (const auto& g : graphs) {
      ctx.out << to_line(g, 1) << (has_odd_automorphism(g) ? "  (odd automorphism)" : "") << '\n';
    }
  } else if (cfg.format == OutputFormat::csv) {
    ctx.out << "graph,odd_automorphism\n";
    for (const auto& g : graphs) ctx.out << to_line(g, 1) << ',' << has_odd_automorphism(g) << '\n';
  }
}

void cmd_complex(Context& ctx) {
  const RunConfig& cfg = ctx.config;
  require_range(cfg.n, 4, kMaxMarkings);
  warn_if_expensive(ctx);
  const RelativeComplex c = build_complex(ctx);
  ctx.clock.start("check_complex");
  check_complex(c);
  ctx.clock.stop();
  ctx.payload["n"] = cfg.n;
  ordered_json dims = ordered_json::object();
  for (int p = cfg.n + 2; p >= cfg.n; --p) dims["C_" + std::to_string(p)] = c.basis(p).size();
  ctx.payload["dimensions"] = dims;
  ctx.payload["nnz"] = {{"d_" + std::to_string(cfg.n + 2), c.d_top.nonZeros()},
                        {"d_" + std::to_string(cfg.n + 1), c.d_middle.nonZeros()}};
  ctx.payload["d_squared_zero"] = true;
  ctx.payload["d_middle_surjective"] = true;
  if (cfg.cache_dir) ctx.payload["cache"] = cfg.cache_dir->string();
  if (cfg.format == OutputFormat::text) {
    for (int p = cfg.n + 2; p >= cfg.n; --p) ctx.out << "C_" << p << ": " << c.basis(p).size() << '\n';
    ctx.out << "d_" << cfg.n + 2 << ": " << c.d_top.rows() << "x" << c.d_top.cols() << ", "
            << c.d_top.nonZeros() << " nonzeros\n";
    ctx.out << "d_" << cfg.n + 1 << ": " << c.d_middle.rows() << "x" << c.d_middle.cols() << ", "
            << c.d_middle.nonZeros() << " nonzeros\n";
    ctx.out << "d^2 = 0, d_" << cfg.n + 1 << " surjective\n";
  } else if (cfg.format == OutputFormat::csv) {
    ctx.out << "degree,dimension\n";
    for (int p = cfg.n + 2; p >= cfg.n; --p) ctx.out << p << ',' << c.basis(p).size() << '\n';
  }
}

void cmd_betti(Context& ctx) {
  const RunConfig& cfg = ctx.config;
  require_range(cfg.n, 4, kMaxMarkings);
  warn_if_expensive(ctx);
  const RelativeComplex c = build_complex(ctx);
  ctx.clock.start("rank");
  const BettiNumbers b = betti(c);
  ctx.clock.stop();
  const std::string top = "H_" + std::to_string(cfg.n + 2), next = "H_" + std::to_string(cfg.n + 1);
  ctx.payload["n"] = cfg.n;
  ctx.payload["betti"] = {{top, b.top}, {next, b.next}};
  if (cfg.format == OutputFormat::text) {
    ctx.out << top << ": " << b.top << ", " << next << ": " << b.next << '\n';
  } else if (cfg.format == OutputFormat::csv) {
    ctx.out << "degree,betti\n" << cfg.n + 2 << ',' << b.top << '\n' << cfg.n + 1 << ',' << b.next << '\n';
  }
}

HomologyCharacters compute_characters(Context& ctx, const RelativeComplex& c) {
  CharacterOptions options;
  options.method = ctx.config.method;
  options.seed = ctx.config.seed;
  options.threads = ctx.config.threads;
  ctx.clock.start(ctx.config.method == Method::projection ? "projection" : "kernel_trace");
  HomologyCharacters h = homology_characters(c, options);
  ctx.clock.stop();
  return h;
}

void emit_characters(Context& ctx, const HomologyCharacters& h) {
  const RunConfig& cfg = ctx.config;
  const int top = cfg.n + 2, next = cfg.n + 1;
  if (cfg.degree && *cfg.degree != top && *cfg.degree != next) {
    throw ConfigError("--degree must be " + std::to_string(next) + " or " + std::to_string(top));
  }
  std::vector<std::tuple<int, const ClassFunction*, const Multiplicities*>> rows;
  if (!cfg.degree || *cfg.degree == top) rows.emplace_back(top, &h.top, &h.top_decomposition);
  if (!cfg.degree || *cfg.degree == next) rows.emplace_back(next, &h.next, &h.next_decomposition);

  ordered_json list = ordered_json::array();
  for (const auto& [degree, f, m] : rows) list.push_back(character_json(cfg, degree, *f, *m));
  ctx.payload["n"] = cfg.n;
  ctx.payload["method"] = cfg.method == Method::projection ? "projection" : "kernel-trace";
  ctx.payload["seed"] = cfg.seed;
  ctx.payload["characters"] = list;

  if (cfg.format == OutputFormat::text) {
    std::vector<std::pair<std::string, ClassFunction>> table;
    for (const auto& [degree, f, m] : rows) table.emplace_back("H_" + std::to_string(degree), *f);
    print_table(ctx.out, cfg.n, table);
    ctx.out << '\n';
    for (const auto& [degree, f, m] : rows) {
      ctx.out << "H_" << degree << " = " << format_decomposition(*m) << '\n';
    }
  } else if (cfg.format == OutputFormat::csv) {
    ctx.out << "degree,class,value\n";
    for (const auto& [degree, f, m] : rows) {
      for (std::size_t c = 0; c < f->values.size(); ++c) {
        ctx.out << degree << ',' << label_for(partitions(cfg.n)[c]) << ',' << f->values[c].str() << '\n';
      }
    }
  }
}

void cmd_characters(Context& ctx) {
  require_range(ctx.config.n, 4, kMaxMarkings);
  warn_if_expensive(ctx);
  const RelativeComplex c = build_complex(ctx);
  const HomologyCharacters h = compute_characters(ctx, c);
  emit_characters(ctx, h);
  // Advisory only here; `verify` makes it mandatory.
  const EulerReport report = check_euler(ctx.config.n, h.top, h.next);
  ctx.payload["euler_check"] = report.pass();
  if (!report.pass()) ctx.err << "warning: Euler characteristic check against z_2 failed\n";
}

std::vector<Rational> parse_values(const std::string& text) {
  std::vector<Rational> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t"), e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw ConfigError("empty entry in --values");
    try {
      values.emplace_back(item.substr(b, e - b + 1));
    } catch (const std::exception&) {
      throw ConfigError("cannot parse '" + item + "' in --values");
    }
  }
  return values;
}

void cmd_decompose(Context& ctx) {
  const RunConfig& cfg = ctx.config;
  require_range(cfg.n, 1, 20);
  ClassFunction f = ClassFunction::zero(cfg.n);
  const auto values = parse_values(cfg.values);
  if (values.size() != f.values.size()) {
    throw ConfigError("--values needs " + std::to_string(f.values.size()) + " entries for n = " +
                      std::to_string(cfg.n) + ", got " + std::to_string(values.size()));
  }
  f.values = values;
  const Multiplicities m = decompose(f, cfg.allow_virtual);
  ctx.payload["n"] = cfg.n;
  ctx.payload["decomposition"] = decomposition_json(m);
  if (cfg.format == OutputFormat::text) {
    ctx.out << format_decomposition(m) << '\n';
  } else if (cfg.format == OutputFormat::csv) {
    ctx.out << "partition,multiplicity\n";
    for (auto it = m.rbegin(); it != m.rend(); ++it) ctx.out << it->first.compact() << ',' << it->second << '\n';
  }
}

void cmd_verify(Context& ctx) {
  const RunConfig& cfg = ctx.config;
  require_range(cfg.n, 4, kMaxMarkings);
  warn_if_expensive(ctx);
  const RelativeComplex c = build_complex(ctx);
  ctx.clock.start("check_complex");
  check_complex(c);
  ctx.clock.stop();
  const HomologyCharacters h = compute_characters(ctx, c);

  ctx.clock.start("euler_check");
  const EulerReport report = check_euler(cfg.n, h.top, h.next);
  ctx.clock.stop();

  // The kernel-trace oracle needs a dense kernel basis; n = 7 and 8 are out of reach.
  std::optional<ClassFunction> oracle;
  if (cfg.n <= 6) {
    ctx.clock.start("kernel_trace");
    oracle = kernel_character_oracle(c);
    ctx.clock.stop();
  }
  const bool agree = !oracle || (cfg.method == Method::kernel_trace ? true : *oracle == h.top);

  ordered_json classes = ordered_json::array();
  for (const auto& k : report.classes) {
    classes.push_back({{"class", k.mu.to_string()},
                       {"z2", k.z2_coefficient.str()},
                       {"characters", k.bracket.str()},
                       {"pass", k.pass()}});
  }
  ctx.payload["n"] = cfg.n;
  ctx.payload["seed"] = cfg.seed;
  ctx.payload["euler"] = classes;
  ctx.payload["euler_pass"] = report.pass();
  if (oracle) {
    ctx.payload["methods_agree"] = agree;
  } else {
    ctx.payload["methods_agree"] = nullptr;
  }
  ctx.failed = !report.pass() || !agree;

  if (cfg.format == OutputFormat::text) {
    std::size_t w1 = 5, w2 = 2, w3 = 10;
    for (const auto& k : report.classes) {
      w1 = std::max(w1, k.mu.compact().size());
      w2 = std::max(w2, k.z2_coefficient.str().size());
      w3 = std::max(w3, k.bracket.str().size());
    }
    ctx.out << std::left << std::setw(static_cast<int>(w1)) << "class" << "  " << std::right
            << std::setw(static_cast<int>(w2)) << "z2" << "  " << std::setw(static_cast<int>(w3))
            << "characters" << '\n';
    for (const auto& k : report.classes) {
      ctx.out << std::left << std::setw(static_cast<int>(w1)) << k.mu.compact() << "  " << std::right
              << std::setw(static_cast<int>(w2)) << k.z2_coefficient.str() << "  "
              << std::setw(static_cast<int>(w3)) << k.bracket.str() << "  " << (k.pass() ? "ok" : "MISMATCH")
              << '\n';
    }
    ctx.out << "z2 check: " << (report.pass() ? "pass" : "FAIL") << '\n';
    if (oracle) {
      ctx.out << "projection vs kernel-trace: " << (agree ? "agree" : "DISAGREE") << '\n';
    } else {
      ctx.out << "projection vs kernel-trace: skipped for n > 6\n";
    }
  } else if (cfg.format == OutputFormat::csv) {
    ctx.out << "class,z2,characters,pass\n";
    for (const auto& k : report.classes) {
      ctx.out << k.mu.compact() << ',' << k.z2_coefficient.str() << ',' << k.bracket.str() << ','
              << (k.pass() ? "true" : "false") << '\n';
    }
  }
}

void cmd_chartable(Context& ctx) {
  const RunConfig& cfg = ctx.config;
  require_range(cfg.n, 1, 12);
  const CharacterTable table(cfg.n);
  ordered_json rows = ordered_json::object();
  std::vector<std::pair<std::string, ClassFunction>> printed;
  for (const auto& lambda : table.labels()) {
    const ClassFunction f = table.character(lambda);
    ordered_json row = ordered_json::array();
    for (const auto& v : f.values) row.push_back(rational_json(v));
    rows[lambda.to_string()] = row;
    printed.emplace_back("chi_" + lambda.compact(), f);
  }
  ordered_json classes = ordered_json::array();
  for (const auto& mu : table.labels()) classes.push_back(mu.to_string());
  ctx.payload["n"] = cfg.n;
  ctx.payload["classes"] = classes;
  ctx.payload["class_sizes"] = table.class_sizes();
  ctx.payload["characters"] = rows;
  if (cfg.format == OutputFormat::text) {
    print_table(ctx.out, cfg.n, printed);
  } else if (cfg.format == OutputFormat::csv) {
    ctx.out << "irreducible,class,value\n";
    for (const auto& [name, f] : printed) {
      for (std::size_t c = 0; c < f.values.size(); ++c) {
        ctx.out << name.substr(4) << ',' << label_for(table.labels()[c]) << ',' << f.values[c].str() << '\n';
      }
    }
  }
}

void cmd_analyze_d25(Context& ctx) {
  const RunConfig& cfg = ctx.config;
  if (cfg.n != kD25Markings) throw ConfigError("analyze-d25 works with n = 5 only");
  const RelativeComplex c = build_complex(ctx);
  ctx.clock.start("find_cycle");
  const IsotypicCycle cycle = find_isotypic_cycle(c, cfg.seed);
  ctx.clock.stop();
  ctx.clock.start("orbit_basis");
  const RationalMatrix v_basis = orbit_basis(c.top, cycle.v);
  ctx.clock.stop();
  ctx.clock.start("isomorphism");
  const SpechtRep specht(Partition({3, 1, 1}));
  const EquivariantIsomorphism iso = equivariant_isomorphism(c.top, v_basis, specht);
  ctx.clock.stop();
  const bool boundary_zero = is_zero(to_sparse(RationalMatrix(c.d_top * cycle.v)));
  ctx.failed = !boundary_zero || !iso.intertwines || iso.determinant == 0;

  ordered_json support = ordered_json::array();
  for (Eigen::Index i = 0; i < cycle.v.size(); ++i) {
    if (cycle.v(i) == 0) continue;
    support.push_back({{"graph", to_line(c.top.cells[static_cast<std::size_t>(i)], 1)},
                       {"coefficient", rational_json(cycle.v(i))}});
  }
  ordered_json seed_terms = ordered_json::array();
  for (const auto& [g, s] : cycle.seed) seed_terms.push_back({{"graph", to_line(g, 1)}, {"coefficient", s}});
  ordered_json h0 = ordered_json::array();
  for (Eigen::Index i = 0; i < iso.h0.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (Eigen::Index j = 0; j < iso.h0.cols(); ++j) row.push_back(rational_json(iso.h0(i, j)));
    h0.push_back(row);
  }
  ctx.payload["n"] = cfg.n;
  ctx.payload["from_search"] = cycle.from_search;
  ctx.payload["seed_terms"] = seed_terms;
  ctx.payload["support"] = support;
  ctx.payload["boundary_zero"] = boundary_zero;
  ctx.payload["orbit_basis_rank"] = v_basis.cols();
  ctx.payload["h0"] = h0;
  ctx.payload["h0_determinant"] = iso.determinant.str();
  ctx.payload["h0_intertwines"] = iso.intertwines;

  if (cfg.format == OutputFormat::text) {
    ctx.out << (cycle.from_search ? "orbit-sum cycle v = sum_i (12345)^i u, u =\n"
                                  : "no orbit-sum cycle found; projected random cycle v\n");
    for (const auto& [g, s] : cycle.seed) ctx.out << "  " << (s > 0 ? "+" : "-") << ' ' << to_line(g, 1) << '\n';
    ctx.out << "support of v (" << support.size() << " cells):\n";
    for (Eigen::Index i = 0; i < cycle.v.size(); ++i) {
      if (cycle.v(i) == 0) continue;
      ctx.out << "  " << std::setw(3) << cycle.v(i).str() << "  "
              << to_line(c.top.cells[static_cast<std::size_t>(i)], 1) << '\n';
    }
    ctx.out << "d v = 0: " << (boundary_zero ? "yes" : "NO") << '\n';
    ctx.out << "rank {sigma v : sigma in S_{1,2,3}} = " << v_basis.cols() << '\n';
    ctx.out << "h0 =\n";
    for (Eigen::Index i = 0; i < iso.h0.rows(); ++i) {
      ctx.out << ' ';
      for (Eigen::Index j = 0; j < iso.h0.cols(); ++j) ctx.out << ' ' << std::setw(5) << iso.h0(i, j).str();
      ctx.out << '\n';
    }
    ctx.out << "det h0 = " << iso.determinant.str() << '\n';
    ctx.out << "h0 intertwines all 120 permutations: " << (iso.intertwines ? "yes" : "NO") << '\n';
  } else if (cfg.format == OutputFormat::csv) {
    ctx.out << "graph,coefficient\n";
    for (const auto& s : support) ctx.out << s["graph"].get<std::string>() << ',' << s["coefficient"].dump() << '\n';
  }
}

void emit_metadata(Context& ctx) {
  const RunConfig& cfg = ctx.config;
  if (cfg.format == OutputFormat::json) {
    ordered_json meta;
    meta["version"] = kVersion;
    meta["subcommand"] = cfg.subcommand;
    meta["seed"] = cfg.seed;
    ordered_json timings = ordered_json::object();
    for (const auto& [stage, seconds] : ctx.clock.timings()) timings[stage] = seconds;
    meta["timings_seconds"] = timings;
    ordered_json doc = ctx.payload;
    doc["metadata"] = meta;
    ctx.out << doc.dump(2) << '\n';
    return;
  }
  std::ostream& os = cfg.format == OutputFormat::text ? ctx.out : ctx.err;
  os << (cfg.format == OutputFormat::text ? "\n" : "") << "# delta2n " << kVersion << ", " << cfg.subcommand
     << ", seed " << cfg.seed << '\n';
  for (const auto& [stage, seconds] : ctx.clock.timings()) {
    os << "# " << stage << ": " << std::fixed << std::setprecision(3) << seconds << " s\n";
    os.unsetf(std::ios::floatfield);
  }
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  Context ctx{config, out, err, {}, ordered_json::object(), false};
  try {
    if (config.threads < 1) throw ConfigError("--threads must be positive");
    const std::string& sub = config.subcommand;
    if (sub == "enumerate") {
      cmd_enumerate(ctx);
    } else if (sub == "complex") {
      cmd_complex(ctx);
    } else if (sub == "betti") {
      cmd_betti(ctx);
    } else if (sub == "characters") {
      cmd_characters(ctx);
    } else if (sub == "decompose") {
      cmd_decompose(ctx);
    } else if (sub == "verify") {
      cmd_verify(ctx);
    } else if (sub == "chartable") {
      cmd_chartable(ctx);
    } else if (sub == "analyze-d25") {
      cmd_analyze_d25(ctx);
    } else {
      throw ConfigError("unknown subcommand '" + sub + "'");
    }
    emit_metadata(ctx);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const ConsistencyError& e) {
    err << "consistency failure: " << e.what() << '\n';
    return 2;
  } catch (const NotACharacter& e) {
    err << "not a character: " << e.what() << '\n';
    return 2;
  } catch (const ProjectionFailure& e) {
    err << "projection failure: " << e.what() << '\n';
    return 2;
  } catch (const DegenerateVector& e) {
    err << "degenerate vector: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return ctx.failed ? 2 : 0;
}

}  // namespace delta2n
