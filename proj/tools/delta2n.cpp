// delta2n: S_n-equivariant rational homology of Delta_{2,n}.

#include <cstdlib>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "delta2n/cli.hpp"

int main(int argc, char** argv) {
  using delta2n::Method;
  using delta2n::OutputFormat;

  delta2n::RunConfig config;
  if (const char* cache = std::getenv(delta2n::kCacheEnvVar); cache && *cache) config.cache_dir = cache;

  CLI::App app{"Equivariant rational homology of the tropical moduli spaces Delta_{2,n}"};
  app.set_version_flag("--version", delta2n::kVersion);
  app.require_subcommand(1);

  const std::map<std::string, Method> methods{{"projection", Method::projection},
                                              {"kernel-trace", Method::kernel_trace}};
  const std::map<std::string, OutputFormat> formats{
      {"text", OutputFormat::text}, {"json", OutputFormat::json}, {"csv", OutputFormat::csv}};
  std::string cache_dir;
  int degree = 0;

  struct Sub {
    const char* name;
    const char* help;
  };
  const Sub subs[] = {
      {"enumerate", "List canonical theta-type graphs"},
      {"complex", "Build the relative chain complex and check it"},
      {"betti", "Betti numbers of H_{n+2} and H_{n+1}"},
      {"characters", "Characters and decompositions of H_{n+2} and H_{n+1}"},
      {"decompose", "Decompose a class function into irreducible characters"},
      {"verify", "Check characters against z_2 and the kernel-trace oracle"},
      {"chartable", "Character table of S_n"},
      {"analyze-d25", "Explicit S^{311}-isotypic cycle for n = 5"},
  };
  for (const auto& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("--n", config.n, "Number of markings")->default_val(std::string(s.name) == "analyze-d25" ? 5 : 4);
    sub->add_option("--method", config.method, "projection or kernel-trace")
        ->transform(CLI::CheckedTransformer(methods, CLI::ignore_case));
    sub->add_option("--seed", config.seed, "Seed for the projection vectors");
    sub->add_option("--cache", cache_dir, "Boundary matrix cache directory (default $DELTA2N_CACHE)");
    sub->add_option("--format", config.format, "text, json or csv")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--threads", config.threads, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--degree", degree, "Restrict to one homological degree");
    if (std::string(s.name) == "decompose") {
      sub->add_option("--values", config.values, "Comma-separated values in class order")->required();
      sub->add_flag("--virtual", config.allow_virtual, "Allow negative multiplicities");
    }
    if (std::string(s.name) == "enumerate") {
      sub->add_flag("--all", config.all_types, "Include theta types that are not full");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  CLI::App* chosen = app.get_subcommands().front();
  config.subcommand = chosen->get_name();
  if (!cache_dir.empty()) config.cache_dir = cache_dir;
  if (chosen->count("--degree") > 0) config.degree = degree;
  return delta2n::run(config, std::cout, std::cerr);
}
