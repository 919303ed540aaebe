#pragma once

// Subcommand driver behind the delta2n executable. Argument parsing lives in
// tools/; run() only sees a validated-shape RunConfig and writes to streams.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "delta2n/equivariant.hpp"

namespace delta2n {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kCacheEnvVar = "DELTA2N_CACHE";

enum class OutputFormat { text, json, csv };

struct RunConfig {
  std::string subcommand;  // enumerate, complex, betti, characters, decompose, verify, chartable, analyze-d25
  int n = 4;
  Method method = Method::projection;
  std::uint64_t seed = kDefaultSeed;
  std::optional<std::filesystem::path> cache_dir;
  OutputFormat format = OutputFormat::text;
  int threads = 1;
  std::optional<int> degree;
  // decompose: comma-separated class function values in partition order.
  std::string values;
  bool allow_virtual = false;
  // enumerate: include theta types that are not full.
  bool all_types = false;
};

// Exit status: 0 success, 1 invalid configuration, 2 internal-consistency
// failure (d^2 != 0, d_{n+1} not onto, non-integral multiplicities, failed
// checks).
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace delta2n
