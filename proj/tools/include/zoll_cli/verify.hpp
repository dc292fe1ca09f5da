#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "zoll/report.hpp"

namespace zoll::cli {

/// Bad suite name or bound; the CLI maps it to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unset bounds take the per-suite defaults listed in the README.
struct VerifyOptions {
  std::optional<unsigned> max_degree;
  std::optional<unsigned> max_n;
  std::optional<unsigned> max_arity;
  std::optional<unsigned> dim;
  /// Base operad: "trivial", "rank2" or a config file path.
  std::optional<std::string> base;
  /// Super space config file; overrides dim.
  std::optional<std::string> space;
  std::uint64_t seed = 20261017;
};

const std::vector<std::string>& suite_names();

/// Runs one suite ("all" runs every suite at its defaults plus the given
/// overrides). Throws UsageError for an unknown suite or bad bounds and
/// ConfigError for a bad base or space file.
VerdictReport run_suite(const std::string& suite, const VerifyOptions& options);

}  // namespace zoll::cli
