#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace zoll {

enum class CheckStatus { pass, fail, skip };

/// One verified identity (or family of instances) within a suite.
struct CheckRecord {
  std::string id;
  std::string parameters;
  CheckStatus status = CheckStatus::pass;
  /// Number of instances evaluated.
  std::uint64_t instances = 0;
  /// Reproducible failing input and both sides; empty on pass.
  std::string counterexample;
  std::string note;
};

struct VerdictReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<std::pair<std::string, std::string>> bounds;
  std::vector<CheckRecord> checks;
  double seconds = 0;

  std::size_t count(CheckStatus s) const;
  bool ok() const { return count(CheckStatus::fail) == 0; }
};

/// Accumulates instances of one identity, keeping the first failure.
class CheckAccumulator {
 public:
  CheckAccumulator(std::string id, std::string parameters) {
    record_.id = std::move(id);
    record_.parameters = std::move(parameters);
  }

  /// `describe` is only called on the first failure.
  template <class Describe>
  void expect(bool ok, Describe&& describe) {
    ++record_.instances;
    if (!ok && record_.status != CheckStatus::fail) {
      record_.status = CheckStatus::fail;
      record_.counterexample = describe();
    }
  }
  void skip(std::uint64_t n = 1) { skipped_ += n; }
  void note(std::string text) { record_.note = std::move(text); }

  CheckRecord finish();

 private:
  CheckRecord record_;
  std::uint64_t skipped_ = 0;
};

}  // namespace zoll
