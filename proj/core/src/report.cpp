#include "zoll/report.hpp"

#include <algorithm>

namespace zoll {

std::size_t VerdictReport::count(CheckStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [s](const CheckRecord& r) { return r.status == s; }));
}

CheckRecord CheckAccumulator::finish() {
  CheckRecord out = record_;
  if (skipped_ > 0) {
    std::string msg = std::to_string(skipped_) + " instance(s) skipped: base lacks a required arity or clutching";
    out.note = out.note.empty() ? msg : out.note + "; " + msg;
    if (out.instances == 0) out.status = CheckStatus::skip;
  }
  return out;
}

}  // namespace zoll
