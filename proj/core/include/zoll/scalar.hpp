#pragma once

#include <gmpxx.h>

#include <string>

namespace zoll {

/// Exact rational coefficient. GMP keeps it canonical (lowest terms,
/// positive denominator) after every arithmetic operation.
using Scalar = mpq_class;

inline std::string to_string(const Scalar& s) { return s.get_str(); }

}  // namespace zoll
