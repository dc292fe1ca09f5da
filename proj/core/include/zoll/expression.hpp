#pragma once

#include <string>
#include <string_view>

#include "zoll/polynomial.hpp"

namespace zoll {

/// Parses `t0`, `t1`, ..., integer and `p/q` literals, `+ - * ^` and
/// parentheses. `^` binds tightest, then `*`, then `+`/`-`; exponents are
/// non-negative integer literals. Throws ParseError.
Polynomial parse_polynomial(std::string_view text);

/// Canonical text: terms in CanonicalOrder, e.g. `t0*t1 + t1^2 + 2*t1*t2`.
std::string to_string(const Polynomial& p);
std::string to_string(const Monomial& m);

}  // namespace zoll
