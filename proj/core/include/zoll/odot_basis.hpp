#pragma once

#include <string>
#include <utility>
#include <vector>

#include "zoll/linalg.hpp"
#include "zoll/rt0.hpp"

namespace zoll {

/// The word t0^a1 (.) ... (.) t0^ar, of degree a1 + ... + ar + r - 1.
struct OdotWord {
  std::vector<unsigned> exponents;

  unsigned degree() const;
  friend bool operator==(const OdotWord&, const OdotWord&) = default;
};

enum class OdotBasisKind {
  structure,  // t0^a1 (.) ... (.) t0^ar
  iota,       // (t0+t1)^{.a1} (.) ... (.) (t0+t1)^{.ar}
};

/// The 2^n words of degree n, ordered by r and then lexicographically.
std::vector<OdotWord> odot_words(unsigned degree);

RT0Element evaluate(const OdotWord& word, OdotBasisKind kind = OdotBasisKind::structure);

/// Columns are the evaluated words, rows the degree-n monomials of R[t0]
/// in enumerate_rt0_monomials order.
Matrix basis_matrix(unsigned degree, OdotBasisKind kind = OdotBasisKind::structure);

using OdotExpansion = std::vector<std::pair<Scalar, OdotWord>>;

/// Coefficients of x in the chosen basis, split by degree; zero
/// coefficients are dropped. A singular basis matrix raises InternalError.
OdotExpansion odot_basis_expand(const RT0Element& x, OdotBasisKind kind = OdotBasisKind::structure);
/// Same as odot_basis_expand(x, iota), computed by conjugating with iota.
OdotExpansion odot_basis_expand_iota(const RT0Element& x);

RT0Element evaluate(const OdotExpansion& expansion, OdotBasisKind kind = OdotBasisKind::structure);

/// "t0^2 (*) 1 (*) t0" or "(t0+t1)^2 (*) 1" for the iota basis.
std::string to_string(const OdotWord& word, OdotBasisKind kind = OdotBasisKind::structure);
/// "1 * (1 (*) 1) + -2 * (t0)"; "0" for the empty expansion.
std::string to_string(const OdotExpansion& expansion, OdotBasisKind kind = OdotBasisKind::structure);

}  // namespace zoll
