#pragma once

#include <cstddef>
#include <vector>

#include "zoll/base_algebra.hpp"
#include "zoll/report.hpp"
#include "zoll/super_operad.hpp"

namespace zoll {

/// The four cyclic-operad axioms for E^s[M,b] on every basis tensor with
/// operad arities up to max_arity. Axioms (2) and (3) exchange two
/// operands; they are checked with the Koszul sign of that exchange on all
/// inputs, and verbatim (unsigned) on inputs where an exchanged operand is
/// even. Also checks es_permute against each reduced word of
/// every permutation, that it is a left action, and that the pairing of
/// even tensors is invariant.
std::vector<CheckRecord> es_axiom_check(const SuperSpace& space, std::size_t max_arity);

/// The pairing lemma on all even basis tuples v, w, all slots j and all
/// basis tuples alpha, arities up to max_arity.
std::vector<CheckRecord> vowa_exhaustive(const SuperSpace& space, std::size_t max_arity);

struct MTildeBounds {
  std::size_t max_arity = 3;
  /// Total polynomial degree of the R[t0] element (arity 1) or of the
  /// R-slot tuple (arity >= 2).
  unsigned max_r_degree = 2;
};

/// The four cyclic-operad axioms for A M~0 over the base on spanning sets within bounds,
/// one record per axiom and arity pattern. Instances needing an arity or
/// clutching map the base does not supply are counted as skipped.
std::vector<CheckRecord> operad_axiom_check(const BaseOperadConfig& base, const MTildeBounds& bounds);

/// F commutes with compositions and with the permutation actions on the
/// base basis classes of arities 2..max_arity.
std::vector<CheckRecord> morphism_F_check(const BaseOperadConfig& base, std::size_t max_arity);

}  // namespace zoll
