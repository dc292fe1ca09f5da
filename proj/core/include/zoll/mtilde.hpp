#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "zoll/base_algebra.hpp"
#include "zoll/polynomial.hpp"
#include "zoll/rt0.hpp"

namespace zoll {

/// Element of A M~0(n). Arity 1 holds an RT0Element; arity n >= 2 holds a
/// sum of (base basis vector) (x) r_0 (x) ... (x) r_n with R monomials r_i.
class MTildeElement {
 public:
  struct Key {
    std::size_t base = 0;
    std::vector<Monomial> slots;

    friend bool operator==(const Key&, const Key&) = default;
    friend auto operator<=>(const Key&, const Key&) = default;
  };

  static MTildeElement zero(std::size_t arity);
  static MTildeElement from_rt0(RT0Element x);
  /// xi (x) 1 (x) ... (x) 1 for an element xi of B_n.
  static MTildeElement from_base(std::size_t arity, const AlgElement& xi);
  /// The unit of the ring A M~0(n) for the given base.
  static MTildeElement unit(std::size_t arity, const BaseOperadConfig& base);
  /// basis_b (x) slots, each slot a t0-free R monomial.
  static MTildeElement basis_term(std::size_t base_index, std::vector<Monomial> slots, const Scalar& coeff = 1);

  std::size_t arity() const noexcept { return arity_; }
  bool is_zero() const;
  const RT0Element& rt0() const;
  const std::map<Key, Scalar>& terms() const noexcept { return terms_; }
  void add_term(const Key& key, const Scalar& coeff);

  friend MTildeElement operator+(MTildeElement a, const MTildeElement& b);
  friend MTildeElement operator-(MTildeElement a, const MTildeElement& b);
  friend MTildeElement operator*(const Scalar& c, MTildeElement a);
  friend bool operator==(const MTildeElement&, const MTildeElement&) = default;

  std::string format(const BaseOperadConfig& base) const;

 private:
  std::size_t arity_ = 1;
  RT0Element rt0_;
  std::map<Key, Scalar> terms_;
};

/// Ring product: "." on arity 1, slotwise R products times the base
/// product on arity n >= 2.
MTildeElement mt_mul(const MTildeElement& x, const MTildeElement& y, const BaseOperadConfig& base);
MTildeElement mt_pow(const MTildeElement& x, unsigned k, const BaseOperadConfig& base);

/// x o_j y with the four arity cases. Throws DomainError for a bad slot,
/// ConfigError when the base lacks an arity or a clutching map.
MTildeElement compose(const MTildeElement& x, const MTildeElement& y, std::size_t j, const BaseOperadConfig& base);

/// Left action: slots move as v_{pi^{-1}(i)}, the base class via the config.
/// On arity 1 the transposition acts as iota.
MTildeElement act(const Permutation& pi, const MTildeElement& x, const BaseOperadConfig& base);

/// (psi~_i, phi~_i) in A M~0(n), 0 <= i <= n.
std::pair<MTildeElement, MTildeElement> psi_phi_classes(std::size_t arity, std::size_t i,
                                                        const BaseOperadConfig& base);

/// F(n)(xi) = xi (x) 1 (x) ... (x) 1; F(1) is zero.
MTildeElement morphism_F(std::size_t arity, const AlgElement& xi);

/// psi~_0^{d0} psi~_1^{d1} == -psi~_0^{d0+1} psi~_1^{d1-1} + psi~_0^{d0} o_1 psi~_1^{d1-1}
/// in R[t0], powers taken with ".". Requires d1 >= 1.
struct IdentityOutcome {
  bool holds = false;
  std::string lhs;
  std::string rhs;
};
IdentityOutcome important_a_check(unsigned d0, unsigned d1);

/// prod psi~_i^{d_i} phi~_i^{e_i} against the recursion at slot j, in
/// A M~0(n) over the base. Requires 1 <= j <= n and d_j >= 1.
IdentityOutcome important_b_check(std::size_t arity, const std::vector<unsigned>& d, const std::vector<unsigned>& e,
                                  std::size_t j, const BaseOperadConfig& base);

}  // namespace zoll
