#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "zoll/base_algebra.hpp"
#include "zoll/polynomial.hpp"
#include "zoll/ring_r.hpp"

namespace zoll {

/// Element of R[t0] = (+)_n (t1*...*tn) Q[t0,...,tn]. Every monomial is
/// t0^a0 * t1^a1 * ... * tn^an with a1..an >= 1. Like RElement, the
/// components f_n are stored summed into one polynomial.
class RT0Element {
 public:
  RT0Element() = default;

  /// Throws MembershipError ("not a valid R[t0] element") naming the first
  /// monomial whose positive-index support is not a prefix {1..n}.
  static RT0Element from_polynomial(Polynomial p);
  static RT0Element from_r(const RElement& r) { return RT0Element(r.polynomial()); }
  static RT0Element one() { return RT0Element(Polynomial(1)); }
  static RT0Element t0_power(unsigned a) { return RT0Element(Polynomial(Monomial::variable(0, a))); }

  const Polynomial& polynomial() const noexcept { return poly_; }
  std::map<std::size_t, Polynomial> components() const;
  bool is_zero() const noexcept { return poly_.is_zero(); }
  bool is_t0_free() const noexcept { return poly_.max_exponent(0) == 0; }
  /// Writes x = sum_i h_i t0^i with h_i in R.
  std::map<unsigned, RElement> t0_coefficients() const;

  friend RT0Element operator+(const RT0Element& a, const RT0Element& b) {
    return RT0Element(a.poly_ + b.poly_);
  }
  friend RT0Element operator-(const RT0Element& a, const RT0Element& b) {
    return RT0Element(a.poly_ - b.poly_);
  }
  RT0Element operator-() const { return RT0Element(-poly_); }
  friend RT0Element operator*(const Scalar& c, const RT0Element& a) { return RT0Element(c * a.poly_); }
  /// Multiplication by t0^a is the same in every product structure.
  RT0Element times_t0_power(unsigned a) const;

  friend bool operator==(const RT0Element&, const RT0Element&) = default;

 private:
  explicit RT0Element(Polynomial p) : poly_(std::move(p)) {}
  Polynomial poly_;
};

/// All monomials of R[t0] of total degree `degree` (there are 2^degree).
std::vector<Monomial> enumerate_rt0_monomials(unsigned degree);

/// The commutative intersection product, via the covering-pair merge of
/// exponent sequences on generators.
RT0Element dot_mul(const RT0Element& x, const RT0Element& y);
RT0Element dot_pow(const RT0Element& x, unsigned k);

/// Ring involution of (R[t0], .) with t0 -> -(t0+t1) and
/// f(t1..tn) -> f(tn..t1) on I_n.
RT0Element iota(const RT0Element& x);

/// Level-k image of f (.) g for monomials f, g of R[t0]:
/// sum_j (sum_alpha f(t0, t_alpha)) t_j (sum_beta g(t0+...+tj, t_beta)).
Polynomial q_k(const Monomial& f, const Monomial& g, std::size_t k);

/// The operadic product. Bilinear; for monomials the level
/// deg f + deg g + 1 image Q_D(f,g) determines the product. Whenever the
/// right factor is t0-free the result is cross-checked against
/// odot_concatenation; disagreement throws InternalError.
RT0Element odot(const RT0Element& x, const RT0Element& y);
/// f (.) g = f(t0..tn) t_{n+1} g(t_{n+2}..t_{n+m+1}); y must be t0-free.
RT0Element odot_concatenation(const RT0Element& x, const RT0Element& y);
/// x (.) x (.) ... (.) x with n factors (n >= 1).
RT0Element odot_pow(const RT0Element& x, unsigned n);

/// For x = t0^r t1^a1 ... tk^ak: true iff 1 (.) x equals
/// t1^{r+1} t2^{a1} ... t_{k+1}^{ak} plus terms of strictly smaller
/// t1-degree, and has a t0-free monomial.
bool leading_term_check(const Monomial& x);

/// The extended psi/phi classes of the two-pointed space.
struct ClassConstants {
  RT0Element psi0;  // -t0
  RT0Element psi1;  // t0 + t1
  RT0Element phi0;  // -t0 - t1
  RT0Element phi1;  // t0

  static ClassConstants standard();
};

/// Element of B (x) R, one R-part per basis vector of B.
struct BaseTensorR {
  std::vector<RElement> parts;

  bool is_zero() const;
  friend bool operator==(const BaseTensorR&, const BaseTensorR&) = default;
};

/// x|_{t0=c} = sum_i c^i (x) h_i where x = sum_i h_i t0^i. c must be
/// homogeneous of degree 1 (DomainError otherwise).
BaseTensorR substitute_class(const RT0Element& x, const GradedAlgebra& algebra, const AlgElement& c);

}  // namespace zoll
