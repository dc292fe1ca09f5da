#pragma once

#include <cstddef>
#include <map>

#include "zoll/polynomial.hpp"

namespace zoll {

/// True iff p lies in I_n = (t1*...*tn) Q[t1,...,tn]: every monomial has
/// positive exponent on t1..tn, none on t0 or any t_i with i > n.
bool check_component(std::size_t n, const Polynomial& p);

/// Element (f_n) of R = (+)_n I_n. Components have pairwise disjoint
/// monomial supports, so the family is stored as the single polynomial
/// sum f_0 + f_1 + ... .
class RElement {
 public:
  RElement() = default;

  /// Throws MembershipError if some monomial involves t0 or has a gap in
  /// its positive-index support.
  static RElement from_polynomial(Polynomial p);
  /// Throws MembershipError unless each f_n lies in I_n.
  static RElement from_components(const std::map<std::size_t, Polynomial>& components);
  static RElement unit() { return from_polynomial(Polynomial(1)); }

  const Polynomial& polynomial() const noexcept { return poly_; }
  /// Nonzero components only.
  std::map<std::size_t, Polynomial> components() const;
  Polynomial component(std::size_t n) const;
  bool is_zero() const noexcept { return poly_.is_zero(); }
  /// Largest n with f_n != 0 (0 for the zero element).
  std::size_t top_component() const noexcept;

  friend RElement operator+(const RElement& a, const RElement& b) {
    return RElement(a.poly_ + b.poly_);
  }
  friend RElement operator-(const RElement& a, const RElement& b) {
    return RElement(a.poly_ - b.poly_);
  }
  friend RElement operator*(const Scalar& c, const RElement& a) { return RElement(c * a.poly_); }
  friend bool operator==(const RElement&, const RElement&) = default;

 private:
  explicit RElement(Polynomial p) : poly_(std::move(p)) {}
  Polynomial poly_;
};

/// h_n = sum over (alpha: [1,p] -> [1,n], beta: [1,q] -> [1,n]) whose
/// images cover [1,n] of (alpha_* f_p)(beta_* g_q).
RElement r_mul(const RElement& f, const RElement& g);

/// Polynomial of R_d inside Q[t1,...,td].
struct RdElement {
  std::size_t level = 0;
  Polynomial value;

  friend bool operator==(const RdElement&, const RdElement&) = default;
};

RdElement project_to_level(const RElement& f, std::size_t d);

/// Inverse of project_to_level on R_d. Throws DomainError if F involves t0
/// or a variable beyond t_d, MembershipError ("not in R_d") if F is not in
/// the image.
RElement decode_rd(const Polynomial& F, std::size_t d);

/// Sets t_d = 0, landing in R_{d-1}. Requires d >= 1.
RdElement restrict_level(const RdElement& F);

namespace detail {

/// sum_{n} sum_{alpha: [1,n] -> [1,d]} alpha_* f_n where f_n is the part of
/// p with positive-index support exactly {1..n}; t0 rides along as a
/// coefficient variable.
Polynomial project_polynomial(const Polynomial& p, std::size_t d);

/// Keeps the terms of F whose positive-index support is a prefix {1..n}.
Polynomial prefix_terms(const Polynomial& F);

}  // namespace detail

}  // namespace zoll
