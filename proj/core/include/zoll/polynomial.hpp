#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zoll/scalar.hpp"

namespace zoll {

/// Power product t0^e0 * t1^e1 * ... . Stored densely by variable index
/// with trailing zero exponents trimmed, so the empty vector is 1.
class Monomial {
 public:
  using Exponent = std::uint32_t;

  Monomial() = default;
  explicit Monomial(std::vector<Exponent> exponents);
  Monomial(std::initializer_list<Exponent> exponents)
      : Monomial(std::vector<Exponent>(exponents)) {}

  static Monomial variable(std::size_t index, Exponent power = 1);

  Exponent exponent(std::size_t var) const noexcept {
    return var < exps_.size() ? exps_[var] : 0;
  }
  std::span<const Exponent> exponents() const noexcept { return exps_; }

  /// One past the highest variable index that occurs (0 for constants).
  std::size_t width() const noexcept { return exps_.size(); }
  unsigned degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return exps_.empty(); }

  /// Highest positive variable index n if the positive-index support is
  /// exactly {1,...,n}; nullopt when there is a gap.
  std::optional<std::size_t> prefix_length() const noexcept;

  Monomial operator*(const Monomial& other) const;
  /// Copy with the t0 exponent set to zero.
  Monomial without_t0() const;
  Monomial with_exponent(std::size_t var, Exponent power) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    return a.exps_ <=> b.exps_;
  }

 private:
  void trim();

  std::vector<Exponent> exps_;
  unsigned degree_ = 0;
};

/// Canonical term order: higher total degree first, then lexicographically
/// larger exponent vector (read from t0 upwards) first.
struct CanonicalOrder {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept;
};

/// Sparse multivariate polynomial over Q in t0, t1, t2, ... .
class Polynomial {
 public:
  using Terms = std::map<Monomial, Scalar, CanonicalOrder>;

  Polynomial() = default;
  Polynomial(const Scalar& constant);  // NOLINT(google-explicit-constructor)
  Polynomial(long constant) : Polynomial(Scalar(constant)) {}  // NOLINT
  Polynomial(int constant) : Polynomial(Scalar(constant)) {}   // NOLINT
  Polynomial(const Monomial& m, const Scalar& coeff = 1);

  static Polynomial variable(std::size_t index) { return Polynomial(Monomial::variable(index)); }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  Scalar coefficient(const Monomial& m) const;
  Scalar constant_term() const { return coefficient(Monomial{}); }

  /// -1 for the zero polynomial.
  int degree() const noexcept;
  bool is_homogeneous() const noexcept;
  /// One past the largest variable index occurring.
  std::size_t width() const noexcept;
  /// Largest exponent of t_var over all terms.
  Monomial::Exponent max_exponent(std::size_t var) const noexcept;

  /// Adds c*m, dropping the term if the result cancels.
  void add_term(const Monomial& m, const Scalar& c);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Scalar& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Scalar& c) { return a *= c; }
  friend Polynomial operator*(const Scalar& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;

  Polynomial pow(unsigned k) const;

  /// Applies a monomial-to-polynomial map term by term and sums.
  Polynomial transform(const std::function<Polynomial(const Monomial&)>& f) const;
  /// Keeps the terms whose monomial satisfies pred.
  Polynomial filter(const std::function<bool(const Monomial&)>& pred) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

/// t0 -> s, all other variables unchanged.
Polynomial substitute_t0(const Polynomial& p, const Polynomial& s);

/// Substitutes every variable t_i by images[i]; variables past the end of
/// images are left alone.
Polynomial substitute(const Polynomial& p, std::span<const Polynomial> images);

/// t_i -> 0 for i >= 1; drops every term divisible by t_i.
Polynomial set_var_zero(const Polynomial& p, std::size_t i);

/// Monomials of degree `deg` in variables t_first..t_last (inclusive).
std::vector<Monomial> monomials_of_degree(unsigned deg, std::size_t first, std::size_t last);

}  // namespace zoll
