#include "zoll/rt0.hpp"

#include <algorithm>
#include <mutex>

#include "zoll/errors.hpp"
#include "zoll/expression.hpp"
#include "zoll/increasing_map.hpp"

namespace zoll {

RT0Element RT0Element::from_polynomial(Polynomial p) {
  for (const auto& [m, c] : p.terms())
    if (!m.prefix_length())
      throw MembershipError("not a valid R[t0] element: monomial " + to_string(m));
  return RT0Element(std::move(p));
}

std::map<std::size_t, Polynomial> RT0Element::components() const {
  std::map<std::size_t, Polynomial> out;
  for (const auto& [m, c] : poly_.terms()) out[*m.prefix_length()].add_term(m, c);
  return out;
}

std::map<unsigned, RElement> RT0Element::t0_coefficients() const {
  std::map<unsigned, Polynomial> parts;
  for (const auto& [m, c] : poly_.terms()) parts[m.exponent(0)].add_term(m.without_t0(), c);
  std::map<unsigned, RElement> out;
  for (auto& [i, p] : parts) out.emplace(i, RElement::from_polynomial(std::move(p)));
  return out;
}

RT0Element RT0Element::times_t0_power(unsigned a) const {
  return RT0Element(poly_ * Polynomial(Monomial::variable(0, a)));
}

std::vector<Monomial> enumerate_rt0_monomials(unsigned degree) {
  std::vector<Monomial> out;
  // t0^a0 followed by a composition of degree - a0 into positive parts.
  std::vector<Monomial::Exponent> e;
  auto compositions = [&](auto&& self, unsigned remaining) -> void {
    if (remaining == 0) {
      out.emplace_back(e);
      return;
    }
    for (unsigned part = remaining; part >= 1; --part) {
      e.push_back(part);
      self(self, remaining - part);
      e.pop_back();
    }
  };
  for (unsigned a0 = degree + 1; a0-- > 0;) {
    e.assign(1, a0);
    compositions(compositions, degree - a0);
  }
  return out;
}

// ---------------------------------------------------------------------------
// The dot product

namespace {

/// Positive-index exponents a1..an of an R[t0] monomial.
std::vector<Monomial::Exponent> tail(const Monomial& m) {
  auto e = m.exponents();
  return e.size() <= 1 ? std::vector<Monomial::Exponent>{}
                       : std::vector<Monomial::Exponent>(e.begin() + 1, e.end());
}

/// Enumerates every covering pair (alpha, beta) as a word over {A, B, AB}
/// and emits the merged exponent sequence c_1..c_k.
void merge_rec(const std::vector<Monomial::Exponent>& a, const std::vector<Monomial::Exponent>& b,
               std::size_t i, std::size_t j, std::vector<Monomial::Exponent>& cur, const Scalar& coeff,
               Polynomial& out) {
  if (i == a.size() && j == b.size()) {
    out.add_term(Monomial(cur), coeff);
    return;
  }
  if (i < a.size()) {
    cur.push_back(a[i]);
    merge_rec(a, b, i + 1, j, cur, coeff, out);
    cur.pop_back();
  }
  if (j < b.size()) {
    cur.push_back(b[j]);
    merge_rec(a, b, i, j + 1, cur, coeff, out);
    cur.pop_back();
  }
  if (i < a.size() && j < b.size()) {
    cur.push_back(a[i] + b[j]);
    merge_rec(a, b, i + 1, j + 1, cur, coeff, out);
    cur.pop_back();
  }
}

void dot_monomials(const Monomial& x, const Monomial& y, const Scalar& coeff, Polynomial& out) {
  std::vector<Monomial::Exponent> cur{x.exponent(0) + y.exponent(0)};
  merge_rec(tail(x), tail(y), 0, 0, cur, coeff, out);
}

}  // namespace

RT0Element dot_mul(const RT0Element& x, const RT0Element& y) {
  Polynomial out;
  for (const auto& [mx, cx] : x.polynomial().terms())
    for (const auto& [my, cy] : y.polynomial().terms()) dot_monomials(mx, my, cx * cy, out);
  return RT0Element::from_polynomial(std::move(out));
}

RT0Element dot_pow(const RT0Element& x, unsigned k) {
  RT0Element result = RT0Element::one();
  for (unsigned i = 0; i < k; ++i) result = dot_mul(result, x);
  return result;
}

RT0Element iota(const RT0Element& x) {
  const RT0Element minus_t0_t1 =
      RT0Element::from_polynomial(-Polynomial::variable(0) - Polynomial::variable(1));
  std::vector<RT0Element> powers{RT0Element::one()};
  RT0Element out;
  for (const auto& [m, c] : x.polynomial().terms()) {
    const unsigned a0 = m.exponent(0);
    while (powers.size() <= a0) powers.push_back(dot_mul(powers.back(), minus_t0_t1));
    auto rev = tail(m);
    std::reverse(rev.begin(), rev.end());
    rev.insert(rev.begin(), 0);
    const RT0Element reversed = RT0Element::from_polynomial(Polynomial(Monomial(std::move(rev)), c));
    out = out + dot_mul(powers[a0], reversed);
  }
  return out;
}

// ---------------------------------------------------------------------------
// The odot product

Polynomial q_k(const Monomial& f, const Monomial& g, std::size_t k) {
  if (!f.prefix_length() || !g.prefix_length())
    throw DomainError("q_k: arguments must be monomials of R[t0]");
  const auto fa = tail(f);
  const auto gb = tail(g);
  const std::size_t n = fa.size();
  const std::size_t m = gb.size();
  Polynomial total;
  for (std::size_t j = 1; j <= k; ++j) {
    Polynomial left;
    for (const auto& values : increasing_value_lists(n, 1, j - 1)) {
      std::vector<Monomial::Exponent> e(k + 1, 0);
      e[0] = f.exponent(0);
      for (std::size_t i = 0; i < n; ++i) e[values[i]] = fa[i];
      left.add_term(Monomial(std::move(e)), 1);
    }
    if (left.is_zero()) continue;
    Polynomial right;
    for (const auto& values : increasing_value_lists(m, j + 1, k)) {
      std::vector<Monomial::Exponent> e(k + 1, 0);
      for (std::size_t i = 0; i < m; ++i) e[values[i]] = gb[i];
      right.add_term(Monomial(std::move(e)), 1);
    }
    if (right.is_zero()) continue;
    if (const unsigned b0 = g.exponent(0); b0 > 0) {
      Polynomial shifted_t0;
      for (std::size_t i = 0; i <= j; ++i) shifted_t0 += Polynomial::variable(i);
      right *= shifted_t0.pow(b0);
    }
    total += left * Polynomial(Monomial::variable(j)) * right;
  }
  return total;
}

namespace {

Polynomial odot_monomials_uncached(const Monomial& f, const Monomial& g) {
  const std::size_t level = f.degree() + g.degree() + 1;
  return detail::prefix_terms(q_k(f, g, level));
}

// Monomial products are pure functions of their inputs; the verification
// suites hit the same pairs many times.
Polynomial odot_monomials(const Monomial& f, const Monomial& g) {
  static std::mutex mutex;
  static std::map<std::pair<Monomial, Monomial>, Polynomial> cache;
  {
    std::lock_guard lock(mutex);
    if (const auto it = cache.find({f, g}); it != cache.end()) return it->second;
  }
  Polynomial product = odot_monomials_uncached(f, g);
  std::lock_guard lock(mutex);
  if (cache.size() > 200000) cache.clear();
  return cache.emplace(std::pair{f, g}, std::move(product)).first->second;
}

Polynomial concatenate_monomials(const Monomial& f, const Monomial& g) {
  std::vector<Monomial::Exponent> e(f.exponents().begin(), f.exponents().end());
  if (e.empty()) e.push_back(0);
  e.push_back(1);
  const auto gb = tail(g);
  e.insert(e.end(), gb.begin(), gb.end());
  return Polynomial(Monomial(std::move(e)));
}

}  // namespace

RT0Element odot_concatenation(const RT0Element& x, const RT0Element& y) {
  if (!y.is_t0_free()) throw DomainError("odot_concatenation: right factor depends on t0");
  Polynomial out;
  for (const auto& [mx, cx] : x.polynomial().terms())
    for (const auto& [my, cy] : y.polynomial().terms()) out += cx * cy * concatenate_monomials(mx, my);
  return RT0Element::from_polynomial(std::move(out));
}

RT0Element odot(const RT0Element& x, const RT0Element& y) {
  Polynomial out;
  for (const auto& [mx, cx] : x.polynomial().terms()) {
    for (const auto& [my, cy] : y.polynomial().terms()) {
      Polynomial product = odot_monomials(mx, my);
      if (my.exponent(0) == 0 && product != concatenate_monomials(mx, my))
        throw InternalError("odot: level-" + std::to_string(mx.degree() + my.degree() + 1) +
                            " decode of " + to_string(mx) + " (.) " + to_string(my) + " gives " +
                            to_string(product) + ", concatenation formula disagrees");
      out += cx * cy * product;
    }
  }
  return RT0Element::from_polynomial(std::move(out));
}

RT0Element odot_pow(const RT0Element& x, unsigned n) {
  if (n == 0) throw DomainError("odot_pow: the odot product has no unit; n must be positive");
  RT0Element result = x;
  for (unsigned i = 1; i < n; ++i) result = odot(result, x);
  return result;
}

bool leading_term_check(const Monomial& x) {
  if (!x.prefix_length()) throw DomainError("leading_term_check: not an R[t0] monomial");
  const RT0Element product = odot(RT0Element::one(), RT0Element::from_polynomial(Polynomial(x)));
  std::vector<Monomial::Exponent> lead{0, x.exponent(0) + 1};
  const auto a = tail(x);
  lead.insert(lead.end(), a.begin(), a.end());
  const Monomial expected(std::move(lead));
  const unsigned top = x.exponent(0) + 1;
  bool has_t0_free = false;
  for (const auto& [m, c] : product.polynomial().terms()) {
    if (m.exponent(0) == 0) has_t0_free = true;
    if (m == expected) {
      if (c != 1) return false;
    } else if (m.exponent(1) >= top) {
      return false;
    }
  }
  return has_t0_free && product.polynomial().coefficient(expected) == 1;
}

ClassConstants ClassConstants::standard() {
  const Polynomial t0 = Polynomial::variable(0);
  const Polynomial t1 = Polynomial::variable(1);
  return ClassConstants{RT0Element::from_polynomial(-t0), RT0Element::from_polynomial(t0 + t1),
                        RT0Element::from_polynomial(-t0 - t1), RT0Element::from_polynomial(t0)};
}

// ---------------------------------------------------------------------------
// Substitution of a base class for t0

bool BaseTensorR::is_zero() const {
  return std::all_of(parts.begin(), parts.end(), [](const RElement& r) { return r.is_zero(); });
}

BaseTensorR substitute_class(const RT0Element& x, const GradedAlgebra& algebra, const AlgElement& c) {
  if (c.size() != algebra.dimension()) throw DomainError("substitute_class: class has wrong dimension");
  if (!algebra.is_homogeneous_of_degree(c, 1))
    throw DomainError("substitute_class: substituted class must be homogeneous of degree 1");
  BaseTensorR out{std::vector<RElement>(algebra.dimension())};
  AlgElement power = algebra.unit();
  unsigned current = 0;
  for (const auto& [i, h] : x.t0_coefficients()) {
    while (current < i) {
      power = algebra.mul(power, c);
      ++current;
    }
    if (is_zero(power)) break;
    for (std::size_t b = 0; b < power.size(); ++b)
      if (power[b] != 0) out.parts[b] = out.parts[b] + power[b] * h;
  }
  return out;
}

}  // namespace zoll
