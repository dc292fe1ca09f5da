#include "zoll/polynomial.hpp"

#include <algorithm>
#include <numeric>

#include "zoll/errors.hpp"

namespace zoll {

Monomial::Monomial(std::vector<Exponent> exponents) : exps_(std::move(exponents)) { trim(); }

void Monomial::trim() {
  while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
  degree_ = std::accumulate(exps_.begin(), exps_.end(), 0u);
}

Monomial Monomial::variable(std::size_t index, Exponent power) {
  std::vector<Exponent> e(index + 1, 0);
  e[index] = power;
  return Monomial(std::move(e));
}

std::optional<std::size_t> Monomial::prefix_length() const noexcept {
  for (std::size_t i = 1; i < exps_.size(); ++i)
    if (exps_[i] == 0) return std::nullopt;
  return exps_.empty() ? 0 : exps_.size() - 1;
}

Monomial Monomial::operator*(const Monomial& other) const {
  const auto& longer = exps_.size() >= other.exps_.size() ? exps_ : other.exps_;
  const auto& shorter = exps_.size() >= other.exps_.size() ? other.exps_ : exps_;
  Monomial out;
  out.exps_ = longer;
  for (std::size_t i = 0; i < shorter.size(); ++i) out.exps_[i] += shorter[i];
  out.degree_ = degree_ + other.degree_;
  return out;
}

Monomial Monomial::without_t0() const { return with_exponent(0, 0); }

Monomial Monomial::with_exponent(std::size_t var, Exponent power) const {
  std::vector<Exponent> e = exps_;
  if (e.size() <= var) e.resize(var + 1, 0);
  e[var] = power;
  return Monomial(std::move(e));
}

bool CanonicalOrder::operator()(const Monomial& a, const Monomial& b) const noexcept {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  auto ea = a.exponents();
  auto eb = b.exponents();
  const std::size_t n = std::max(ea.size(), eb.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto x = i < ea.size() ? ea[i] : 0;
    const auto y = i < eb.size() ? eb[i] : 0;
    if (x != y) return x > y;
  }
  return false;
}

Polynomial::Polynomial(const Scalar& constant) {
  if (constant != 0) terms_.emplace(Monomial{}, constant).first->second.canonicalize();
}

Polynomial::Polynomial(const Monomial& m, const Scalar& coeff) {
  if (coeff != 0) terms_.emplace(m, coeff).first->second.canonicalize();
}

Scalar Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

int Polynomial::degree() const noexcept {
  // The canonical order puts the highest degree first.
  return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.degree());
}

bool Polynomial::is_homogeneous() const noexcept {
  return terms_.empty() || terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

std::size_t Polynomial::width() const noexcept {
  std::size_t w = 0;
  for (const auto& [m, c] : terms_) w = std::max(w, m.width());
  return w;
}

Monomial::Exponent Polynomial::max_exponent(std::size_t var) const noexcept {
  Monomial::Exponent e = 0;
  for (const auto& [m, c] : terms_) e = std::max(e, m.exponent(var));
  return e;
}

void Polynomial::add_term(const Monomial& m, const Scalar& c) {
  if (c == 0) return;
  // mpq_class(n, d) is not reduced until canonicalize(); equality needs it.
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) {
    it->second.canonicalize();
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial& Polynomial::operator*=(const Scalar& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result(1);
  Polynomial base = *this;
  while (k != 0) {
    if (k & 1u) result *= base;
    k >>= 1;
    if (k != 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::transform(const std::function<Polynomial(const Monomial&)>& f) const {
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    const Polynomial image = f(m);
    for (const auto& [mi, ci] : image.terms_) out.add_term(mi, c * ci);
  }
  return out;
}

Polynomial Polynomial::filter(const std::function<bool(const Monomial&)>& pred) const {
  Polynomial out;
  for (const auto& [m, c] : terms_)
    if (pred(m)) out.terms_.emplace_hint(out.terms_.end(), m, c);
  return out;
}

Polynomial substitute(const Polynomial& p, std::span<const Polynomial> images) {
  // Powers are shared across terms; cache them per variable.
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power_of = [&](std::size_t var, Monomial::Exponent e) -> const Polynomial& {
    auto& cache = powers[var];
    if (cache.empty()) cache.emplace_back(1);
    while (cache.size() <= e) cache.push_back(cache.back() * images[var]);
    return cache[e];
  };
  return p.transform([&](const Monomial& m) {
    Polynomial image(1);
    std::vector<Monomial::Exponent> kept(m.width(), 0);
    for (std::size_t v = 0; v < m.width(); ++v) {
      const auto e = m.exponent(v);
      if (e == 0) continue;
      if (v < images.size())
        image *= power_of(v, e);
      else
        kept[v] = e;
    }
    return image * Polynomial(Monomial(std::move(kept)));
  });
}

Polynomial substitute_t0(const Polynomial& p, const Polynomial& s) {
  return substitute(p, std::span<const Polynomial>(&s, 1));
}

Polynomial set_var_zero(const Polynomial& p, std::size_t i) {
  if (i == 0) throw DomainError("set_var_zero: variable index must be positive");
  return p.filter([i](const Monomial& m) { return m.exponent(i) == 0; });
}

namespace {

void monomials_rec(unsigned remaining, std::size_t var, std::size_t last,
                   std::vector<Monomial::Exponent>& cur, std::vector<Monomial>& out) {
  if (var == last) {
    cur[var] = remaining;
    out.emplace_back(cur);
    cur[var] = 0;
    return;
  }
  for (unsigned e = remaining + 1; e-- > 0;) {
    cur[var] = e;
    monomials_rec(remaining - e, var + 1, last, cur, out);
  }
  cur[var] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(unsigned deg, std::size_t first, std::size_t last) {
  std::vector<Monomial> out;
  if (first > last) {
    if (deg == 0) out.emplace_back();
    return out;
  }
  std::vector<Monomial::Exponent> cur(last + 1, 0);
  monomials_rec(deg, first, last, cur, out);
  return out;
}

}  // namespace zoll
