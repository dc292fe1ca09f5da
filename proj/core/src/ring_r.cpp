#include "zoll/ring_r.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "zoll/errors.hpp"
#include "zoll/expression.hpp"
#include "zoll/increasing_map.hpp"

namespace zoll {

bool check_component(std::size_t n, const Polynomial& p) {
  for (const auto& [m, c] : p.terms()) {
    if (m.exponent(0) != 0 || m.width() > n + 1) return false;
    for (std::size_t i = 1; i <= n; ++i)
      if (m.exponent(i) == 0) return false;
  }
  return true;
}

RElement RElement::from_polynomial(Polynomial p) {
  for (const auto& [m, c] : p.terms()) {
    if (m.exponent(0) != 0 || !m.prefix_length())
      throw MembershipError("not an element of R: monomial " + to_string(m));
  }
  return RElement(std::move(p));
}

RElement RElement::from_components(const std::map<std::size_t, Polynomial>& components) {
  Polynomial sum;
  for (const auto& [n, f] : components) {
    if (!check_component(n, f))
      throw MembershipError("component " + std::to_string(n) + " = " + to_string(f) +
                            " is not in I_" + std::to_string(n));
    sum += f;
  }
  return RElement(std::move(sum));
}

std::map<std::size_t, Polynomial> RElement::components() const {
  std::map<std::size_t, Polynomial> out;
  for (const auto& [m, c] : poly_.terms()) out[*m.prefix_length()].add_term(m, c);
  return out;
}

Polynomial RElement::component(std::size_t n) const {
  return poly_.filter([n](const Monomial& m) { return m.prefix_length() == n; });
}

std::size_t RElement::top_component() const noexcept { return poly_.width() == 0 ? 0 : poly_.width() - 1; }

RElement r_mul(const RElement& f, const RElement& g) {
  const auto fc = f.components();
  const auto gc = g.components();
  Polynomial h;
  for (const auto& [p, fp] : fc) {
    for (const auto& [q, gq] : gc) {
      for (std::size_t n = std::max(p, q); n <= p + q; ++n) {
        const auto alphas = enumerate_increasing_maps(p, n);
        const auto betas = enumerate_increasing_maps(q, n);
        std::vector<Polynomial> pushed_g;
        pushed_g.reserve(betas.size());
        for (const auto& beta : betas) pushed_g.push_back(pushforward(beta, gq));
        std::vector<char> covered(n + 1);
        for (const auto& alpha : alphas) {
          const Polynomial pushed_f = pushforward(alpha, fp);
          for (std::size_t b = 0; b < betas.size(); ++b) {
            std::fill(covered.begin(), covered.end(), 0);
            for (auto v : alpha.values()) covered[v] = 1;
            for (auto v : betas[b].values()) covered[v] = 1;
            if (std::count(covered.begin() + 1, covered.end(), 1) != static_cast<long>(n)) continue;
            h += pushed_f * pushed_g[b];
          }
        }
      }
    }
  }
  return RElement::from_polynomial(std::move(h));
}

namespace detail {

Polynomial project_polynomial(const Polynomial& p, std::size_t d) {
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    const auto n = m.prefix_length();
    if (!n) throw MembershipError("projection: monomial " + to_string(m) + " has a gap in its support");
    for (const auto& values : increasing_value_lists(*n, 1, d)) {
      std::vector<Monomial::Exponent> e(d + 1, 0);
      e[0] = m.exponent(0);
      for (std::size_t i = 1; i <= *n; ++i) e[values[i - 1]] = m.exponent(i);
      out.add_term(Monomial(std::move(e)), c);
    }
  }
  return out;
}

Polynomial prefix_terms(const Polynomial& F) {
  return F.filter([](const Monomial& m) { return m.prefix_length().has_value(); });
}

}  // namespace detail

RdElement project_to_level(const RElement& f, std::size_t d) {
  return RdElement{d, detail::project_polynomial(f.polynomial(), d)};
}

RElement decode_rd(const Polynomial& F, std::size_t d) {
  for (const auto& [m, c] : F.terms()) {
    if (m.exponent(0) != 0)
      throw DomainError("decode_rd: t0 occurs in " + to_string(m));
    if (m.width() > d + 1)
      throw DomainError("decode_rd: variable t" + std::to_string(m.width() - 1) +
                        " exceeds level " + std::to_string(d));
  }
  RElement f = RElement::from_polynomial(detail::prefix_terms(F));
  if (project_to_level(f, d).value != F)
    throw MembershipError("not in R_" + std::to_string(d) + ": " + to_string(F));
  return f;
}

RdElement restrict_level(const RdElement& F) {
  if (F.level == 0) throw DomainError("restrict_level: level must be at least 1");
  return RdElement{F.level - 1, set_var_zero(F.value, F.level)};
}

}  // namespace zoll
