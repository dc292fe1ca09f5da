#include "zoll/odot_basis.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "zoll/errors.hpp"

namespace zoll {

unsigned OdotWord::degree() const {
  return std::accumulate(exponents.begin(), exponents.end(), 0U) +
         static_cast<unsigned>(exponents.size()) - 1;
}

std::vector<OdotWord> odot_words(unsigned degree) {
  std::vector<OdotWord> out;
  std::vector<unsigned> a;
  // r factors whose exponents sum to degree - r + 1, lexicographic.
  auto fill = [&](auto&& self, unsigned slots, unsigned remaining) -> void {
    if (slots == 0) {
      if (remaining == 0) out.push_back(OdotWord{a});
      return;
    }
    for (unsigned v = 0; v <= remaining; ++v) {
      a.push_back(v);
      self(self, slots - 1, remaining - v);
      a.pop_back();
    }
  };
  for (unsigned r = 1; r <= degree + 1; ++r) fill(fill, r, degree + 1 - r);
  return out;
}

namespace {

RT0Element factor(unsigned a, OdotBasisKind kind) {
  if (kind == OdotBasisKind::structure) return RT0Element::t0_power(a);
  return dot_pow(RT0Element::from_polynomial(Polynomial::variable(0) + Polynomial::variable(1)), a);
}

}  // namespace

RT0Element evaluate(const OdotWord& word, OdotBasisKind kind) {
  if (word.exponents.empty()) throw DomainError("evaluate: empty odot word");
  RT0Element result = factor(word.exponents.front(), kind);
  for (std::size_t i = 1; i < word.exponents.size(); ++i) result = odot(result, factor(word.exponents[i], kind));
  return result;
}

Matrix basis_matrix(unsigned degree, OdotBasisKind kind) {
  const auto monomials = enumerate_rt0_monomials(degree);
  const auto words = odot_words(degree);
  std::map<Monomial, std::size_t> row_of;
  for (std::size_t i = 0; i < monomials.size(); ++i) row_of.emplace(monomials[i], i);
  Matrix m(monomials.size(), words.size());
  for (std::size_t c = 0; c < words.size(); ++c) {
    const RT0Element column = evaluate(words[c], kind);
    for (const auto& [mono, coeff] : column.polynomial().terms()) m(row_of.at(mono), c) = coeff;
  }
  return m;
}

OdotExpansion odot_basis_expand(const RT0Element& x, OdotBasisKind kind) {
  std::map<int, Polynomial> by_degree;
  for (const auto& [m, c] : x.polynomial().terms()) by_degree[static_cast<int>(m.degree())].add_term(m, c);
  OdotExpansion out;
  for (const auto& [degree, part] : by_degree) {
    const auto d = static_cast<unsigned>(degree);
    const auto monomials = enumerate_rt0_monomials(d);
    std::vector<Scalar> rhs(monomials.size());
    for (std::size_t i = 0; i < monomials.size(); ++i) rhs[i] = part.coefficient(monomials[i]);
    const auto solution = solve(basis_matrix(d, kind), rhs);
    if (!solution)
      throw InternalError("odot basis matrix in degree " + std::to_string(d) + " is singular");
    const auto words = odot_words(d);
    for (std::size_t i = 0; i < words.size(); ++i)
      if ((*solution)[i] != 0) out.emplace_back((*solution)[i], words[i]);
  }
  return out;
}

OdotExpansion odot_basis_expand_iota(const RT0Element& x) {
  // iota((t0+t1)^{.a1} (.) ... (.) (t0+t1)^{.ar}) = (-1)^{sum a} t0^ar (.) ... (.) t0^a1
  OdotExpansion out;
  for (auto [c, word] : odot_basis_expand(iota(x), OdotBasisKind::structure)) {
    const unsigned total = std::accumulate(word.exponents.begin(), word.exponents.end(), 0U);
    std::reverse(word.exponents.begin(), word.exponents.end());
    out.emplace_back(total % 2 ? Scalar(-c) : c, std::move(word));
  }
  std::map<unsigned, OdotExpansion> by_degree;
  for (auto& term : out) by_degree[term.second.degree()].push_back(std::move(term));
  const auto position = [](const OdotWord& w) {
    const auto words = odot_words(w.degree());
    return std::find(words.begin(), words.end(), w) - words.begin();
  };
  OdotExpansion sorted;
  for (auto& [d, terms] : by_degree) {
    std::sort(terms.begin(), terms.end(),
              [&](const auto& l, const auto& r) { return position(l.second) < position(r.second); });
    for (auto& term : terms) sorted.push_back(std::move(term));
  }
  return sorted;
}

RT0Element evaluate(const OdotExpansion& expansion, OdotBasisKind kind) {
  RT0Element out;
  for (const auto& [c, word] : expansion) out = out + c * evaluate(word, kind);
  return out;
}

std::string to_string(const OdotWord& word, OdotBasisKind kind) {
  const std::string base = kind == OdotBasisKind::structure ? "t0" : "(t0+t1)";
  std::string out;
  for (std::size_t i = 0; i < word.exponents.size(); ++i) {
    if (i) out += " (*) ";
    const unsigned a = word.exponents[i];
    if (a == 0)
      out += "1";
    else if (a == 1)
      out += base;
    else
      out += base + "^" + std::to_string(a);
  }
  return out;
}

std::string to_string(const OdotExpansion& expansion, OdotBasisKind kind) {
  if (expansion.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < expansion.size(); ++i) {
    const auto& [c, word] = expansion[i];
    if (i) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    out += zoll::to_string(Scalar(abs(c))) + " * (" + to_string(word, kind) + ")";
  }
  return out;
}

}  // namespace zoll
