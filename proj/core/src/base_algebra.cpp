#include "zoll/base_algebra.hpp"

#include "config_text.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>

#include "zoll/errors.hpp"

namespace zoll {

// ---------------------------------------------------------------------------
// Element arithmetic

AlgElement add(const AlgElement& x, const AlgElement& y) {
  if (x.size() != y.size()) throw DomainError("algebra elements of different dimension");
  AlgElement out = x;
  for (std::size_t i = 0; i < y.size(); ++i) out[i] += y[i];
  return out;
}

AlgElement scale(const Scalar& c, const AlgElement& x) {
  AlgElement out = x;
  for (auto& v : out) v *= c;
  return out;
}

bool is_zero(const AlgElement& x) {
  return std::all_of(x.begin(), x.end(), [](const Scalar& s) { return s == 0; });
}

// ---------------------------------------------------------------------------
// GradedAlgebra

GradedAlgebra::GradedAlgebra(std::vector<BasisVector> basis,
                             std::vector<std::vector<AlgElement>> products, std::size_t unit)
    : basis_(std::move(basis)), products_(std::move(products)), unit_(unit) {
  validate();
}

std::optional<std::size_t> GradedAlgebra::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].name == name) return i;
  return std::nullopt;
}

AlgElement GradedAlgebra::unit() const { return basis_element(unit_); }

AlgElement GradedAlgebra::basis_element(std::size_t i) const {
  AlgElement e = zero();
  e.at(i) = 1;
  return e;
}

AlgElement GradedAlgebra::mul(const AlgElement& x, const AlgElement& y) const {
  const std::size_t dim = dimension();
  if (x.size() != dim || y.size() != dim) throw DomainError("algebra element has wrong dimension");
  AlgElement out = zero();
  for (std::size_t a = 0; a < dim; ++a) {
    if (x[a] == 0) continue;
    for (std::size_t b = 0; b < dim; ++b) {
      if (y[b] == 0) continue;
      const Scalar c = x[a] * y[b];
      const AlgElement& p = products_[a][b];
      for (std::size_t k = 0; k < dim; ++k)
        if (p[k] != 0) out[k] += c * p[k];
    }
  }
  return out;
}

AlgElement alg_mul(const GradedAlgebra& algebra, const AlgElement& x, const AlgElement& y) {
  return algebra.mul(x, y);
}

AlgElement GradedAlgebra::pow(const AlgElement& x, unsigned k) const {
  AlgElement result = unit();
  for (unsigned i = 0; i < k; ++i) result = mul(result, x);
  return result;
}

std::optional<int> GradedAlgebra::homogeneous_degree(const AlgElement& x) const {
  std::optional<int> deg;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    if (deg && *deg != basis_[i].degree) return std::nullopt;
    deg = basis_[i].degree;
  }
  return deg;
}

bool GradedAlgebra::is_homogeneous_of_degree(const AlgElement& x, int degree) const {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0 && basis_[i].degree != degree) return false;
  return true;
}

std::string GradedAlgebra::format(const AlgElement& x) const {
  std::string out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    if (!out.empty()) out += " + ";
    out += x[i] == 1 ? basis_[i].name : x[i].get_str() + "*" + basis_[i].name;
  }
  return out.empty() ? "0" : out;
}

void GradedAlgebra::validate() const {
  const std::size_t dim = dimension();
  if (dim == 0) throw ConfigError("algebra has an empty basis");
  if (unit_ >= dim) throw ConfigError("unit index out of range");
  if (basis_[unit_].degree != 0) throw ConfigError("unit '" + basis_[unit_].name + "' must have degree 0");
  if (products_.size() != dim) throw ConfigError("product table has wrong size");
  for (const auto& row : products_) {
    if (row.size() != dim) throw ConfigError("product table has wrong size");
    for (const auto& p : row)
      if (p.size() != dim) throw ConfigError("product table entry has wrong dimension");
  }
  const auto& name = [this](std::size_t i) -> const std::string& { return basis_[i].name; };
  for (std::size_t a = 0; a < dim; ++a) {
    if (products_[unit_][a] != basis_element(a) || products_[a][unit_] != basis_element(a))
      throw ConfigError("unit law fails for " + name(a));
    for (std::size_t b = 0; b < dim; ++b) {
      if (products_[a][b] != products_[b][a])
        throw ConfigError("multiplication not commutative on (" + name(a) + ", " + name(b) + ")");
      if (!is_homogeneous_of_degree(products_[a][b], basis_[a].degree + basis_[b].degree))
        throw ConfigError("degree not additive on (" + name(a) + ", " + name(b) + ")");
      for (std::size_t c = 0; c < dim; ++c) {
        const AlgElement left = mul(products_[a][b], basis_element(c));
        const AlgElement right = mul(basis_element(a), products_[b][c]);
        if (left != right)
          throw ConfigError("multiplication not associative on (" + name(a) + ", " + name(b) +
                            ", " + name(c) + ")");
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Permutations

Permutation compose(const Permutation& pi, const Permutation& rho) {
  if (pi.size() != rho.size()) throw DomainError("composing permutations of different size");
  Permutation out(pi.size());
  for (std::size_t i = 0; i < rho.size(); ++i) out[i] = pi[rho[i]];
  return out;
}

Permutation inverse(const Permutation& pi) {
  Permutation out(pi.size());
  for (std::size_t i = 0; i < pi.size(); ++i) out.at(pi[i]) = i;
  return out;
}

Permutation identity_permutation(std::size_t n) {
  Permutation p(n + 1);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<Permutation> out;
  Permutation p = identity_permutation(n);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<Permutation> permutations_fixing_zero(std::size_t n) {
  std::vector<Permutation> out;
  Permutation p = identity_permutation(n);
  do out.push_back(p);
  while (std::next_permutation(p.begin() + 1, p.end()));
  return out;
}

Permutation cyclic_tau(std::size_t n) {
  Permutation p(n + 1);
  for (std::size_t i = 0; i <= n; ++i) p[i] = (i + 1) % (n + 1);
  return p;
}

Permutation operadic_composite(const Permutation& pi, const Permutation& rho, std::size_t j) {
  const std::size_t m = pi.size() - 1;
  const std::size_t n = rho.size() - 1;
  if (j < 1 || j > m) throw DomainError("operadic_composite: slot out of range");
  if (pi[0] != 0 || rho[0] != 0) throw DomainError("operadic_composite: permutations must fix 0");
  // u_1..u_{j-1}, u_{j+1}..u_m and u'_1..u'_n as in the axiom.
  std::vector<std::size_t> u(m + 1, 0);
  for (std::size_t k = 1; k < j; ++k) u[k] = k;
  for (std::size_t k = j + 1; k <= m; ++k) u[k] = k + n - 1;
  std::vector<std::size_t> u_prime(n + 1, 0);
  for (std::size_t k = 1; k <= n; ++k) u_prime[k] = j + k - 1;

  const Permutation pi_inv = inverse(pi);
  const Permutation rho_inv = inverse(rho);
  const std::size_t pj = pi[j];
  Permutation composite_inv(m + n, 0);
  for (std::size_t i = 1; i <= m + n - 1; ++i) {
    if (i <= pj - 1)
      composite_inv[i] = u[pi_inv[i]];
    else if (i <= pj + n - 1)
      composite_inv[i] = u_prime[rho_inv[i - pj + 1]];
    else
      composite_inv[i] = u[pi_inv[i - n + 1]];
  }
  return inverse(composite_inv);
}

// ---------------------------------------------------------------------------
// BaseOperadConfig

const BaseOperadConfig::Arity& BaseOperadConfig::arity(std::size_t n) const {
  auto it = arities_.find(n);
  if (it == arities_.end())
    throw ConfigError("base '" + name_ + "' has no algebra for arity " + std::to_string(n));
  return it->second;
}

const AlgElement& BaseOperadConfig::phi(std::size_t n, std::size_t i) const {
  const Arity& a = arity(n);
  if (i >= a.phi.size())
    throw ConfigError("base '" + name_ + "' has no phi " + std::to_string(i) + " in arity " +
                      std::to_string(n));
  return a.phi[i];
}

std::vector<std::size_t> BaseOperadConfig::arities() const {
  std::vector<std::size_t> out;
  for (const auto& [n, a] : arities_) out.push_back(n);
  return out;
}

AlgElement BaseOperadConfig::act(const Permutation& pi, const AlgElement& x) const {
  if (pi.size() < 3) throw DomainError("base action needs arity >= 2");
  const Arity& a = arity(pi.size() - 1);
  auto it = a.action.find(pi);
  if (it == a.action.end()) return x;
  AlgElement out = a.algebra.zero();
  for (std::size_t b = 0; b < x.size(); ++b)
    if (x[b] != 0) out = add(out, scale(x[b], it->second[b]));
  return out;
}

bool BaseOperadConfig::has_clutching(std::size_t m, std::size_t n, std::size_t j) const {
  return clutching_.count({m, n, j}) != 0;
}

AlgElement BaseOperadConfig::clutch(std::size_t m, std::size_t n, std::size_t j, const AlgElement& x,
                                    const AlgElement& y) const {
  auto it = clutching_.find({m, n, j});
  if (it == clutching_.end())
    throw ConfigError("base '" + name_ + "' has no clutching map m=" + std::to_string(m) +
                      " n=" + std::to_string(n) + " j=" + std::to_string(j));
  const GradedAlgebra& target = algebra(m + n - 1);
  AlgElement out = target.zero();
  for (std::size_t a = 0; a < x.size(); ++a) {
    if (x[a] == 0) continue;
    for (std::size_t b = 0; b < y.size(); ++b)
      if (y[b] != 0) out = add(out, scale(x[a] * y[b], it->second[a][b]));
  }
  return out;
}

void BaseOperadConfig::add_arity(std::size_t n, Arity data) {
  if (n < 2) throw ConfigError("base algebras exist only for arity n >= 2");
  arities_.insert_or_assign(n, std::move(data));
}

void BaseOperadConfig::add_clutching(std::size_t m, std::size_t n, std::size_t j,
                                     std::vector<std::vector<AlgElement>> table) {
  clutching_.insert_or_assign(std::make_tuple(m, n, j), std::move(table));
}

void BaseOperadConfig::validate() const {
  for (const auto& [n, a] : arities_) {
    const auto where = " in arity " + std::to_string(n);
    if (a.phi.size() != n + 1)
      throw ConfigError("expected " + std::to_string(n + 1) + " phi classes" + where);
    for (std::size_t i = 0; i <= n; ++i) {
      if (a.phi[i].size() != a.algebra.dimension())
        throw ConfigError("phi " + std::to_string(i) + " has wrong dimension" + where);
      if (!a.algebra.is_homogeneous_of_degree(a.phi[i], 1))
        throw ConfigError("phi " + std::to_string(i) + " is not homogeneous of degree 1" + where);
    }
    for (const auto& [pi, images] : a.action) {
      Permutation sorted = pi;
      std::sort(sorted.begin(), sorted.end());
      if (sorted != identity_permutation(n))
        throw ConfigError("invalid permutation" + where);
      if (images.size() != a.algebra.dimension())
        throw ConfigError("permutation image table has wrong size" + where);
    }
    // Group-action law on all pairs; S_{n+} is small in the supported range.
    if (!a.action.empty() && n <= 5) {
      const auto perms = all_permutations(n);
      for (const auto& pi : perms) {
        for (const auto& rho : perms) {
          const Permutation pr = compose(pi, rho);
          for (std::size_t b = 0; b < a.algebra.dimension(); ++b) {
            const AlgElement e = a.algebra.basis_element(b);
            if (act(pr, e) != act(pi, act(rho, e)))
              throw ConfigError("permutation action is not a group action" + where +
                                " (basis " + a.algebra.basis()[b].name + ")");
          }
        }
      }
    }
  }
  for (const auto& [key, table] : clutching_) {
    const auto [m, n, j] = key;
    const auto where = " for clutching m=" + std::to_string(m) + " n=" + std::to_string(n) +
                       " j=" + std::to_string(j);
    if (j < 1 || j > m) throw ConfigError("slot out of range" + where);
    if (!has_arity(m) || !has_arity(n) || !has_arity(m + n - 1))
      throw ConfigError("missing algebra" + where);
    const std::size_t dm = algebra(m).dimension();
    const std::size_t dn = algebra(n).dimension();
    const std::size_t dt = algebra(m + n - 1).dimension();
    if (table.size() != dm) throw ConfigError("table has wrong size" + where);
    for (const auto& row : table) {
      if (row.size() != dn) throw ConfigError("table has wrong size" + where);
      for (const auto& e : row)
        if (e.size() != dt) throw ConfigError("table entry has wrong dimension" + where);
    }
  }
}

BaseOperadConfig BaseOperadConfig::trivial(std::size_t max_arity) {
  BaseOperadConfig config;
  config.set_name("trivial");
  for (std::size_t n = 2; n <= max_arity; ++n) {
    GradedAlgebra q({{"pt", 0}}, {{AlgElement{Scalar(1)}}}, 0);
    config.add_arity(n, Arity{q, std::vector<AlgElement>(n + 1, AlgElement{Scalar(0)}), {}});
  }
  for (std::size_t m = 2; m <= max_arity; ++m)
    for (std::size_t n = 2; m + n - 1 <= max_arity; ++n)
      for (std::size_t j = 1; j <= m; ++j)
        config.add_clutching(m, n, j, {{AlgElement{Scalar(1)}}});
  config.validate();
  return config;
}

BaseOperadConfig BaseOperadConfig::truncated_rank2(std::size_t max_arity) {
  BaseOperadConfig config;
  config.set_name("rank2");
  const AlgElement one{Scalar(1), Scalar(0)};
  const AlgElement h{Scalar(0), Scalar(1)};
  const AlgElement zero{Scalar(0), Scalar(0)};
  for (std::size_t n = 2; n <= max_arity; ++n) {
    GradedAlgebra alg({{"one", 0}, {"h", 1}}, {{one, h}, {h, zero}}, 0);
    config.add_arity(n, Arity{alg, std::vector<AlgElement>(n + 1, h), {}});
  }
  for (std::size_t m = 2; m <= max_arity; ++m)
    for (std::size_t n = 2; m + n - 1 <= max_arity; ++n)
      for (std::size_t j = 1; j <= m; ++j) config.add_clutching(m, n, j, {{one, h}, {h, zero}});
  config.validate();
  return config;
}

// ---------------------------------------------------------------------------
// Loader

namespace {

using detail::config_fail;
using detail::parse_index;
using detail::parse_keyed;
using detail::parse_scalar;
using detail::split_words;
using detail::trim;

/// "2*h + 1/2*one - x", a bare scalar (times the unit), or "0".
AlgElement parse_combination(std::string_view text, const GradedAlgebra& alg, std::size_t line) {
  AlgElement out = alg.zero();
  std::string s = trim(text);
  if (s.empty()) config_fail(line, "empty linear combination");
  std::size_t pos = 0;
  bool first = true;
  while (pos < s.size()) {
    int sign = 1;
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      config_fail(line, "expected '+' or '-' in '" + s + "'");
    }
    first = false;
    std::size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    const std::string term = trim(std::string_view(s).substr(pos, end - pos));
    pos = end;
    if (term.empty()) config_fail(line, "empty term in '" + s + "'");
    Scalar coeff(sign);
    std::string name = term;
    if (const auto star = term.find('*'); star != std::string::npos) {
      coeff *= parse_scalar(trim(term.substr(0, star)), line);
      name = trim(term.substr(star + 1));
    } else if (std::isdigit(static_cast<unsigned char>(term.front()))) {
      coeff *= parse_scalar(term, line);
      name.clear();
    }
    if (name.empty()) {
      out = add(out, scale(coeff, alg.unit()));
      continue;
    }
    const auto idx = alg.index_of(name);
    if (!idx) config_fail(line, "unknown basis element '" + name + "'");
    out[*idx] += coeff;
  }
  return out;
}

struct RawAlgebra {
  std::size_t line = 0;
  std::vector<GradedAlgebra::BasisVector> basis;
  std::string unit;
  std::vector<std::pair<std::size_t, std::string>> muls;   // (line, text)
  std::vector<std::pair<std::size_t, std::string>> phis;
  std::vector<std::pair<std::size_t, std::string>> perms;
};

std::pair<std::string, std::string> split_equation(const std::string& text, std::size_t line) {
  const auto eq = text.find('=');
  if (eq == std::string::npos) config_fail(line, "expected '='");
  return {trim(std::string_view(text).substr(0, eq)), trim(std::string_view(text).substr(eq + 1))};
}

/// Like split_equation but ignores '=' inside key=value words on the left.
std::pair<std::string, std::string> split_last_equation(const std::string& text, std::size_t line) {
  // The first " = " separated by whitespace marks the equation.
  const auto eq = text.find(" = ");
  if (eq == std::string::npos) config_fail(line, "expected ' = '");
  return {trim(std::string_view(text).substr(0, eq)), trim(std::string_view(text).substr(eq + 3))};
}

GradedAlgebra build_algebra(const RawAlgebra& raw) {
  if (raw.basis.empty()) config_fail(raw.line, "algebra section without basis");
  std::size_t unit = raw.basis.size();
  if (!raw.unit.empty()) {
    for (std::size_t i = 0; i < raw.basis.size(); ++i)
      if (raw.basis[i].name == raw.unit) unit = i;
    if (unit == raw.basis.size()) config_fail(raw.line, "unknown unit '" + raw.unit + "'");
  } else {
    for (std::size_t i = 0; i < raw.basis.size() && unit == raw.basis.size(); ++i)
      if (raw.basis[i].degree == 0) unit = i;
    if (unit == raw.basis.size()) config_fail(raw.line, "no degree-0 basis element for the unit");
  }
  const std::size_t dim = raw.basis.size();
  // Products default to zero except those with the unit.
  std::vector<std::vector<AlgElement>> table(dim, std::vector<AlgElement>(dim, AlgElement(dim, 0)));
  std::vector<std::vector<char>> given(dim, std::vector<char>(dim, 0));
  for (std::size_t a = 0; a < dim; ++a) {
    table[unit][a][a] = 1;
    table[a][unit][a] = 1;
  }
  // A shell algebra with only unit products, used to parse combinations.
  std::vector<std::vector<AlgElement>> shell = table;
  GradedAlgebra names(raw.basis, shell, unit);
  for (const auto& [line, text] : raw.muls) {
    const auto [lhs, rhs] = split_equation(text, line);
    const auto words = split_words(lhs);
    if (words.size() != 2) config_fail(line, "expected 'mul <a> <b> = <combination>'");
    const auto a = names.index_of(words[0]);
    const auto b = names.index_of(words[1]);
    if (!a || !b) config_fail(line, "unknown basis element in '" + lhs + "'");
    table[*a][*b] = parse_combination(rhs, names, line);
    given[*a][*b] = 1;
    if (!given[*b][*a]) table[*b][*a] = table[*a][*b];
  }
  return GradedAlgebra(raw.basis, std::move(table), unit);
}

}  // namespace

BaseOperadConfig parse_base_config(std::string_view text) {
  std::map<std::size_t, RawAlgebra> raw;
  std::vector<std::pair<std::size_t, std::string>> clutches;
  std::string name = "custom";
  RawAlgebra* current = nullptr;

  std::istringstream in{std::string(text)};
  std::string line_text;
  std::size_t line = 0;
  while (std::getline(in, line_text)) {
    ++line;
    if (const auto hash = line_text.find('#'); hash != std::string::npos) line_text.resize(hash);
    const std::string l = trim(line_text);
    if (l.empty()) continue;
    if (l.front() == '[') {
      if (l.back() != ']') config_fail(line, "unterminated section header");
      const auto words = split_words(std::string_view(l).substr(1, l.size() - 2));
      if (words.size() != 2 || words[0] != "algebra") config_fail(line, "expected [algebra n=<arity>]");
      const std::size_t n = parse_keyed(words[1], "n", line);
      if (n < 2) config_fail(line, "algebra arity must be at least 2");
      if (raw.count(n)) config_fail(line, "duplicate algebra section for n=" + std::to_string(n));
      current = &raw[n];
      current->line = line;
      continue;
    }
    const auto words = split_words(l);
    const std::string& keyword = words.front();
    const std::string rest = trim(std::string_view(l).substr(keyword.size()));
    if (keyword == "name") {
      name = rest;
      continue;
    }
    if (keyword == "clutch") {
      clutches.emplace_back(line, rest);
      continue;
    }
    if (current == nullptr) config_fail(line, "'" + keyword + "' outside an [algebra] section");
    if (keyword == "basis") {
      if (words.size() != 4 || words[2] != "deg") config_fail(line, "expected 'basis <name> deg <d>'");
      int deg = 0;
      try {
        deg = std::stoi(words[3]);
      } catch (const std::exception&) {
        config_fail(line, "bad degree '" + words[3] + "'");
      }
      for (const auto& b : current->basis)
        if (b.name == words[1]) config_fail(line, "duplicate basis element '" + words[1] + "'");
      current->basis.push_back({words[1], deg});
    } else if (keyword == "unit") {
      if (words.size() != 2) config_fail(line, "expected 'unit <name>'");
      current->unit = words[1];
    } else if (keyword == "mul") {
      current->muls.emplace_back(line, rest);
    } else if (keyword == "phi") {
      current->phis.emplace_back(line, rest);
    } else if (keyword == "perm") {
      current->perms.emplace_back(line, rest);
    } else {
      config_fail(line, "unknown keyword '" + keyword + "'");
    }
  }

  BaseOperadConfig config;
  config.set_name(name);
  for (const auto& [n, r] : raw) {
    BaseOperadConfig::Arity data{build_algebra(r), {}, {}};
    const GradedAlgebra& alg = data.algebra;
    data.phi.assign(n + 1, alg.zero());
    for (const auto& [pline, text] : r.phis) {
      const auto [lhs, rhs] = split_equation(text, pline);
      const std::size_t i = parse_index(lhs, pline);
      if (i > n) config_fail(pline, "phi index out of range");
      data.phi[i] = parse_combination(rhs, alg, pline);
    }
    for (const auto& [pline, text] : r.perms) {
      const auto [lhs, rhs] = split_equation(text, pline);
      const auto words = split_words(lhs);
      if (words.size() != n + 2)
        config_fail(pline, "expected 'perm <" + std::to_string(n + 1) + " entries> <basis> = ...'");
      Permutation pi;
      for (std::size_t k = 0; k <= n; ++k) pi.push_back(parse_index(words[k], pline));
      const auto b = alg.index_of(words.back());
      if (!b) config_fail(pline, "unknown basis element '" + words.back() + "'");
      auto [it, inserted] = data.action.try_emplace(pi);
      if (inserted)
        for (std::size_t k = 0; k < alg.dimension(); ++k) it->second.push_back(alg.basis_element(k));
      it->second[*b] = parse_combination(rhs, alg, pline);
    }
    config.add_arity(n, std::move(data));
  }
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::vector<std::vector<AlgElement>>> tables;
  for (const auto& [cline, text] : clutches) {
    const auto [lhs, rhs] = split_last_equation(text, cline);
    const auto words = split_words(lhs);
    if (words.size() != 5) config_fail(cline, "expected 'clutch m=<m> n=<n> j=<j> <a> <b> = ...'");
    const std::size_t m = parse_keyed(words[0], "m", cline);
    const std::size_t n = parse_keyed(words[1], "n", cline);
    const std::size_t j = parse_keyed(words[2], "j", cline);
    if (!config.has_arity(m) || !config.has_arity(n) || !config.has_arity(m + n - 1))
      config_fail(cline, "clutching refers to a missing algebra");
    if (j < 1 || j > m) config_fail(cline, "clutching slot out of range");
    const GradedAlgebra& am = config.algebra(m);
    const GradedAlgebra& an = config.algebra(n);
    const GradedAlgebra& target = config.algebra(m + n - 1);
    auto [it, inserted] = tables.try_emplace({m, n, j});
    if (inserted)
      it->second.assign(am.dimension(), std::vector<AlgElement>(an.dimension(), target.zero()));
    const auto a = am.index_of(words[3]);
    const auto b = an.index_of(words[4]);
    if (!a || !b) config_fail(cline, "unknown basis element in clutching");
    it->second[*a][*b] = parse_combination(rhs, target, cline);
  }
  for (auto& [key, table] : tables)
    config.add_clutching(std::get<0>(key), std::get<1>(key), std::get<2>(key), std::move(table));
  config.validate();
  return config;
}

BaseOperadConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open base configuration " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_base_config(buffer.str());
}

}  // namespace zoll
