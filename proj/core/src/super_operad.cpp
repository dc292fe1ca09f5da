#include "zoll/super_operad.hpp"

#include <fstream>
#include <sstream>

#include "config_text.hpp"
#include "zoll/errors.hpp"

namespace zoll {

SuperSpace::SuperSpace(std::vector<BasisVector> basis, Matrix pairing)
    : basis_(std::move(basis)), pairing_(std::move(pairing)) {
  const std::size_t d = basis_.size();
  if (d == 0) throw ConfigError("super space needs at least one basis vector");
  if (d > 255) throw ConfigError("super space dimension is limited to 255");
  if (pairing_.rows() != d || pairing_.cols() != d) throw ConfigError("pairing matrix has the wrong shape");
  for (const auto& v : basis_)
    if (v.parity != 0 && v.parity != 1) throw ConfigError("parity of '" + v.name + "' must be 0 or 1");
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      const Scalar& x = pairing_(i, k);
      if (basis_[i].parity != basis_[k].parity && x != 0)
        throw ConfigError("pairing is not even: b(" + basis_[i].name + ", " + basis_[k].name + ") != 0");
      const int sign = (basis_[i].parity && basis_[k].parity) ? -1 : 1;
      if (x != sign * pairing_(k, i))
        throw ConfigError("pairing is not super-symmetric at (" + basis_[i].name + ", " + basis_[k].name + ")");
    }
  }
}

SuperSpace SuperSpace::even_identity(std::size_t dim) {
  std::vector<BasisVector> basis;
  Matrix b(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    basis.push_back({"e" + std::to_string(i + 1), 0});
    b(i, i) = 1;
  }
  return SuperSpace(std::move(basis), std::move(b));
}

SuperSpace SuperSpace::mixed(std::size_t dim) {
  std::vector<BasisVector> basis;
  switch (dim) {
    case 1: basis = {{"e", 0}}; break;
    case 2: basis = {{"o1", 1}, {"o2", 1}}; break;
    case 3: basis = {{"e", 0}, {"o1", 1}, {"o2", 1}}; break;
    case 4: basis = {{"e1", 0}, {"e2", 0}, {"o1", 1}, {"o2", 1}}; break;
    default: throw DomainError("SuperSpace::mixed: dimension must be 1..4");
  }
  Matrix b(dim, dim);
  if (dim == 1 || dim == 3) b(0, 0) = 1;
  if (dim == 4) {
    // A non-diagonal even block with determinant 1.
    b(0, 0) = 2;
    b(0, 1) = b(1, 0) = 1;
    b(1, 1) = 1;
  }
  if (dim >= 2) {
    const std::size_t o1 = dim - 2;
    b(o1, o1 + 1) = 1;
    b(o1 + 1, o1) = -1;
  }
  return SuperSpace(std::move(basis), std::move(b));
}

std::optional<std::size_t> SuperSpace::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].name == name) return i;
  return std::nullopt;
}

std::string SuperSpace::describe() const {
  std::string out;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (i) out += ", ";
    out += basis_[i].name + (basis_[i].parity ? "(odd)" : "(even)");
  }
  return out;
}

SuperSpace parse_super_space(std::string_view text) {
  using detail::config_fail;
  std::vector<SuperSpace::BasisVector> basis;
  std::vector<std::tuple<std::size_t, std::string, std::string, Scalar>> pairs;
  bool in_space = false;
  std::istringstream in{std::string(text)};
  std::string line_text;
  std::size_t line = 0;
  while (std::getline(in, line_text)) {
    ++line;
    if (const auto hash = line_text.find('#'); hash != std::string::npos) line_text.resize(hash);
    const std::string l = detail::trim(line_text);
    if (l.empty()) continue;
    if (l == "[space]") {
      in_space = true;
      continue;
    }
    if (l.front() == '[') config_fail(line, "expected [space]");
    if (!in_space) config_fail(line, "content before the [space] header");
    const auto words = detail::split_words(l);
    if (words[0] == "basis") {
      if (words.size() != 4 || words[2] != "parity" || (words[3] != "0" && words[3] != "1"))
        config_fail(line, "expected 'basis <name> parity <0|1>'");
      basis.push_back({words[1], words[3] == "1"});
    } else if (words[0] == "pair") {
      if (words.size() != 5 || words[3] != "=") config_fail(line, "expected 'pair <a> <b> = <q>'");
      Scalar value = words[4].front() == '-' ? Scalar(-detail::parse_scalar(words[4].substr(1), line))
                                             : detail::parse_scalar(words[4], line);
      pairs.emplace_back(line, words[1], words[2], value);
    } else {
      config_fail(line, "unknown keyword '" + words[0] + "'");
    }
  }
  Matrix b(basis.size(), basis.size());
  const auto find = [&](const std::string& name, std::size_t l) {
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (basis[i].name == name) return i;
    config_fail(l, "unknown basis vector '" + name + "'");
  };
  for (const auto& [l, a, c, value] : pairs) b(find(a, l), find(c, l)) = value;
  return SuperSpace(std::move(basis), std::move(b));
}

SuperSpace load_super_space(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open super space file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_super_space(buffer.str());
}

// ---------------------------------------------------------------------------
// Tensors

SuperTensor::SuperTensor(std::size_t arity) : arity_(arity) {
  if (arity < 2) throw DomainError("SuperTensor: arity must be at least 2");
}

SuperTensor SuperTensor::basis(BasisTuple tuple, const Scalar& coeff) {
  SuperTensor t(tuple.size());
  t.add_term(tuple, coeff);
  return t;
}

void SuperTensor::add_term(const BasisTuple& tuple, const Scalar& coeff) {
  if (tuple.size() != arity_) throw DomainError("SuperTensor: tuple has the wrong arity");
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(tuple, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

std::optional<int> SuperTensor::parity(const SuperSpace& space) const {
  std::optional<int> p;
  for (const auto& [t, c] : terms_) {
    const int q = tuple_parity(space, t);
    if (p && *p != q) return std::nullopt;
    p = q;
  }
  return p ? p : std::optional<int>(0);
}

SuperTensor operator+(SuperTensor a, const SuperTensor& b) {
  if (a.arity_ != b.arity_) throw DomainError("SuperTensor: arity mismatch in sum");
  for (const auto& [t, c] : b.terms_) a.add_term(t, c);
  return a;
}

SuperTensor operator*(const Scalar& c, SuperTensor a) {
  if (c == 0) return SuperTensor(a.arity_);
  for (auto& [t, x] : a.terms_) x *= c;
  return a;
}

std::string SuperTensor::format(const SuperSpace& space) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [t, c] : terms_) {
    if (!first) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    first = false;
    const Scalar a = abs(c);
    if (a != 1) out += to_string(a) + "*";
    for (std::size_t i = 0; i < t.size(); ++i) out += (i ? "(x)" : "") + space.basis()[t[i]].name;
  }
  return out;
}

int tuple_parity(const SuperSpace& space, const BasisTuple& t) {
  int p = 0;
  for (auto i : t) p ^= space.parity(i);
  return p;
}

// ---------------------------------------------------------------------------
// Operad structure on basis tuples

BasisTerm es_compose_basis(const SuperSpace& space, const BasisTuple& v, const BasisTuple& w, std::size_t j) {
  const std::size_t m = v.size() - 1;
  if (w.size() < 2 || v.size() < 2 || j < 1 || j > m) throw DomainError("es_compose: index out of range");
  const Scalar& bj = space.b(v[j], w[0]);
  if (bj == 0) return {Scalar(0), {}};
  // N = sum_{r=0..n} sum_{s=j+1..m} |w_r||v_s|
  int tail = 0;
  for (std::size_t s = j + 1; s <= m; ++s) tail ^= space.parity(v[s]);
  const int n_sign = tail & tuple_parity(space, w);
  BasisTuple out;
  out.reserve(m + w.size() - 1);
  out.insert(out.end(), v.begin(), v.begin() + static_cast<long>(j));
  out.insert(out.end(), w.begin() + 1, w.end());
  out.insert(out.end(), v.begin() + static_cast<long>(j) + 1, v.end());
  return {n_sign ? Scalar(-bj) : bj, std::move(out)};
}

BasisTerm es_permute_basis(const SuperSpace& space, const Permutation& pi, const BasisTuple& v) {
  if (pi.size() != v.size()) throw DomainError("es_permute: permutation size does not match arity");
  // Factor p travels to position pi(p); sort by destination with adjacent swaps.
  std::vector<std::size_t> key(pi.begin(), pi.end());
  BasisTuple cur = v;
  int sign = 0;
  for (std::size_t pass = 0; pass < cur.size(); ++pass) {
    bool swapped = false;
    for (std::size_t k = 0; k + 1 < cur.size() - pass; ++k) {
      if (key[k] > key[k + 1]) {
        std::swap(key[k], key[k + 1]);
        sign ^= space.parity(cur[k]) & space.parity(cur[k + 1]);
        std::swap(cur[k], cur[k + 1]);
        swapped = true;
      }
    }
    if (!swapped) break;
  }
  for (std::size_t k = 0; k < key.size(); ++k)
    if (key[k] != k) throw DomainError("es_permute: not a permutation");
  return {Scalar(sign ? -1 : 1), std::move(cur)};
}

BasisTerm es_permute_word(const SuperSpace& space, const std::vector<std::size_t>& word, const BasisTuple& v) {
  BasisTuple cur = v;
  int sign = 0;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const std::size_t k = *it;
    if (k + 1 >= cur.size()) throw DomainError("es_permute_word: transposition out of range");
    sign ^= space.parity(cur[k]) & space.parity(cur[k + 1]);
    std::swap(cur[k], cur[k + 1]);
  }
  return {Scalar(sign ? -1 : 1), std::move(cur)};
}

SuperTensor es_compose(const SuperSpace& space, const SuperTensor& v, const SuperTensor& w, std::size_t j) {
  if (j < 1 || j + 1 > v.arity()) throw DomainError("es_compose: slot out of range");
  SuperTensor out(v.arity() + w.arity() - 2);
  for (const auto& [tv, cv] : v.terms())
    for (const auto& [tw, cw] : w.terms()) {
      BasisTerm t = es_compose_basis(space, tv, tw, j);
      if (t.coeff != 0) out.add_term(t.tuple, t.coeff * cv * cw);
    }
  return out;
}

SuperTensor es_permute(const SuperSpace& space, const Permutation& pi, const SuperTensor& v) {
  SuperTensor out(v.arity());
  for (const auto& [t, c] : v.terms()) {
    BasisTerm p = es_permute_basis(space, pi, t);
    out.add_term(p.tuple, p.coeff * c);
  }
  return out;
}

Scalar pair_basis(const SuperSpace& space, const BasisTuple& v, const BasisTuple& alpha) {
  if (v.size() != alpha.size()) throw DomainError("pair: arity mismatch");
  Scalar product = 1;
  for (std::size_t i = 0; i < v.size(); ++i) {
    product *= space.b(v[i], alpha[i]);
    if (product == 0) return product;
  }
  // S = sum_{i>j} |v_i||alpha_j|
  int s = 0;
  int alpha_prefix = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    s ^= space.parity(v[i]) & alpha_prefix;
    alpha_prefix ^= space.parity(alpha[i]);
  }
  return s ? Scalar(-product) : product;
}

Scalar pair(const SuperSpace& space, const SuperTensor& v, const SuperTensor& alpha) {
  if (v.arity() != alpha.arity()) throw DomainError("pair: arity mismatch");
  Scalar out = 0;
  for (const auto& [tv, cv] : v.terms())
    for (const auto& [ta, ca] : alpha.terms()) out += cv * ca * pair_basis(space, tv, ta);
  return out;
}

// ---------------------------------------------------------------------------
// Dual bases and the pairing lemma

DualBasisPair DualBasisPair::standard(const SuperSpace& space) {
  const std::size_t d = space.dimension();
  DualBasisPair out;
  for (std::size_t nu = 0; nu < d; ++nu) {
    std::vector<Scalar> unit_col(d, 0);
    unit_col[nu] = 1;
    // b(e_i, sum_k X_k e_k) = delta_{i nu}  <=>  B X = e_nu
    const auto x = solve(space.pairing(), unit_col);
    if (!x) throw DomainError("dual basis: the pairing is degenerate");
    std::vector<Scalar> primal(d, 0);
    primal[nu] = 1;
    for (std::size_t k = 0; k < d; ++k)
      if ((*x)[k] != 0 && space.parity(k) != space.parity(nu))
        throw InternalError("dual basis: dual vector is not homogeneous");
    out.primal.push_back(std::move(primal));
    out.dual.push_back(*x);
    out.parity.push_back(space.parity(nu));
  }
  return out;
}

namespace {

/// <t with slot `slot` replaced by the vector `vec`> as a linear function.
Scalar pair_with_vector(const SuperSpace& space, const BasisTuple& v, BasisTuple alpha, std::size_t slot,
                        const std::vector<Scalar>& vec) {
  Scalar out = 0;
  for (std::size_t k = 0; k < vec.size(); ++k) {
    if (vec[k] == 0) continue;
    alpha[slot] = static_cast<std::uint8_t>(k);
    out += vec[k] * pair_basis(space, v, alpha);
  }
  return out;
}

}  // namespace

VowaOutcome vowa_check(const SuperSpace& space, const DualBasisPair& duals, const BasisTuple& v,
                       const BasisTuple& w, std::size_t j, const BasisTuple& alpha) {
  if (tuple_parity(space, v) != 0 || tuple_parity(space, w) != 0)
    throw DomainError("vowa_check: v and w must be even");
  const std::size_t m = v.size() - 1;
  const std::size_t n = w.size() - 1;
  if (j < 1 || j > m) throw DomainError("vowa_check: slot out of range");
  if (alpha.size() != m + n) throw DomainError("vowa_check: alpha has the wrong arity");

  VowaOutcome out;
  const BasisTerm composite = es_compose_basis(space, v, w, j);
  out.lhs = composite.coeff == 0 ? Scalar(0) : composite.coeff * pair_basis(space, composite.tuple, alpha);

  // alpha_0..alpha_{j-1}, slot, alpha_{j+n}..alpha_{m+n-1}
  BasisTuple alpha_v;
  alpha_v.insert(alpha_v.end(), alpha.begin(), alpha.begin() + static_cast<long>(j));
  alpha_v.push_back(0);
  alpha_v.insert(alpha_v.end(), alpha.begin() + static_cast<long>(j + n), alpha.end());
  // slot, alpha_j..alpha_{j+n-1}
  BasisTuple alpha_w{0};
  alpha_w.insert(alpha_w.end(), alpha.begin() + static_cast<long>(j), alpha.begin() + static_cast<long>(j + n));

  int head = 0;  // sum_{q<j} |alpha_q|
  int mid = 0;   // sum_{p=j}^{j+n-1} |alpha_p|
  for (std::size_t q = 0; q < j; ++q) head ^= space.parity(alpha[q]);
  for (std::size_t p = j; p < j + n; ++p) mid ^= space.parity(alpha[p]);

  for (std::size_t nu = 0; nu < duals.primal.size(); ++nu) {
    const Scalar left = pair_with_vector(space, v, alpha_v, j, duals.primal[nu]);
    if (left == 0) continue;
    const Scalar right = pair_with_vector(space, w, alpha_w, 0, duals.dual[nu]);
    if (right == 0) continue;
    const int p = duals.parity[nu];  // |Delta_nu| = |Delta^nu|
    const int n_full = (head & p) ^ (mid & p) ^ (mid & head);
    const Scalar term = left * right;
    out.rhs_full += n_full ? Scalar(-term) : term;
    out.rhs_simplified += p ? Scalar(-term) : term;
    if (n_full != p) out.sign_agrees = false;
  }
  out.holds = out.lhs == out.rhs_full && out.lhs == out.rhs_simplified && out.sign_agrees;
  return out;
}

bool vowa_check(const SuperSpace& space, const DualBasisPair& duals, const SuperTensor& v, const SuperTensor& w,
                std::size_t j, const BasisTuple& alpha) {
  if (v.parity(space) != 0 || w.parity(space) != 0) throw DomainError("vowa_check: v and w must be even");
  Scalar lhs = 0;
  Scalar rhs = 0;
  for (const auto& [tv, cv] : v.terms())
    for (const auto& [tw, cw] : w.terms()) {
      const VowaOutcome o = vowa_check(space, duals, tv, tw, j, alpha);
      if (!o.sign_agrees) return false;
      lhs += cv * cw * o.lhs;
      rhs += cv * cw * o.rhs_full;
    }
  return lhs == rhs;
}

}  // namespace zoll
