#include "zoll/mtilde.hpp"

#include <mutex>

#include "zoll/errors.hpp"
#include "zoll/expression.hpp"
#include "zoll/ring_r.hpp"

namespace zoll {

MTildeElement MTildeElement::zero(std::size_t arity) {
  if (arity == 0) throw DomainError("MTildeElement: arity must be positive");
  MTildeElement x;
  x.arity_ = arity;
  return x;
}

MTildeElement MTildeElement::from_rt0(RT0Element x) {
  MTildeElement out;
  out.rt0_ = std::move(x);
  return out;
}

MTildeElement MTildeElement::from_base(std::size_t arity, const AlgElement& xi) {
  if (arity < 2) throw DomainError("from_base: arity must be at least 2");
  MTildeElement out = zero(arity);
  for (std::size_t b = 0; b < xi.size(); ++b)
    if (xi[b] != 0) out.add_term(Key{b, std::vector<Monomial>(arity + 1)}, xi[b]);
  return out;
}

MTildeElement MTildeElement::unit(std::size_t arity, const BaseOperadConfig& base) {
  if (arity == 1) return from_rt0(RT0Element::one());
  return from_base(arity, base.algebra(arity).unit());
}

MTildeElement MTildeElement::basis_term(std::size_t base_index, std::vector<Monomial> slots, const Scalar& coeff) {
  if (slots.size() < 3) throw DomainError("basis_term: arity n >= 2 needs n+1 slots");
  for (const auto& m : slots)
    if (m.exponent(0) != 0 || !m.prefix_length())
      throw MembershipError("basis_term: slot " + to_string(m) + " is not an R monomial");
  MTildeElement out = zero(slots.size() - 1);
  out.add_term(Key{base_index, std::move(slots)}, coeff);
  return out;
}

bool MTildeElement::is_zero() const { return arity_ == 1 ? rt0_.is_zero() : terms_.empty(); }

const RT0Element& MTildeElement::rt0() const {
  if (arity_ != 1) throw DomainError("rt0(): element has arity " + std::to_string(arity_));
  return rt0_;
}

void MTildeElement::add_term(const Key& key, const Scalar& coeff) {
  if (arity_ < 2 || key.slots.size() != arity_ + 1) throw DomainError("add_term: key does not match arity");
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

MTildeElement operator+(MTildeElement a, const MTildeElement& b) {
  if (a.arity_ != b.arity_) throw DomainError("MTildeElement: arity mismatch in sum");
  if (a.arity_ == 1) return MTildeElement::from_rt0(a.rt0_ + b.rt0_);
  for (const auto& [k, c] : b.terms_) a.add_term(k, c);
  return a;
}

MTildeElement operator-(MTildeElement a, const MTildeElement& b) { return std::move(a) + Scalar(-1) * b; }

MTildeElement operator*(const Scalar& c, MTildeElement a) {
  if (a.arity_ == 1) return MTildeElement::from_rt0(c * a.rt0_);
  if (c == 0) return MTildeElement::zero(a.arity_);
  for (auto& [k, x] : a.terms_) x *= c;
  return a;
}

std::string MTildeElement::format(const BaseOperadConfig& base) const {
  if (arity_ == 1) return to_string(rt0_.polynomial());
  if (terms_.empty()) return "0";
  const auto& names = base.algebra(arity_).basis();
  std::string out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    first = false;
    const Scalar a = abs(c);
    if (a != 1) out += to_string(a) + "*";
    out += names.at(k.base).name;
    for (const auto& m : k.slots) out += " (x) " + to_string(m);
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

Polynomial r_mul_monomials(const Monomial& a, const Monomial& b) {
  if (a.is_one()) return Polynomial(b);
  if (b.is_one()) return Polynomial(a);
  static std::mutex mutex;
  static std::map<std::pair<Monomial, Monomial>, Polynomial> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find({a, b});
  if (it == cache.end()) {
    if (cache.size() > 100000) cache.clear();
    Polynomial p = r_mul(RElement::from_polynomial(Polynomial(a)), RElement::from_polynomial(Polynomial(b))).polynomial();
    it = cache.emplace(std::pair{a, b}, std::move(p)).first;
  }
  return it->second;
}

/// Adds coeff * sum_b basis_coeffs[b] (x) (slots expanded from the slot
/// polynomials) to out.
void add_expanded(MTildeElement& out, const AlgElement& base_coeffs, const std::vector<Polynomial>& slot_polys,
                  const Scalar& coeff) {
  std::vector<std::vector<std::pair<Monomial, Scalar>>> choices;
  for (const auto& p : slot_polys) {
    if (p.is_zero()) return;
    choices.emplace_back(p.terms().begin(), p.terms().end());
  }
  std::vector<std::size_t> pick(choices.size(), 0);
  std::vector<Monomial> slots(choices.size());
  while (true) {
    Scalar c = coeff;
    for (std::size_t i = 0; i < choices.size(); ++i) {
      slots[i] = choices[i][pick[i]].first;
      c *= choices[i][pick[i]].second;
    }
    for (std::size_t b = 0; b < base_coeffs.size(); ++b)
      if (base_coeffs[b] != 0) out.add_term(MTildeElement::Key{b, slots}, c * base_coeffs[b]);
    std::size_t i = 0;
    while (i < pick.size() && ++pick[i] == choices[i].size()) pick[i++] = 0;
    if (i == pick.size()) break;
  }
}

/// Inserts (f_slot (.) g)|_{t0 = phi} into the slot, multiplying the base
/// class, for every term of x (arity n >= 2).
MTildeElement insert_at_slot(const MTildeElement& x, std::size_t slot, const RT0Element& g, const AlgElement& phi,
                             const GradedAlgebra& algebra) {
  MTildeElement out = MTildeElement::zero(x.arity());
  for (const auto& [key, c] : x.terms()) {
    const RT0Element product = odot(RT0Element::from_polynomial(Polynomial(key.slots[slot])), g);
    const BaseTensorR substituted = substitute_class(product, algebra, phi);
    for (std::size_t b = 0; b < substituted.parts.size(); ++b) {
      const RElement& h = substituted.parts[b];
      if (h.is_zero()) continue;
      const AlgElement& base_product = algebra.basis_product(key.base, b);
      MTildeElement::Key k = key;
      for (const auto& [mono, coeff] : h.polynomial().terms()) {
        k.slots[slot] = mono;
        for (std::size_t e = 0; e < base_product.size(); ++e)
          if (base_product[e] != 0) out.add_term(MTildeElement::Key{e, k.slots}, c * coeff * base_product[e]);
      }
    }
  }
  return out;
}

}  // namespace

MTildeElement mt_mul(const MTildeElement& x, const MTildeElement& y, const BaseOperadConfig& base) {
  if (x.arity() != y.arity()) throw DomainError("mt_mul: arity mismatch");
  if (x.arity() == 1) return MTildeElement::from_rt0(dot_mul(x.rt0(), y.rt0()));
  const GradedAlgebra& algebra = base.algebra(x.arity());
  MTildeElement out = MTildeElement::zero(x.arity());
  std::vector<Polynomial> slot_polys(x.arity() + 1);
  for (const auto& [kx, cx] : x.terms()) {
    for (const auto& [ky, cy] : y.terms()) {
      const AlgElement& base_product = algebra.basis_product(kx.base, ky.base);
      if (is_zero(base_product)) continue;
      for (std::size_t i = 0; i < slot_polys.size(); ++i) slot_polys[i] = r_mul_monomials(kx.slots[i], ky.slots[i]);
      add_expanded(out, base_product, slot_polys, cx * cy);
    }
  }
  return out;
}

MTildeElement mt_pow(const MTildeElement& x, unsigned k, const BaseOperadConfig& base) {
  MTildeElement result = MTildeElement::unit(x.arity(), base);
  for (unsigned i = 0; i < k; ++i) result = mt_mul(result, x, base);
  return result;
}

MTildeElement compose(const MTildeElement& x, const MTildeElement& y, std::size_t j, const BaseOperadConfig& base) {
  const std::size_t m = x.arity();
  const std::size_t n = y.arity();
  if (j < 1 || j > m) throw DomainError("compose: slot " + std::to_string(j) + " out of range for arity " +
                                        std::to_string(m));
  if (m == 1 && n == 1) return MTildeElement::from_rt0(odot(x.rt0(), y.rt0()));
  if (n == 1) return insert_at_slot(x, j, y.rt0(), base.phi(m, j), base.algebra(m));
  if (m == 1) return insert_at_slot(y, 0, iota(x.rt0()), base.phi(n, 0), base.algebra(n));

  // Both arities at least 2: the product of the base clutching with the
  // contraction against b(x, y) = pr0(x) pr0(y).
  const GradedAlgebra& am = base.algebra(m);
  const GradedAlgebra& an = base.algebra(n);
  MTildeElement out = MTildeElement::zero(m + n - 1);
  for (const auto& [kx, cx] : x.terms()) {
    if (!kx.slots[j].is_one()) continue;
    for (const auto& [ky, cy] : y.terms()) {
      if (!ky.slots[0].is_one()) continue;
      const AlgElement clutched = base.clutch(m, n, j, am.basis_element(kx.base), an.basis_element(ky.base));
      std::vector<Monomial> slots(kx.slots.begin(), kx.slots.begin() + static_cast<long>(j));
      slots.insert(slots.end(), ky.slots.begin() + 1, ky.slots.end());
      slots.insert(slots.end(), kx.slots.begin() + static_cast<long>(j) + 1, kx.slots.end());
      for (std::size_t b = 0; b < clutched.size(); ++b)
        if (clutched[b] != 0) out.add_term(MTildeElement::Key{b, slots}, cx * cy * clutched[b]);
    }
  }
  return out;
}

MTildeElement act(const Permutation& pi, const MTildeElement& x, const BaseOperadConfig& base) {
  if (pi.size() != x.arity() + 1) throw DomainError("act: permutation size does not match arity");
  if (x.arity() == 1) {
    if (pi[0] == 0) return x;
    return MTildeElement::from_rt0(iota(x.rt0()));
  }
  MTildeElement out = MTildeElement::zero(x.arity());
  const GradedAlgebra& algebra = base.algebra(x.arity());
  for (const auto& [key, c] : x.terms()) {
    std::vector<Monomial> slots(key.slots.size());
    for (std::size_t p = 0; p < slots.size(); ++p) slots[pi[p]] = key.slots[p];
    const AlgElement image = base.act(pi, algebra.basis_element(key.base));
    for (std::size_t b = 0; b < image.size(); ++b)
      if (image[b] != 0) out.add_term(MTildeElement::Key{b, slots}, c * image[b]);
  }
  return out;
}

std::pair<MTildeElement, MTildeElement> psi_phi_classes(std::size_t arity, std::size_t i,
                                                        const BaseOperadConfig& base) {
  if (i > arity) throw DomainError("psi_phi_classes: slot out of range");
  if (arity == 1) {
    const ClassConstants k = ClassConstants::standard();
    return i == 0 ? std::pair{MTildeElement::from_rt0(k.psi0), MTildeElement::from_rt0(k.phi0)}
                  : std::pair{MTildeElement::from_rt0(k.psi1), MTildeElement::from_rt0(k.phi1)};
  }
  MTildeElement phi = MTildeElement::from_base(arity, base.phi(arity, i));
  std::vector<Monomial> slots(arity + 1);
  slots[i] = Monomial::variable(1);
  MTildeElement psi = phi + MTildeElement::basis_term(base.algebra(arity).unit_index(), std::move(slots));
  return {std::move(psi), std::move(phi)};
}

MTildeElement morphism_F(std::size_t arity, const AlgElement& xi) {
  if (arity == 1) return MTildeElement::zero(1);
  return MTildeElement::from_base(arity, xi);
}

IdentityOutcome important_a_check(unsigned d0, unsigned d1) {
  if (d1 == 0) throw DomainError("important_a_check: d1 must be positive");
  const ClassConstants k = ClassConstants::standard();
  const RT0Element lhs = dot_mul(dot_pow(k.psi0, d0), dot_pow(k.psi1, d1));
  const RT0Element rhs = -dot_mul(dot_pow(k.psi0, d0 + 1), dot_pow(k.psi1, d1 - 1)) +
                         odot(dot_pow(k.psi0, d0), dot_pow(k.psi1, d1 - 1));
  return {lhs == rhs, to_string(lhs.polynomial()), to_string(rhs.polynomial())};
}

IdentityOutcome important_b_check(std::size_t arity, const std::vector<unsigned>& d, const std::vector<unsigned>& e,
                                  std::size_t j, const BaseOperadConfig& base) {
  if (arity < 2) throw DomainError("important_b_check: arity must be at least 2");
  if (d.size() != arity + 1 || e.size() != arity + 1) throw DomainError("important_b_check: exponent tuples need n+1 entries");
  if (j < 1 || j > arity || d[j] == 0) throw DomainError("important_b_check: need 1 <= j <= n with d_j > 0");
  std::vector<MTildeElement> psi, phi;
  for (std::size_t i = 0; i <= arity; ++i) {
    auto [p, f] = psi_phi_classes(arity, i, base);
    psi.push_back(std::move(p));
    phi.push_back(std::move(f));
  }
  const auto monomial = [&](const std::vector<unsigned>& dd, const std::vector<unsigned>& ee, bool skip_psi_j) {
    MTildeElement out = MTildeElement::unit(arity, base);
    for (std::size_t i = 0; i <= arity; ++i) {
      if (!(skip_psi_j && i == j)) out = mt_mul(out, mt_pow(psi[i], dd[i], base), base);
      out = mt_mul(out, mt_pow(phi[i], ee[i], base), base);
    }
    return out;
  };
  const MTildeElement lhs = monomial(d, e, false);
  std::vector<unsigned> d2 = d, e2 = e;
  --d2[j];
  ++e2[j];
  const RT0Element psi_1 = ClassConstants::standard().psi1;
  const MTildeElement rhs =
      monomial(d2, e2, false) +
      compose(monomial(d, e, true), MTildeElement::from_rt0(dot_pow(psi_1, d[j] - 1)), j, base);
  return {lhs == rhs, lhs.format(base), rhs.format(base)};
}

}  // namespace zoll
