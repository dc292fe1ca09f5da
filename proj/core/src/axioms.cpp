#include "zoll/axioms.hpp"

#include <functional>
#include <map>
#include <string>

#include "zoll/errors.hpp"
#include "zoll/expression.hpp"
#include "zoll/mtilde.hpp"
#include "zoll/rt0.hpp"

namespace zoll {

namespace {

std::string perm_text(const Permutation& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.size(); ++i) out += (i ? " " : "") + std::to_string(p[i]);
  return out + "]";
}

std::string tuple_text(const SuperSpace& space, const BasisTuple& t) {
  std::string out;
  for (std::size_t i = 0; i < t.size(); ++i) out += (i ? "(x)" : "") + space.basis()[t[i]].name;
  return out;
}

std::string term_text(const SuperSpace& space, const BasisTerm& t) {
  if (t.coeff == 0) return "0";
  return to_string(t.coeff) + "*" + tuple_text(space, t.tuple);
}

std::vector<BasisTuple> all_tuples(std::size_t length, std::size_t dim) {
  std::vector<BasisTuple> out;
  BasisTuple t(length, 0);
  while (true) {
    out.push_back(t);
    std::size_t i = length;
    while (i > 0 && ++t[i - 1] == dim) t[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

bool same(const BasisTerm& a, const BasisTerm& b) {
  if (a.coeff == 0 || b.coeff == 0) return a.coeff == b.coeff;
  return a.coeff == b.coeff && a.tuple == b.tuple;
}

BasisTerm compose_terms(const SuperSpace& s, const BasisTerm& a, const BasisTerm& b, std::size_t j) {
  if (a.coeff == 0 || b.coeff == 0) return {Scalar(0), {}};
  BasisTerm r = es_compose_basis(s, a.tuple, b.tuple, j);
  r.coeff *= a.coeff * b.coeff;
  return r;
}

BasisTerm permute_term(const SuperSpace& s, const Permutation& p, const BasisTerm& a) {
  if (a.coeff == 0) return a;
  BasisTerm r = es_permute_basis(s, p, a.tuple);
  r.coeff *= a.coeff;
  return r;
}

BasisTerm negate_if(BasisTerm t, bool flip) {
  if (flip) t.coeff = -t.coeff;
  return t;
}

std::string arity_params(std::initializer_list<std::pair<const char*, std::size_t>> items) {
  std::string out;
  for (const auto& [k, v] : items) out += (out.empty() ? "" : ", ") + std::string(k) + "=" + std::to_string(v);
  return out;
}

}  // namespace

std::vector<CheckRecord> es_axiom_check(const SuperSpace& space, std::size_t max_arity) {
  const std::size_t d = space.dimension();
  const std::string where = "M = {" + space.describe() + "}, arities <= " + std::to_string(max_arity);
  std::map<std::size_t, std::vector<BasisTuple>> tuples;
  std::map<std::size_t, std::vector<Permutation>> fixing;
  for (std::size_t n = 1; n <= max_arity; ++n) {
    tuples[n] = all_tuples(n + 1, d);
    fixing[n] = permutations_fixing_zero(n);
  }
  const auto parity = [&](const BasisTuple& t) { return tuple_parity(space, t); };

  CheckAccumulator ax1("es.axiom1", where);
  CheckAccumulator ax2("es.axiom2", where);
  CheckAccumulator ax2_literal("es.axiom2.verbatim", where + ", an exchanged operand even");
  CheckAccumulator ax3("es.axiom3", where);
  CheckAccumulator ax3_literal("es.axiom3.verbatim", where + ", an exchanged operand even");
  CheckAccumulator ax4("es.axiom4", where);
  ax2.note("tau(a o_m b) = (-1)^{|a||b|} (tau b) o_1 (tau a)");
  ax3.note("(a o_i b) o_{j+l-1} c = (-1)^{|b||c|} (a o_j c) o_i b");

  for (std::size_t m = 1; m <= max_arity; ++m) {
    for (std::size_t n = 1; n <= max_arity; ++n) {
      std::vector<std::vector<Permutation>> composite(m + 1);
      for (std::size_t j = 1; j <= m; ++j)
        for (const auto& pi : fixing[m])
          for (const auto& rho : fixing[n]) composite[j].push_back(operadic_composite(pi, rho, j));
      const Permutation tau_mn = cyclic_tau(m + n - 1);
      const Permutation tau_m = cyclic_tau(m);
      const Permutation tau_n = cyclic_tau(n);
      for (const auto& a : tuples[m]) {
        const BasisTerm ta{1, a};
        for (const auto& b : tuples[n]) {
          const BasisTerm tb{1, b};
          for (std::size_t j = 1; j <= m; ++j) {
            const BasisTerm ab = compose_terms(space, ta, tb, j);
            std::size_t idx = 0;
            for (const auto& pi : fixing[m]) {
              const BasisTerm pa = permute_term(space, pi, ta);
              for (const auto& rho : fixing[n]) {
                const Permutation& pr = composite[j][idx++];
                const BasisTerm lhs = permute_term(space, pr, ab);
                const BasisTerm rhs = compose_terms(space, pa, permute_term(space, rho, tb), pi[j]);
                ax1.expect(same(lhs, rhs), [&] {
                  return "a=" + tuple_text(space, a) + ", b=" + tuple_text(space, b) + ", j=" + std::to_string(j) +
                         ", pi=" + perm_text(pi) + ", rho=" + perm_text(rho) + ": lhs=" + term_text(space, lhs) +
                         ", rhs=" + term_text(space, rhs);
                });
              }
            }
          }
          const BasisTerm lhs = permute_term(space, tau_mn, compose_terms(space, ta, tb, m));
          const BasisTerm rhs = compose_terms(space, permute_term(space, tau_n, tb), permute_term(space, tau_m, ta), 1);
          const bool both_odd = parity(a) && parity(b);
          const auto describe = [&] {
            return "a=" + tuple_text(space, a) + ", b=" + tuple_text(space, b) + ": lhs=" + term_text(space, lhs) +
                   ", rhs=" + term_text(space, rhs);
          };
          ax2.expect(same(lhs, negate_if(rhs, both_odd)), describe);
          if (!both_odd) ax2_literal.expect(same(lhs, rhs), describe);
        }
      }
    }
  }

  for (std::size_t k = 1; k <= max_arity; ++k) {
    for (std::size_t l = 1; l <= max_arity; ++l) {
      for (std::size_t m = 1; m <= max_arity; ++m) {
        for (const auto& a : tuples[k]) {
          const BasisTerm ta{1, a};
          for (const auto& b : tuples[l]) {
            const BasisTerm tb{1, b};
            for (const auto& c : tuples[m]) {
              const BasisTerm tc{1, c};
              const bool both_odd = parity(b) && parity(c);
              for (std::size_t i = 1; i <= k; ++i) {
                const BasisTerm ab = compose_terms(space, ta, tb, i);
                for (std::size_t j = i + 1; j <= k; ++j) {
                  const BasisTerm lhs = compose_terms(space, ab, tc, j + l - 1);
                  const BasisTerm rhs = compose_terms(space, compose_terms(space, ta, tc, j), tb, i);
                  const auto describe = [&] {
                    return "a=" + tuple_text(space, a) + ", b=" + tuple_text(space, b) + ", c=" +
                           tuple_text(space, c) + ", i=" + std::to_string(i) + ", j=" + std::to_string(j) +
                           ": lhs=" + term_text(space, lhs) + ", rhs=" + term_text(space, rhs);
                  };
                  ax3.expect(same(lhs, negate_if(rhs, both_odd)), describe);
                  if (!both_odd) ax3_literal.expect(same(lhs, rhs), describe);
                }
                for (std::size_t j = 1; j <= l; ++j) {
                  const BasisTerm lhs = compose_terms(space, ab, tc, i + j - 1);
                  const BasisTerm rhs = compose_terms(space, ta, compose_terms(space, tb, tc, j), i);
                  ax4.expect(same(lhs, rhs), [&] {
                    return "a=" + tuple_text(space, a) + ", b=" + tuple_text(space, b) + ", c=" +
                           tuple_text(space, c) + ", i=" + std::to_string(i) + ", j=" + std::to_string(j) +
                           ": lhs=" + term_text(space, lhs) + ", rhs=" + term_text(space, rhs);
                  });
                }
              }
            }
          }
        }
      }
    }
  }

  // Reduced words: every word of adjacent transpositions of minimal length
  // for its permutation must act like es_permute.
  CheckAccumulator words("es.permute.reduced-words", where);
  CheckAccumulator action("es.permute.group-action", where);
  CheckAccumulator invariance("es.pair.invariance", where + ", v and alpha even");
  for (std::size_t n = 1; n <= max_arity; ++n) {
    const auto perms = all_permutations(n);
    std::map<Permutation, std::vector<std::vector<std::size_t>>> reduced;
    std::vector<std::vector<std::size_t>> frontier{{}};
    const std::size_t max_len = n * (n + 1) / 2;
    for (std::size_t len = 0; len <= max_len; ++len) {
      std::vector<std::vector<std::size_t>> next;
      for (const auto& w : frontier) {
        Permutation p = identity_permutation(n);
        for (auto s : w) {
          Permutation t = identity_permutation(n);
          std::swap(t[s], t[s + 1]);
          p = compose(p, t);
        }
        std::size_t inversions = 0;
        for (std::size_t x = 0; x <= n; ++x)
          for (std::size_t y = x + 1; y <= n; ++y) inversions += p[x] > p[y];
        if (inversions != w.size()) continue;
        reduced[p].push_back(w);
        for (std::size_t s = 0; s < n; ++s) {
          auto w2 = w;
          w2.push_back(s);
          next.push_back(std::move(w2));
        }
      }
      frontier = std::move(next);
    }
    const auto& ts = tuples[n];
    for (const auto& v : ts) {
      for (const auto& [p, ws] : reduced) {
        const BasisTerm direct = es_permute_basis(space, p, v);
        for (const auto& w : ws) {
          const BasisTerm via = es_permute_word(space, w, v);
          words.expect(same(direct, via), [&] {
            std::string wt;
            for (auto s : w) wt += "s" + std::to_string(s);
            return "v=" + tuple_text(space, v) + ", pi=" + perm_text(p) + ", word=" + wt + ": direct=" +
                   term_text(space, direct) + ", word=" + term_text(space, via);
          });
        }
      }
      for (const auto& p : perms)
        for (const auto& q : perms) {
          const BasisTerm lhs = es_permute_basis(space, compose(p, q), v);
          const BasisTerm rhs = permute_term(space, p, es_permute_basis(space, q, v));
          action.expect(same(lhs, rhs), [&] {
            return "v=" + tuple_text(space, v) + ", pi=" + perm_text(p) + ", rho=" + perm_text(q);
          });
        }
    }
    for (const auto& v : ts) {
      if (parity(v)) continue;
      for (const auto& alpha : ts) {
        if (parity(alpha)) continue;
        const Scalar base_value = pair_basis(space, v, alpha);
        for (const auto& p : perms) {
          const BasisTerm pv = es_permute_basis(space, p, v);
          const BasisTerm pa = es_permute_basis(space, p, alpha);
          const Scalar moved = pv.coeff * pa.coeff * pair_basis(space, pv.tuple, pa.tuple);
          invariance.expect(moved == base_value, [&] {
            return "v=" + tuple_text(space, v) + ", alpha=" + tuple_text(space, alpha) + ", pi=" + perm_text(p) +
                   ": " + to_string(base_value) + " vs " + to_string(moved);
          });
        }
      }
    }
  }

  return {ax1.finish(),   ax2.finish(),   ax2_literal.finish(), ax3.finish(),       ax3_literal.finish(),
          ax4.finish(),   words.finish(), action.finish(),      invariance.finish()};
}

std::vector<CheckRecord> vowa_exhaustive(const SuperSpace& space, std::size_t max_arity) {
  const std::size_t d = space.dimension();
  const DualBasisPair duals = DualBasisPair::standard(space);
  const std::string where = "M = {" + space.describe() + "}, arities <= " + std::to_string(max_arity);
  CheckAccumulator identity("vowa.identity", where);
  CheckAccumulator sign("vowa.sign-simplification", where);
  CheckAccumulator refuse("vowa.refuses-odd", where);
  sign.note("(-1)^{N_nu} = (-1)^{|Delta_nu|} on every summand with nonzero pairings");
  std::map<std::size_t, std::vector<BasisTuple>> even, odd, all;
  for (std::size_t n = 1; n <= max_arity; ++n)
    for (auto& t : all_tuples(n + 1, d)) (tuple_parity(space, t) ? odd : even)[n].push_back(t);
  // Above dimension 3 alpha_i only ranges over partners with
  // b(u_i, alpha_i) != 0, u = the composed tuple: both sides carry that
  // product as a factor, so the other alphas give 0 = 0.
  const bool prune = d > 3;
  if (prune) identity.note("alpha restricted to positions with nonzero pairing against v o_j w");
  std::vector<std::vector<std::uint8_t>> partners(d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      if (!prune || space.pairing()(a, b) != 0) partners[a].push_back(static_cast<std::uint8_t>(b));
  for (std::size_t m = 1; m <= max_arity; ++m) {
    for (std::size_t n = 1; n <= max_arity; ++n) {
      const auto alphas = all_tuples(m + n, d);
      for (const auto& v : even[m]) {
        for (const auto& w : even[n]) {
          for (std::size_t j = 1; j <= m; ++j) {
            BasisTuple u(v.begin(), v.begin() + j);
            u.insert(u.end(), w.begin() + 1, w.end());
            u.insert(u.end(), v.begin() + j + 1, v.end());
            std::vector<BasisTuple> choices;
            if (!prune) {
              choices = alphas;
            } else {
              BasisTuple alpha(u.size());
              const std::function<void(std::size_t)> grow = [&](std::size_t pos) {
                if (pos == u.size()) return choices.push_back(alpha);
                for (auto b : partners[u[pos]]) {
                  alpha[pos] = b;
                  grow(pos + 1);
                }
              };
              grow(0);
            }
            for (const auto& alpha : choices) {
              const VowaOutcome o = vowa_check(space, duals, v, w, j, alpha);
              const auto describe = [&] {
                return "v=" + tuple_text(space, v) + ", w=" + tuple_text(space, w) + ", j=" + std::to_string(j) +
                       ", alpha=" + tuple_text(space, alpha) + ": lhs=" + to_string(o.lhs) +
                       ", rhs(N_nu)=" + to_string(o.rhs_full) + ", rhs(|Delta_nu|)=" + to_string(o.rhs_simplified);
              };
              identity.expect(o.lhs == o.rhs_full && o.lhs == o.rhs_simplified, describe);
              sign.expect(o.sign_agrees, describe);
            }
          }
        }
      }
      // Precondition: odd v or w is refused.
      if (!odd[m].empty() && !even[n].empty()) {
        bool refused = false;
        try {
          vowa_check(space, duals, odd[m].front(), even[n].front(), 1, alphas.front());
        } catch (const DomainError&) {
          refused = true;
        }
        refuse.expect(refused, [&] { return "odd v=" + tuple_text(space, odd[m].front()) + " was accepted"; });
      }
    }
  }
  std::vector<CheckRecord> out{identity.finish(), sign.finish()};
  CheckRecord r = refuse.finish();
  if (r.instances == 0) {
    r.status = CheckStatus::skip;
    r.note = "space has no odd tensors";
  }
  out.push_back(std::move(r));
  return out;
}

// ---------------------------------------------------------------------------
// A M~0

namespace {

std::vector<Monomial> r_monomials_up_to(unsigned max_degree) {
  std::vector<Monomial> out;
  for (unsigned d = 0; d <= max_degree; ++d)
    for (const auto& m : enumerate_rt0_monomials(d))
      if (m.exponent(0) == 0) out.push_back(m);
  return out;
}

/// Spanning set of A M~0(n) within the degree bound; empty if the base
/// lacks arity n.
std::vector<MTildeElement> spanning(std::size_t arity, const BaseOperadConfig& base, unsigned max_degree) {
  std::vector<MTildeElement> out;
  if (arity == 1) {
    for (unsigned d = 0; d <= max_degree; ++d)
      for (const auto& m : enumerate_rt0_monomials(d))
        out.push_back(MTildeElement::from_rt0(RT0Element::from_polynomial(Polynomial(m))));
    return out;
  }
  if (!base.has_arity(arity)) return out;
  const auto monos = r_monomials_up_to(max_degree);
  std::vector<Monomial> slots(arity + 1);
  const std::function<void(std::size_t, unsigned)> fill = [&](std::size_t pos, unsigned remaining) {
    if (pos == slots.size()) {
      for (std::size_t b = 0; b < base.algebra(arity).dimension(); ++b)
        out.push_back(MTildeElement::basis_term(b, slots));
      return;
    }
    for (const auto& m : monos) {
      if (m.degree() > remaining) continue;
      slots[pos] = m;
      fill(pos + 1, remaining - m.degree());
    }
  };
  fill(0, max_degree);
  return out;
}

/// Runs body; a ConfigError (missing arity or clutching) counts as a skip.
template <class Body>
void guarded(CheckAccumulator& acc, Body&& body) {
  try {
    body();
  } catch (const ConfigError&) {
    acc.skip();
  }
}

}  // namespace

std::vector<CheckRecord> operad_axiom_check(const BaseOperadConfig& base, const MTildeBounds& bounds) {
  const std::size_t A = bounds.max_arity;
  std::map<std::size_t, std::vector<MTildeElement>> span;
  for (std::size_t n = 1; n <= A; ++n) span[n] = spanning(n, base, bounds.max_r_degree);
  const std::string where = "base=" + base.name() + ", R-degree <= " + std::to_string(bounds.max_r_degree);
  std::vector<CheckRecord> out;
  const auto fmt = [&](const MTildeElement& x) { return x.format(base); };
  const auto finish = [&](CheckAccumulator& acc, std::size_t needed_span) {
    CheckRecord r = acc.finish();
    if (needed_span == 0 && r.instances == 0) {
      r.status = CheckStatus::skip;
      r.note = "base lacks a required arity";
    }
    out.push_back(std::move(r));
  };

  for (std::size_t m = 1; m <= A; ++m) {
    for (std::size_t n = 1; n <= A; ++n) {
      CheckAccumulator acc("mtilde.axiom1", where + ", " + arity_params({{"m", m}, {"n", n}}));
      const auto pis = permutations_fixing_zero(m);
      const auto rhos = permutations_fixing_zero(n);
      for (const auto& a : span[m])
        for (const auto& b : span[n])
          for (std::size_t j = 1; j <= m; ++j)
            guarded(acc, [&] {
              const MTildeElement ab = compose(a, b, j, base);
              for (const auto& pi : pis) {
                const MTildeElement pa = act(pi, a, base);
                for (const auto& rho : rhos) {
                  const MTildeElement lhs = act(operadic_composite(pi, rho, j), ab, base);
                  const MTildeElement rhs = compose(pa, act(rho, b, base), pi[j], base);
                  acc.expect(lhs == rhs, [&] {
                    return "a=" + fmt(a) + "; b=" + fmt(b) + "; j=" + std::to_string(j) + "; pi=" + perm_text(pi) +
                           "; rho=" + perm_text(rho) + ": lhs=" + fmt(lhs) + "; rhs=" + fmt(rhs);
                  });
                }
              }
            });
      finish(acc, span[m].size() * span[n].size());
    }
  }

  for (std::size_t m = 1; m <= A; ++m) {
    for (std::size_t n = 1; n <= A; ++n) {
      CheckAccumulator acc("mtilde.axiom2", where + ", " + arity_params({{"m", m}, {"n", n}}));
      if (m == 1 && n == 1) acc.note("equivalent to iota(x (.) y) = iota(y) (.) iota(x)");
      for (const auto& a : span[m])
        for (const auto& b : span[n])
          guarded(acc, [&] {
            const MTildeElement lhs = act(cyclic_tau(m + n - 1), compose(a, b, m, base), base);
            const MTildeElement rhs = compose(act(cyclic_tau(n), b, base), act(cyclic_tau(m), a, base), 1, base);
            acc.expect(lhs == rhs, [&] {
              return "a=" + fmt(a) + "; b=" + fmt(b) + ": lhs=" + fmt(lhs) + "; rhs=" + fmt(rhs);
            });
          });
      finish(acc, span[m].size() * span[n].size());
    }
  }

  for (std::size_t k = 2; k <= A; ++k) {
    for (std::size_t l = 1; l <= A; ++l) {
      for (std::size_t m = 1; m <= A; ++m) {
        CheckAccumulator acc("mtilde.axiom3", where + ", " + arity_params({{"k", k}, {"l", l}, {"m", m}}));
        for (const auto& a : span[k])
          for (const auto& b : span[l])
            for (const auto& c : span[m])
              for (std::size_t i = 1; i <= k; ++i)
                for (std::size_t j = i + 1; j <= k; ++j)
                  guarded(acc, [&] {
                    const MTildeElement lhs = compose(compose(a, b, i, base), c, j + l - 1, base);
                    const MTildeElement rhs = compose(compose(a, c, j, base), b, i, base);
                    acc.expect(lhs == rhs, [&] {
                      return "a=" + fmt(a) + "; b=" + fmt(b) + "; c=" + fmt(c) + "; i=" + std::to_string(i) +
                             "; j=" + std::to_string(j) + ": lhs=" + fmt(lhs) + "; rhs=" + fmt(rhs);
                    });
                  });
        finish(acc, span[k].size() * span[l].size() * span[m].size());
      }
    }
  }

  for (std::size_t k = 1; k <= A; ++k) {
    for (std::size_t l = 1; l <= A; ++l) {
      for (std::size_t m = 1; m <= A; ++m) {
        CheckAccumulator acc("mtilde.axiom4", where + ", " + arity_params({{"k", k}, {"l", l}, {"m", m}}));
        if (k == 1 && l == 1 && m == 1) acc.note("odot associativity");
        for (const auto& a : span[k])
          for (const auto& b : span[l])
            for (const auto& c : span[m])
              for (std::size_t i = 1; i <= k; ++i)
                for (std::size_t j = 1; j <= l; ++j)
                  guarded(acc, [&] {
                    const MTildeElement lhs = compose(compose(a, b, i, base), c, i + j - 1, base);
                    const MTildeElement rhs = compose(a, compose(b, c, j, base), i, base);
                    acc.expect(lhs == rhs, [&] {
                      return "a=" + fmt(a) + "; b=" + fmt(b) + "; c=" + fmt(c) + "; i=" + std::to_string(i) +
                             "; j=" + std::to_string(j) + ": lhs=" + fmt(lhs) + "; rhs=" + fmt(rhs);
                    });
                  });
        finish(acc, span[k].size() * span[l].size() * span[m].size());
      }
    }
  }
  return out;
}

std::vector<CheckRecord> morphism_F_check(const BaseOperadConfig& base, std::size_t max_arity) {
  const std::string where = "base=" + base.name() + ", arities <= " + std::to_string(max_arity);
  CheckAccumulator comp("F.composition", where);
  CheckAccumulator equivariance("F.equivariance", where);
  CheckAccumulator zero("F.arity1-zero", where);
  zero.expect(morphism_F(1, {}).is_zero(), [] { return std::string("F(1) is not zero"); });
  for (std::size_t m = 2; m <= max_arity; ++m) {
    if (!base.has_arity(m)) continue;
    const GradedAlgebra& am = base.algebra(m);
    for (std::size_t x = 0; x < am.dimension(); ++x) {
      const AlgElement ex = am.basis_element(x);
      for (const auto& pi : all_permutations(m)) {
        const MTildeElement lhs = morphism_F(m, base.act(pi, ex));
        const MTildeElement rhs = act(pi, morphism_F(m, ex), base);
        equivariance.expect(lhs == rhs, [&] {
          return "x=" + am.basis()[x].name + ", pi=" + perm_text(pi) + ": " + lhs.format(base) + " vs " +
                 rhs.format(base);
        });
      }
      for (std::size_t n = 2; m + n - 1 <= max_arity; ++n) {
        if (!base.has_arity(n) || !base.has_arity(m + n - 1)) continue;
        const GradedAlgebra& an = base.algebra(n);
        for (std::size_t y = 0; y < an.dimension(); ++y)
          for (std::size_t j = 1; j <= m; ++j)
            guarded(comp, [&] {
              const AlgElement ey = an.basis_element(y);
              const MTildeElement lhs = morphism_F(m + n - 1, base.clutch(m, n, j, ex, ey));
              const MTildeElement rhs = compose(morphism_F(m, ex), morphism_F(n, ey), j, base);
              comp.expect(lhs == rhs, [&] {
                return "x=" + am.basis()[x].name + ", y=" + an.basis()[y].name + ", j=" + std::to_string(j) +
                       ": " + lhs.format(base) + " vs " + rhs.format(base);
              });
            });
      }
    }
  }
  return {comp.finish(), equivariance.finish(), zero.finish()};
}

}  // namespace zoll
