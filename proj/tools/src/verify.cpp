#include "zoll_cli/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>

#include "zoll/axioms.hpp"
#include "zoll/base_algebra.hpp"
#include "zoll/errors.hpp"
#include "zoll/expression.hpp"
#include "zoll/increasing_map.hpp"
#include "zoll/mtilde.hpp"
#include "zoll/odot_basis.hpp"
#include "zoll/ring_r.hpp"
#include "zoll/rt0.hpp"
#include "zoll/super_operad.hpp"

namespace zoll::cli {

namespace {

using Rng = std::mt19937_64;

struct Context {
  VerifyOptions opt;
  VerdictReport report;

  unsigned bound(const char* name, const std::optional<unsigned>& value, unsigned fallback, unsigned lo,
                 unsigned hi) {
    const unsigned v = value.value_or(fallback);
    if (v < lo || v > hi)
      throw UsageError(std::string("--") + name + " must be in [" + std::to_string(lo) + ", " +
                       std::to_string(hi) + "] for suite " + report.suite);
    report.bounds.emplace_back(name, std::to_string(v));
    return v;
  }
  void add(CheckRecord r) { report.checks.push_back(std::move(r)); }
  void add(std::vector<CheckRecord> rs) {
    for (auto& r : rs) add(std::move(r));
  }
};

std::string text(const Polynomial& p) { return to_string(p); }
std::string text(const RElement& r) { return to_string(r.polynomial()); }
std::string text(const RT0Element& r) { return to_string(r.polynomial()); }
std::string text(const Monomial& m) { return to_string(m); }

RT0Element rt0(const Monomial& m) { return RT0Element::from_polynomial(Polynomial(m)); }
RT0Element rt0(std::string_view s) { return RT0Element::from_polynomial(parse_polynomial(s)); }

std::vector<Monomial> rt0_monomials_up_to(unsigned degree) {
  std::vector<Monomial> out;
  for (unsigned d = 0; d <= degree; ++d)
    for (auto& m : enumerate_rt0_monomials(d)) out.push_back(std::move(m));
  return out;
}

std::vector<Monomial> r_monomials_up_to(unsigned degree) {
  std::vector<Monomial> out;
  for (const auto& m : rt0_monomials_up_to(degree))
    if (m.exponent(0) == 0) out.push_back(m);
  return out;
}

Scalar random_scalar(Rng& rng) {
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
  int n = 0;
  while (n == 0) n = num(rng);
  Scalar s(n, den(rng));
  s.canonicalize();
  return s;
}

/// A few terms drawn from the given monomials.
Polynomial random_combination(Rng& rng, const std::vector<Monomial>& pool, std::size_t max_terms = 3) {
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1), count(1, max_terms);
  Polynomial p;
  for (std::size_t k = count(rng); k > 0; --k) p.add_term(pool[pick(rng)], random_scalar(rng));
  return p;
}

Polynomial random_polynomial(Rng& rng, std::size_t last_var, unsigned max_degree) {
  std::vector<Monomial> pool;
  for (unsigned d = 0; d <= max_degree; ++d)
    for (auto& m : monomials_of_degree(d, 0, last_var)) pool.push_back(std::move(m));
  return random_combination(rng, pool, 4);
}

// ---------------------------------------------------------------------------
// ring: polynomials, increasing maps, R and the dot product

void suite_ring(Context& cx) {
  const unsigned deg = cx.bound("max-degree", cx.opt.max_degree, 6, 1, 9);
  const unsigned level = cx.bound("max-n", cx.opt.max_n, 5, 1, 7);
  Rng rng(cx.opt.seed);
  const std::string seeded = "seed=" + std::to_string(cx.opt.seed);

  {
    CheckAccumulator acc("poly.parse-print", "200 random polynomials in t0..t3, degree <= 4, " + seeded);
    for (int i = 0; i < 200; ++i) {
      const Polynomial p = random_polynomial(rng, 3, 4);
      const std::string s = text(p);
      acc.expect(parse_polynomial(s) == p, [&] { return "p=" + s; });
    }
    cx.add(acc.finish());
  }
  {
    CheckAccumulator count("increasing-maps.count", "0 <= n <= d <= 8");
    CheckAccumulator hom("poly.pushforward-pullback", "all maps [1,n] -> [1,d], n <= d <= 4, random p, q, " + seeded);
    for (std::size_t d = 0; d <= 8; ++d)
      for (std::size_t n = 0; n <= d; ++n) {
        const auto maps = enumerate_increasing_maps(n, d);
        count.expect(maps.size() == binomial(d, n), [&] {
          return "n=" + std::to_string(n) + ", d=" + std::to_string(d) + ": " + std::to_string(maps.size());
        });
        if (d > 4) continue;
        for (const auto& alpha : maps) {
          const Polynomial p = random_polynomial(rng, n, 3), q = random_polynomial(rng, n, 3);
          const Polynomial P = random_polynomial(rng, d, 3), Q = random_polynomial(rng, d, 3);
          const bool ok = pushforward(alpha, p * q) == pushforward(alpha, p) * pushforward(alpha, q) &&
                          pullback(alpha, P * Q) == pullback(alpha, P) * pullback(alpha, Q) &&
                          pullback(alpha, pushforward(alpha, p)) == p;
          hom.expect(ok, [&] { return "n=" + std::to_string(n) + ", d=" + std::to_string(d) + ", p=" + text(p); });
        }
      }
    cx.add(count.finish());
    cx.add(hom.finish());
  }

  const auto pool = r_monomials_up_to(deg);
  auto random_r = [&](unsigned max_degree) {
    std::vector<Monomial> sub;
    for (const auto& m : pool)
      if (m.degree() <= max_degree) sub.push_back(m);
    return RElement::from_polynomial(random_combination(rng, sub));
  };
  {
    CheckAccumulator comm("r.mul.commutative", "100 random pairs, total degree <= " + std::to_string(deg) + ", " + seeded);
    CheckAccumulator assoc("r.mul.associative", "100 random triples, total degree <= " + std::to_string(deg) + ", " + seeded);
    CheckAccumulator grading("r.mul.grading", "homogeneous random pairs, total degree <= " + std::to_string(deg) + ", " + seeded);
    std::uniform_int_distribution<unsigned> split(0, deg);
    for (int i = 0; i < 100; ++i) {
      const unsigned a = split(rng) / 2, b = split(rng) / 2;
      const unsigned c = deg > a + b ? std::min(split(rng), deg - a - b) : 0;
      const RElement f = random_r(a), g = random_r(b), h = random_r(c);
      comm.expect(r_mul(f, g) == r_mul(g, f), [&] { return "f=" + text(f) + ", g=" + text(g); });
      const RElement lhs = r_mul(r_mul(f, g), h), rhs = r_mul(f, r_mul(g, h));
      assoc.expect(lhs == rhs, [&] {
        return "f=" + text(f) + ", g=" + text(g) + ", h=" + text(h) + ": " + text(lhs) + " vs " + text(rhs);
      });
      const auto homogeneous_part = [&](const RElement& x) {
        if (x.is_zero()) return x;
        const unsigned top = x.polynomial().terms().begin()->first.degree();
        return RElement::from_polynomial(x.polynomial().filter([&](const Monomial& m) { return m.degree() == top; }));
      };
      const RElement fh = homogeneous_part(f), gh = homogeneous_part(g);
      const Polynomial prod = r_mul(fh, gh).polynomial();
      grading.expect(prod.is_zero() || (prod.is_homogeneous() && prod.degree() == fh.polynomial().degree() +
                                                                                   gh.polynomial().degree()),
                     [&] { return "f=" + text(fh) + ", g=" + text(gh); });
    }
    cx.add(comm.finish());
    cx.add(assoc.finish());
    cx.add(grading.finish());
  }
  {
    const std::string where = "d <= " + std::to_string(level) + ", 40 random pairs per level, " + seeded;
    CheckAccumulator hom("r.project.homomorphism", where);
    CheckAccumulator tower("r.project.tower", where);
    CheckAccumulator decode("r.decode.round-trip", where + ", top component <= d");
    for (std::size_t d = 0; d <= level; ++d) {
      for (int i = 0; i < 40; ++i) {
        const RElement f = random_r(3), g = random_r(3);
        const RdElement pf = project_to_level(f, d), pg = project_to_level(g, d);
        const RdElement pfg = project_to_level(r_mul(f, g), d);
        hom.expect(pfg.value == pf.value * pg.value, [&] {
          return "f=" + text(f) + ", g=" + text(g) + ", d=" + std::to_string(d);
        });
        if (d >= 1)
          tower.expect(restrict_level(pf) == project_to_level(f, d - 1),
                       [&] { return "f=" + text(f) + ", d=" + std::to_string(d); });
        if (f.top_component() <= d)
          decode.expect(decode_rd(pf.value, d) == f, [&] { return "f=" + text(f) + ", d=" + std::to_string(d); });
      }
    }
    cx.add(hom.finish());
    cx.add(tower.finish());
    cx.add(decode.finish());
  }
  {
    const unsigned dot_deg = std::min(deg, 4u);
    const auto monos = rt0_monomials_up_to(dot_deg);
    const std::string where = "R[t0] monomials, total degree <= " + std::to_string(dot_deg);
    CheckAccumulator comm("rt0.dot.commutative", where);
    CheckAccumulator assoc("rt0.dot.associative", where);
    CheckAccumulator unit("rt0.dot.unit", where);
    CheckAccumulator grading("rt0.dot.grading", where);
    for (const auto& x : monos) {
      unit.expect(dot_mul(RT0Element::one(), rt0(x)) == rt0(x), [&] { return "x=" + text(x); });
      for (const auto& y : monos) {
        if (x.degree() + y.degree() > dot_deg) continue;
        const RT0Element xy = dot_mul(rt0(x), rt0(y));
        comm.expect(xy == dot_mul(rt0(y), rt0(x)), [&] { return "x=" + text(x) + ", y=" + text(y); });
        const Polynomial& p = xy.polynomial();
        grading.expect(p.is_homogeneous() && p.degree() == static_cast<int>(x.degree() + y.degree()),
                       [&] { return "x=" + text(x) + ", y=" + text(y) + ": " + text(p); });
        for (const auto& z : monos) {
          if (x.degree() + y.degree() + z.degree() > dot_deg) continue;
          const RT0Element lhs = dot_mul(xy, rt0(z)), rhs = dot_mul(rt0(x), dot_mul(rt0(y), rt0(z)));
          assoc.expect(lhs == rhs, [&] { return "x=" + text(x) + ", y=" + text(y) + ", z=" + text(z); });
        }
      }
    }
    cx.add(comm.finish());
    cx.add(assoc.finish());
    cx.add(unit.finish());
    cx.add(grading.finish());
  }
  {
    CheckAccumulator worked("rt0.dot.worked-values", "t1.t1, t1.(t1*t2)");
    const RT0Element a = dot_mul(rt0("t1"), rt0("t1"));
    const RT0Element b = dot_mul(rt0("t1"), rt0("t1*t2"));
    worked.expect(a == rt0("t1^2 + 2*t1*t2"), [&] { return "t1.t1 = " + text(a); });
    worked.expect(b == rt0("t1^2*t2 + t1*t2^2 + 3*t1*t2*t3"), [&] { return "t1.(t1*t2) = " + text(b); });
    cx.add(worked.finish());
  }
}

// ---------------------------------------------------------------------------
// iota

void suite_iota(Context& cx) {
  const unsigned deg = cx.bound("max-degree", cx.opt.max_degree, 5, 1, 7);
  const auto monos = rt0_monomials_up_to(deg);
  const std::string where = "R[t0] monomials, degree <= " + std::to_string(deg);
  CheckAccumulator inv("iota.involution", where);
  CheckAccumulator hom("iota.dot-homomorphism", "monomial pairs, total degree <= " + std::to_string(deg));
  CheckAccumulator anti("iota.odot-antihomomorphism", "monomial pairs, total degree <= " + std::to_string(deg - 1));
  std::map<Monomial, RT0Element> images;
  for (const auto& x : monos) {
    const RT0Element ix = iota(rt0(x));
    images.emplace(x, ix);
    inv.expect(iota(ix) == rt0(x), [&] { return "x=" + text(x) + ": iota(iota(x)) = " + text(iota(ix)); });
  }
  for (const auto& x : monos)
    for (const auto& y : monos) {
      if (x.degree() + y.degree() > deg) continue;
      const RT0Element lhs = iota(dot_mul(rt0(x), rt0(y)));
      const RT0Element rhs = dot_mul(images.at(x), images.at(y));
      hom.expect(lhs == rhs, [&] { return "x=" + text(x) + ", y=" + text(y) + ": " + text(lhs) + " vs " + text(rhs); });
      if (x.degree() + y.degree() + 1 > deg) continue;
      const RT0Element l2 = iota(odot(rt0(x), rt0(y)));
      const RT0Element r2 = odot(images.at(y), images.at(x));
      anti.expect(l2 == r2, [&] { return "x=" + text(x) + ", y=" + text(y) + ": " + text(l2) + " vs " + text(r2); });
    }
  cx.add(inv.finish());
  cx.add(hom.finish());
  cx.add(anti.finish());

  CheckAccumulator worked("iota.worked-values", "iota(t0), iota(t0^2*t1)");
  worked.note("the 3*t1^2*t2 + 3*t1*t2^2 coefficients of iota(t0^2*t1) follow from t1.t1.t1");
  const RT0Element a = iota(rt0("t0"));
  const RT0Element b = iota(rt0("t0^2*t1"));
  worked.expect(a == rt0("-t0 - t1"), [&] { return "iota(t0) = " + text(a); });
  worked.expect(b == rt0("t0^2*t1 + 2*t0*t1^2 + 4*t0*t1*t2 + t1^3 + 3*t1^2*t2 + 3*t1*t2^2 + 6*t1*t2*t3"),
                [&] { return "iota(t0^2*t1) = " + text(b); });
  cx.add(worked.finish());
}

// ---------------------------------------------------------------------------
// odot

void suite_odot(Context& cx) {
  const unsigned deg = cx.bound("max-degree", cx.opt.max_degree, 4, 1, 6);
  const unsigned tower_k = cx.bound("max-n", cx.opt.max_n, 6, 1, 9);
  Rng rng(cx.opt.seed);
  const auto monos = rt0_monomials_up_to(deg);
  {
    CheckAccumulator assoc("odot.associative", "monomial triples, total degree <= " + std::to_string(deg));
    CheckAccumulator grading("odot.grading", "monomial pairs, total degree <= " + std::to_string(deg));
    CheckAccumulator concat("odot.concatenation", "monomial pairs with t0-free right factor, total degree <= " +
                                                      std::to_string(deg));
    for (const auto& x : monos)
      for (const auto& y : monos) {
        if (x.degree() + y.degree() > deg) continue;
        const RT0Element xy = odot(rt0(x), rt0(y));
        const Polynomial& p = xy.polynomial();
        grading.expect(p.is_homogeneous() && p.degree() == static_cast<int>(x.degree() + y.degree() + 1),
                       [&] { return "x=" + text(x) + ", y=" + text(y) + ": " + text(p); });
        if (y.exponent(0) == 0) {
          const RT0Element c = odot_concatenation(rt0(x), rt0(y));
          concat.expect(c == xy, [&] { return "x=" + text(x) + ", y=" + text(y) + ": " + text(xy) + " vs " + text(c); });
        }
        for (const auto& z : monos) {
          if (x.degree() + y.degree() + z.degree() > deg) continue;
          const RT0Element lhs = odot(xy, rt0(z)), rhs = odot(rt0(x), odot(rt0(y), rt0(z)));
          assoc.expect(lhs == rhs, [&] {
            return "x=" + text(x) + ", y=" + text(y) + ", z=" + text(z) + ": " + text(lhs) + " vs " + text(rhs);
          });
        }
      }
    cx.add(assoc.finish());
    cx.add(grading.finish());
    cx.add(concat.finish());
  }
  {
    const unsigned lin = deg > 1 ? deg - 1 : 1;
    CheckAccumulator acc("odot.t0-linearity", "a <= 3, monomials x, y of degree <= " + std::to_string(lin));
    const auto small = rt0_monomials_up_to(lin);
    for (unsigned a = 0; a <= 3; ++a)
      for (const auto& x : small)
        for (const auto& y : small) {
          const RT0Element lhs = odot(rt0(x).times_t0_power(a), rt0(y));
          const RT0Element rhs = odot(rt0(x), rt0(y)).times_t0_power(a);
          acc.expect(lhs == rhs, [&] { return "a=" + std::to_string(a) + ", x=" + text(x) + ", y=" + text(y); });
        }
    cx.add(acc.finish());
  }
  {
    CheckAccumulator acc("odot.q-tower", "Q_{k+1} with t_{k+1}=0 equals Q_k, 1 <= k <= " + std::to_string(tower_k) +
                                             ", 40 random monomial pairs of degree <= 3, seed=" +
                                             std::to_string(cx.opt.seed));
    const auto pool = rt0_monomials_up_to(3);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (int i = 0; i < 40; ++i) {
      const Monomial& f = pool[pick(rng)];
      const Monomial& g = pool[pick(rng)];
      for (std::size_t k = 1; k <= tower_k; ++k) {
        const Polynomial lhs = set_var_zero(q_k(f, g, k + 1), k + 1);
        const Polynomial rhs = q_k(f, g, k);
        acc.expect(lhs == rhs, [&] {
          return "f=" + text(f) + ", g=" + text(g) + ", k=" + std::to_string(k) + ": " + text(lhs) + " vs " + text(rhs);
        });
      }
    }
    cx.add(acc.finish());
  }
  {
    CheckAccumulator acc("odot.power-of-one", "1^(odot n) = t1*...*t_{n-1}, 1 <= n <= " + std::to_string(tower_k));
    for (unsigned n = 1; n <= tower_k; ++n) {
      std::vector<Monomial::Exponent> e(n, 1);
      e[0] = 0;
      const RT0Element expected = rt0(Monomial(e));
      const RT0Element got = odot_pow(RT0Element::one(), n);
      acc.expect(got == expected, [&] { return "n=" + std::to_string(n) + ": " + text(got); });
    }
    cx.add(acc.finish());
  }
  {
    CheckAccumulator acc("odot.worked-values", "1 (*) 1, 1 (*) t0, 1 (*) (t0+t1)");
    const RT0Element one = RT0Element::one();
    const RT0Element a = odot(one, one), b = odot(one, rt0("t0")), c = odot(one, rt0("t0+t1"));
    acc.expect(a == rt0("t1"), [&] { return "1 (*) 1 = " + text(a); });
    acc.expect(b == rt0("t0*t1 + t1^2 + t1*t2"), [&] { return "1 (*) t0 = " + text(b); });
    acc.expect(c == rt0("t0*t1 + t1^2 + 2*t1*t2"), [&] { return "1 (*) (t0+t1) = " + text(c); });
    cx.add(acc.finish());
  }
  {
    const unsigned lead = deg + 1;
    CheckAccumulator acc("odot.one-odot-x", "monomials x of degree <= " + std::to_string(lead) +
                                                ": 1 (*) x has a t0-free term and the expected leading t1 term");
    for (const auto& x : rt0_monomials_up_to(lead))
      acc.expect(leading_term_check(x), [&] { return "x=" + text(x) + ": 1 (*) x = " + text(odot(RT0Element::one(), rt0(x))); });
    cx.add(acc.finish());
  }
}

// ---------------------------------------------------------------------------
// identity, dim, structure

void suite_identity(Context& cx) {
  const unsigned n_max = cx.bound("max-n", cx.opt.max_n, 6, 0, 9);
  CheckAccumulator acc("identity.one-odot-power", "1 (*) (t0+t1)^n = t1 . (t0+t1)^n, dot powers, n <= " +
                                                       std::to_string(n_max));
  const RT0Element s = rt0("t0+t1");
  RT0Element power = RT0Element::one();
  for (unsigned n = 0; n <= n_max; ++n) {
    const RT0Element lhs = odot(RT0Element::one(), power);
    const RT0Element rhs = dot_mul(rt0("t1"), power);
    acc.expect(lhs == rhs, [&] { return "n=" + std::to_string(n) + ": " + text(lhs) + " vs " + text(rhs); });
    power = dot_mul(power, s);
  }
  cx.add(acc.finish());
}

void suite_dim(Context& cx) {
  const unsigned deg = cx.bound("max-degree", cx.opt.max_degree, 10, 0, 20);
  for (unsigned n = 0; n <= deg; ++n) {
    CheckAccumulator acc("dim.monomial-count", "n=" + std::to_string(n));
    const auto monos = enumerate_rt0_monomials(n);
    std::vector<Monomial> sorted = monos;
    std::sort(sorted.begin(), sorted.end());
    const bool distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    const bool valid = std::all_of(monos.begin(), monos.end(),
                                   [&](const Monomial& m) { return m.degree() == n && m.prefix_length(); });
    acc.expect(distinct && valid && monos.size() == (std::size_t{1} << n), [&] {
      return "n=" + std::to_string(n) + ": " + std::to_string(monos.size()) + " monomials";
    });
    acc.note("count=" + std::to_string(monos.size()));
    cx.add(acc.finish());
  }
}

void suite_structure(Context& cx) {
  const unsigned n_max = cx.bound("max-n", cx.opt.max_n, 6, 0, 8);
  const unsigned deg = cx.bound("max-degree", cx.opt.max_degree, 5, 0, 8);
  for (const auto kind : {OdotBasisKind::structure, OdotBasisKind::iota}) {
    const std::string name = kind == OdotBasisKind::structure ? "structure" : "iota-basis";
    CheckAccumulator inv("basis." + name + ".invertible", "2^n x 2^n word matrices, n <= " + std::to_string(n_max));
    for (unsigned n = 0; n <= n_max; ++n) {
      const Matrix b = basis_matrix(n, kind);
      const std::size_t r = rank(b);
      inv.expect(b.rows() == (std::size_t{1} << n) && b.cols() == b.rows() && r == b.rows(), [&] {
        return "n=" + std::to_string(n) + ": rank " + std::to_string(r) + " of " + std::to_string(b.rows());
      });
    }
    cx.add(inv.finish());
    CheckAccumulator rt("basis." + name + ".round-trip", "every monomial of degree <= " + std::to_string(deg));
    for (const auto& x : rt0_monomials_up_to(deg)) {
      const OdotExpansion e = odot_basis_expand(rt0(x), kind);
      const RT0Element back = evaluate(e, kind);
      rt.expect(back == rt0(x), [&] { return "x=" + text(x) + ": " + to_string(e, kind) + " evaluates to " + text(back); });
    }
    cx.add(rt.finish());
  }
  CheckAccumulator conj("basis.iota-conjugation", "direct iota-basis solve equals iota-conjugated structure "
                                                  "expansion, monomials of degree <= " + std::to_string(deg));
  for (const auto& x : rt0_monomials_up_to(deg)) {
    const OdotExpansion a = odot_basis_expand(rt0(x), OdotBasisKind::iota);
    const OdotExpansion b = odot_basis_expand_iota(rt0(x));
    conj.expect(a == b, [&] {
      return "x=" + text(x) + ": " + to_string(a, OdotBasisKind::iota) + " vs " + to_string(b, OdotBasisKind::iota);
    });
  }
  cx.add(conj.finish());
}

// ---------------------------------------------------------------------------
// super, vowa

std::vector<SuperSpace> spaces(Context& cx) {
  if (cx.opt.space) {
    cx.report.bounds.emplace_back("space", *cx.opt.space);
    return {load_super_space(*cx.opt.space)};
  }
  const unsigned dim = cx.bound("dim", cx.opt.dim, 3, 1, 4);
  return {SuperSpace::mixed(dim), SuperSpace::even_identity(dim)};
}

void suite_super(Context& cx) {
  const auto list = spaces(cx);
  const unsigned arity = cx.bound("max-arity", cx.opt.max_arity, 3, 1, 4);
  for (const auto& s : list) cx.add(es_axiom_check(s, arity));
}

void suite_vowa(Context& cx) {
  const auto list = spaces(cx);
  const unsigned arity = cx.bound("max-arity", cx.opt.max_arity, 3, 1, 4);
  for (const auto& s : list) cx.add(vowa_exhaustive(s, arity));
}

// ---------------------------------------------------------------------------
// important, operad-axioms

std::vector<BaseOperadConfig> bases(Context& cx, bool with_rank2) {
  if (!cx.opt.base) {
    cx.report.bounds.emplace_back("base", with_rank2 ? "trivial, rank2" : "trivial");
    if (with_rank2) return {BaseOperadConfig::trivial(), BaseOperadConfig::truncated_rank2(5)};
    return {BaseOperadConfig::trivial()};
  }
  cx.report.bounds.emplace_back("base", *cx.opt.base);
  if (*cx.opt.base == "trivial") return {BaseOperadConfig::trivial()};
  if (*cx.opt.base == "rank2") return {BaseOperadConfig::truncated_rank2(5)};
  return {load_config(*cx.opt.base)};
}

void suite_important(Context& cx) {
  const unsigned deg = cx.bound("max-degree", cx.opt.max_degree, 6, 1, 9);
  const unsigned arity = cx.bound("max-arity", cx.opt.max_arity, 3, 2, 4);
  constexpr unsigned total = 3;
  cx.report.bounds.emplace_back("b-total-degree", std::to_string(total));
  {
    CheckAccumulator acc("important.a", "d0 >= 0, d1 >= 1, d0 + d1 <= " + std::to_string(deg));
    for (unsigned d1 = 1; d1 <= deg; ++d1)
      for (unsigned d0 = 0; d0 + d1 <= deg; ++d0) {
        const IdentityOutcome o = important_a_check(d0, d1);
        acc.expect(o.holds, [&] {
          return "d0=" + std::to_string(d0) + ", d1=" + std::to_string(d1) + ": lhs=" + o.lhs + "; rhs=" + o.rhs;
        });
      }
    cx.add(acc.finish());
  }
  const bool defaults = !cx.opt.base;
  for (const auto& base : bases(cx, defaults)) {
    // The default rank-2 run stays at n = 2.
    const unsigned top = defaults && base.name() == "rank2" ? 2 : arity;
    for (unsigned n = 2; n <= top; ++n) {
      CheckAccumulator acc("important.b", "base=" + base.name() + ", n=" + std::to_string(n) +
                                              ", sum d + sum e <= " + std::to_string(total) + ", d_j >= 1");
      if (!base.has_arity(n)) {
        CheckRecord r = acc.finish();
        r.status = CheckStatus::skip;
        r.note = "base lacks arity " + std::to_string(n);
        cx.add(std::move(r));
        continue;
      }
      std::vector<unsigned> exps(2 * (n + 1), 0);
      const std::function<void(std::size_t, unsigned)> walk = [&](std::size_t pos, unsigned left) {
        if (pos == exps.size()) {
          const std::vector<unsigned> d(exps.begin(), exps.begin() + n + 1), e(exps.begin() + n + 1, exps.end());
          for (std::size_t j = 1; j <= n; ++j) {
            if (d[j] == 0) continue;
            const IdentityOutcome o = important_b_check(n, d, e, j, base);
            acc.expect(o.holds, [&] {
              std::string s = "d=(";
              for (std::size_t i = 0; i <= n; ++i) s += (i ? "," : "") + std::to_string(d[i]);
              s += "), e=(";
              for (std::size_t i = 0; i <= n; ++i) s += (i ? "," : "") + std::to_string(e[i]);
              return s + "), j=" + std::to_string(j) + ": lhs=" + o.lhs + "; rhs=" + o.rhs;
            });
          }
          return;
        }
        for (unsigned v = 0; v <= left; ++v) {
          exps[pos] = v;
          walk(pos + 1, left - v);
        }
        exps[pos] = 0;
      };
      walk(0, total);
      cx.add(acc.finish());
    }
  }
}

void suite_operad(Context& cx) {
  MTildeBounds b;
  b.max_arity = cx.bound("max-arity", cx.opt.max_arity, 3, 1, 3);
  b.max_r_degree = cx.bound("max-degree", cx.opt.max_degree, 2, 0, 2);
  for (const auto& base : bases(cx, false)) {
    cx.add(operad_axiom_check(base, b));
    cx.add(morphism_F_check(base, std::max<std::size_t>(b.max_arity, 2) + 1));

    // Case (ii) twice at slot j against one case (ii) with x (*) y.
    CheckAccumulator acc("mtilde.case-ii-naturality", "base=" + base.name() + ", n=2, R-degree <= " +
                                                          std::to_string(b.max_r_degree));
    if (base.has_arity(2)) {
      const auto monos = rt0_monomials_up_to(b.max_r_degree);
      const auto rs = r_monomials_up_to(b.max_r_degree);
      for (std::size_t bi = 0; bi < base.algebra(2).dimension(); ++bi)
        for (const auto& s0 : rs)
          for (const auto& s1 : rs)
            for (const auto& s2 : rs) {
              if (s0.degree() + s1.degree() + s2.degree() > b.max_r_degree) continue;
              const MTildeElement xi = MTildeElement::basis_term(bi, {s0, s1, s2});
              for (const auto& f : monos)
                for (const auto& g : monos)
                  for (std::size_t j = 1; j <= 2; ++j) {
                    const MTildeElement F = MTildeElement::from_rt0(rt0(f));
                    const MTildeElement G = MTildeElement::from_rt0(rt0(g));
                    const MTildeElement lhs = compose(compose(xi, F, j, base), G, j, base);
                    const MTildeElement rhs = compose(xi, compose(F, G, 1, base), j, base);
                    acc.expect(lhs == rhs, [&] {
                      return "x=" + xi.format(base) + "; f=" + text(f) + "; g=" + text(g) + "; j=" + std::to_string(j) +
                             ": " + lhs.format(base) + " vs " + rhs.format(base);
                    });
                  }
            }
    }
    CheckRecord r = acc.finish();
    if (r.instances == 0) {
      r.status = CheckStatus::skip;
      r.note = "base lacks arity 2";
    }
    cx.add(std::move(r));
  }
}

using SuiteFn = void (*)(Context&);

const std::vector<std::pair<std::string, SuiteFn>>& table() {
  static const std::vector<std::pair<std::string, SuiteFn>> t{
      {"ring", suite_ring},         {"iota", suite_iota},     {"odot", suite_odot},
      {"identity", suite_identity}, {"dim", suite_dim},       {"structure", suite_structure},
      {"super", suite_super},       {"vowa", suite_vowa},     {"important", suite_important},
      {"operad-axioms", suite_operad}};
  return t;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [n, f] : table()) out.push_back(n);
    out.push_back("all");
    return out;
  }();
  return names;
}

VerdictReport run_suite(const std::string& suite, const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  VerdictReport report;
  report.suite = suite;
  report.seed = options.seed;
  if (suite == "all") {
    if (options.max_degree || options.max_n || options.max_arity)
      throw UsageError("verify all runs every suite at its default bounds; --max-degree, --max-n and "
                       "--max-arity apply to single suites");
    for (const auto& [name, fn] : table()) {
      Context cx{options, {}};
      cx.report.suite = name;
      fn(cx);
      for (auto& [k, v] : cx.report.bounds) report.bounds.emplace_back(name + "." + k, v);
      for (auto& r : cx.report.checks) report.checks.push_back(std::move(r));
    }
  } else {
    const auto it = std::find_if(table().begin(), table().end(), [&](const auto& e) { return e.first == suite; });
    if (it == table().end()) {
      std::string known;
      for (const auto& n : suite_names()) known += (known.empty() ? "" : ", ") + n;
      throw UsageError("unknown suite '" + suite + "' (known: " + known + ")");
    }
    Context cx{options, std::move(report)};
    it->second(cx);
    report = std::move(cx.report);
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace zoll::cli
