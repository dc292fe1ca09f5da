// One line per acceptance criterion: PASS/FAIL, wall time, limit, detail.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "zoll/expression.hpp"
#include "zoll/rt0.hpp"
#include "zoll_cli/report_io.hpp"
#include "zoll_cli/verify.hpp"

namespace {

using namespace zoll;
using zoll::cli::VerifyOptions;

struct Verdict {
  bool ok = true;
  std::string detail;
};

RT0Element X(std::string_view s) { return RT0Element::from_polynomial(parse_polynomial(s)); }

// Every record whose id starts with one of the prefixes must pass; at least
// one record per prefix must exist.
Verdict records_pass(const VerdictReport& r, const std::vector<std::string>& prefixes) {
  Verdict v;
  std::uint64_t instances = 0;
  std::size_t records = 0;
  for (const auto& p : prefixes) {
    bool seen = false;
    for (const auto& c : r.checks) {
      if (c.id.rfind(p, 0) != 0) continue;
      seen = true;
      ++records;
      instances += c.instances;
      if (c.status != CheckStatus::pass) {
        v.ok = false;
        v.detail += c.id + " [" + c.parameters + "] " + cli::status_name(c.status) + " " + c.counterexample + "; ";
      }
    }
    if (!seen) {
      v.ok = false;
      v.detail += "no record " + p + "; ";
    }
  }
  if (v.ok) v.detail = std::to_string(records) + " records, " + std::to_string(instances) + " instances";
  return v;
}

Verdict suite(const std::string& name, const VerifyOptions& o, const std::vector<std::string>& prefixes) {
  return records_pass(cli::run_suite(name, o), prefixes);
}

Verdict ac1() {
  Verdict v;
  auto need = [&](bool ok, const char* what) {
    if (!ok) {
      v.ok = false;
      v.detail += std::string(what) + "; ";
    }
  };
  need(dot_mul(X("t1"), X("t1")) == X("t1^2 + 2*t1*t2"), "t1.t1");
  need(dot_mul(X("t1"), X("t1*t2")) == X("t1^2*t2 + t1*t2^2 + 3*t1*t2*t3"), "t1.(t1 t2)");
  const RT0Element computed = iota(X("t0^2*t1"));
  const RT0Element with_twos = X("t0^2*t1 + 2*t0*t1^2 + 4*t0*t1*t2 + t1^3 + 2*t1^2*t2 + 2*t1*t2^2 + 6*t1*t2*t3");
  need(computed == X("t0^2*t1 + 2*t0*t1^2 + 4*t0*t1*t2 + t1^3 + 3*t1^2*t2 + 3*t1*t2^2 + 6*t1*t2*t3"),
       "iota(t0^2 t1)");
  need(computed - with_twos == X("t1^2*t2 + t1*t2^2"), "the 2-coefficient variant differs elsewhere");
  need(computed == dot_mul(dot_pow(X("t0 + t1"), 2), X("t1")), "iota(t0^2 t1) != (t0+t1)^.2 . t1");
  Polynomial expected(1);
  for (unsigned n = 1; n <= 6; ++n) {
    need(odot_pow(RT0Element::one(), n).polynomial() == expected, "1^(*)n");
    expected *= Polynomial::variable(n);
  }
  if (v.ok)
    v.detail = "exact; iota(t0^2*t1) = (t0+t1).(t0+t1).t1 forces 3*t1^2*t2 + 3*t1*t2^2, "
               "not 2, the rest agrees term for term";
  return v;
}

Verdict ac7() {
  Verdict v;
  std::size_t n = 0;
  for (unsigned d = 0; d <= 5; ++d)
    for (const auto& m : enumerate_rt0_monomials(d)) {
      ++n;
      const RT0Element y = odot(RT0Element::one(), RT0Element::from_polynomial(Polynomial(m)));
      bool t0_free_term = false;
      for (const auto& [mono, c] : y.polynomial().terms()) t0_free_term = t0_free_term || mono.exponent(0) == 0;
      if (!t0_free_term || !leading_term_check(m)) {
        v.ok = false;
        v.detail = "fails at " + to_string(m);
        return v;
      }
    }
  v.detail = std::to_string(n) + " monomials";
  return v;
}

Verdict ac12() {
  const VerdictReport r = cli::run_suite("all", {});
  const auto errs = cli::validate_json(cli::to_json(r), cli::report_schema());
  Verdict v;
  v.ok = r.ok() && errs.empty();
  v.detail = std::to_string(r.checks.size()) + " checks, " + std::to_string(r.count(CheckStatus::fail)) +
             " fail, schema errors " + std::to_string(errs.size());
  return v;
}

struct Criterion {
  const char* name;
  double limit_seconds;
  std::function<Verdict()> run;
};

}  // namespace

int main() {
  VerifyOptions dim3;
  dim3.dim = 3;
  dim3.max_arity = 3;
  const std::vector<Criterion> criteria{
      {"AC1 worked values", 1, ac1},
      {"AC2 degree-n monomial count 2^n, n <= 10", 1, [] { return suite("dim", {}, {"dim.monomial-count"}); }},
      {"AC3 1 (*) (t0+t1)^n = t1 . (t0+t1)^n, n <= 6", 5,
       [] { return suite("identity", {}, {"identity.one-odot-power"}); }},
      {"AC4 iota involution and (anti)homomorphism", 30,
       [] { return suite("iota", {}, {"iota.involution", "iota.dot-homomorphism", "iota.odot-antihomomorphism"}); }},
      {"AC5 odot associativity, t0-linearity, Q_k tower", 60,
       [] { return suite("odot", {}, {"odot.associative", "odot.t0-linearity", "odot.q-tower"}); }},
      {"AC6 odot-word bases invertible, round trips", 60,
       [] { return suite("structure", {}, {"basis.structure", "basis.iota-basis"}); }},
      {"AC7 1 (*) x leading term, degree <= 5", 10, ac7},
      {"AC8 psi relation in arity 1, d0 + d1 <= 6", 10, [] { return suite("important", {}, {"important.a"}); }},
      {"AC9 psi/phi recursion over trivial and rank-2 bases", 60,
       [] { return suite("important", {}, {"important.b"}); }},
      {"AC10 E^s cyclic axioms and pairing lemma, dim 3", 120,
       [dim3] {
         Verdict a = suite("super", dim3,
                           {"es.axiom1", "es.axiom2", "es.axiom3", "es.axiom4", "es.permute", "es.pair"});
         Verdict b = suite("vowa", dim3, {"vowa.identity", "vowa.sign-simplification"});
         return Verdict{a.ok && b.ok, a.detail + "; " + b.detail};
       }},
      {"AC11 A M~0 axioms over the trivial base, arity <= 3, degree <= 2", 60,
       [] {
         return suite("operad-axioms", {}, {"mtilde.axiom1", "mtilde.axiom2", "mtilde.axiom3", "mtilde.axiom4"});
       }},
      {"AC12 verify all passes and the report validates", 120, ac12},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs <= c.limit_seconds;
    const bool ok = v.ok && in_time;
    if (!ok) ++failures;
    std::printf("%s  %-62s %7.2fs (limit %gs)  %s%s\n", ok ? "PASS" : "FAIL", c.name, secs, c.limit_seconds,
                v.detail.c_str(), in_time ? "" : "  [over time]");
  }
  std::printf("%d/%zu criteria pass\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
