#include <benchmark/benchmark.h>

#include "zoll/expression.hpp"
#include "zoll/odot_basis.hpp"
#include "zoll/rt0.hpp"
#include "zoll/super_operad.hpp"

namespace {

using namespace zoll;

// Sum of every R[t0] monomial of degree d.
RT0Element all_monomials(unsigned d) {
  Polynomial p;
  for (const auto& m : enumerate_rt0_monomials(d)) p.add_term(m, 1);
  return RT0Element::from_polynomial(p);
}

void BM_DotMul(benchmark::State& state) {
  const RT0Element x = all_monomials(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dot_mul(x, x));
}
BENCHMARK(BM_DotMul)->DenseRange(1, 4);

void BM_Odot(benchmark::State& state) {
  const RT0Element x = all_monomials(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(odot(x, x));
}
BENCHMARK(BM_Odot)->DenseRange(1, 3);

void BM_Iota(benchmark::State& state) {
  const RT0Element x = all_monomials(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(iota(x));
}
BENCHMARK(BM_Iota)->DenseRange(2, 6, 2);

void BM_BasisExpand(benchmark::State& state) {
  const RT0Element x = all_monomials(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(odot_basis_expand(x));
}
BENCHMARK(BM_BasisExpand)->DenseRange(2, 5);

void BM_EsCompose(benchmark::State& state) {
  const SuperSpace space = SuperSpace::mixed(3);
  const auto arity = static_cast<std::size_t>(state.range(0));
  SuperTensor v(arity + 1), w(arity + 1);
  BasisTuple t(arity + 1, 0);
  // Every tuple over {e, o1, o2}.
  for (;;) {
    v.add_term(t, 1);
    w.add_term(t, 2);
    std::size_t i = 0;
    while (i < t.size() && ++t[i] == 3) t[i++] = 0;
    if (i == t.size()) break;
  }
  for (auto _ : state) benchmark::DoNotOptimize(es_compose(space, v, w, 1));
}
BENCHMARK(BM_EsCompose)->DenseRange(1, 3);

}  // namespace

BENCHMARK_MAIN();
