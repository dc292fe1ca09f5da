#include <gtest/gtest.h>

#include <set>

#include "zoll/axioms.hpp"

namespace zoll {
namespace {

std::set<std::string> ids(const std::vector<CheckRecord>& rs) {
  std::set<std::string> out;
  for (const auto& r : rs) out.insert(r.id);
  return out;
}

void expect_no_failures(const std::vector<CheckRecord>& rs) {
  for (const auto& r : rs) {
    EXPECT_NE(r.status, CheckStatus::fail) << r.id << " [" << r.parameters << "]: " << r.counterexample;
    if (r.status == CheckStatus::pass) EXPECT_GT(r.instances, 0u) << r.id;
  }
}

TEST(CheckAccumulator, KeepsFirstFailure) {
  CheckAccumulator acc("x", "p");
  acc.expect(true, [] { return std::string("a"); });
  acc.expect(false, [] { return std::string("b"); });
  acc.expect(false, [] { return std::string("c"); });
  const CheckRecord r = acc.finish();
  EXPECT_EQ(r.status, CheckStatus::fail);
  EXPECT_EQ(r.instances, 3u);
  EXPECT_EQ(r.counterexample, "b");

  CheckAccumulator skipped("y", "");
  skipped.skip(4);
  EXPECT_EQ(skipped.finish().status, CheckStatus::skip);
}

TEST(EsAxioms, MixedSpaces) {
  for (std::size_t dim : {1, 2, 3}) {
    const auto rs = es_axiom_check(SuperSpace::mixed(dim), dim == 3 ? 2 : 3);
    expect_no_failures(rs);
    const auto got = ids(rs);
    for (const char* id : {"es.axiom1", "es.axiom2", "es.axiom2.verbatim", "es.axiom3", "es.axiom3.verbatim",
                           "es.axiom4", "es.permute.reduced-words", "es.permute.group-action",
                           "es.pair.invariance"})
      EXPECT_TRUE(got.count(id)) << id;
  }
  expect_no_failures(es_axiom_check(SuperSpace::even_identity(2), 3));
}

TEST(Vowa, ExhaustiveSmall) {
  const auto mixed = vowa_exhaustive(SuperSpace::mixed(2), 2);
  expect_no_failures(mixed);
  EXPECT_EQ(ids(mixed), (std::set<std::string>{"vowa.identity", "vowa.sign-simplification", "vowa.refuses-odd"}));

  const auto even = vowa_exhaustive(SuperSpace::even_identity(2), 2);
  expect_no_failures(even);
  for (const auto& r : even)
    if (r.id == "vowa.refuses-odd") EXPECT_EQ(r.status, CheckStatus::skip);
}

TEST(MTildeAxioms, TrivialBaseSmallBounds) {
  const auto rs = operad_axiom_check(BaseOperadConfig::trivial(4), MTildeBounds{2, 1});
  expect_no_failures(rs);
  const auto got = ids(rs);
  for (const char* id : {"mtilde.axiom1", "mtilde.axiom2", "mtilde.axiom3", "mtilde.axiom4"})
    EXPECT_TRUE(got.count(id)) << id;
}

TEST(MTildeAxioms, Rank2Base) {
  expect_no_failures(operad_axiom_check(BaseOperadConfig::truncated_rank2(4), MTildeBounds{2, 1}));
}

TEST(MorphismF, Checks) {
  for (const auto& base : {BaseOperadConfig::trivial(4), BaseOperadConfig::truncated_rank2(4)}) {
    const auto rs = morphism_F_check(base, 3);
    expect_no_failures(rs);
    EXPECT_EQ(ids(rs), (std::set<std::string>{"F.composition", "F.equivariance", "F.arity1-zero"}));
  }
}

}  // namespace
}  // namespace zoll
