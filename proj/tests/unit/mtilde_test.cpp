#include <gtest/gtest.h>

#include "zoll/errors.hpp"
#include "zoll/expression.hpp"
#include "zoll/mtilde.hpp"

namespace zoll {
namespace {

RT0Element X(std::string_view s) { return RT0Element::from_polynomial(parse_polynomial(s)); }
MTildeElement A1(std::string_view s) { return MTildeElement::from_rt0(X(s)); }

const Monomial k1{}, kT1{0, 1}, kT1T2{0, 1, 1}, kT1Sq{0, 2};
const BaseOperadConfig kTrivial = BaseOperadConfig::trivial(5);
const BaseOperadConfig kRank2 = BaseOperadConfig::truncated_rank2(4);

TEST(MTilde, ArityOneIsRT0) {
  EXPECT_EQ(compose(A1("1"), A1("1"), 1, kTrivial), A1("t1"));
  EXPECT_EQ(compose(A1("t0"), A1("t0"), 1, kTrivial), A1("t0^2*t1 + t0*t1^2 + t0*t1*t2"));
  EXPECT_EQ(mt_mul(A1("t1"), A1("t1"), kTrivial), A1("t1^2 + 2*t1*t2"));
  EXPECT_EQ(act({1, 0}, A1("t0"), kTrivial), A1("-t0 - t1"));
  EXPECT_EQ(act({0, 1}, A1("t0"), kTrivial), A1("t0"));
  EXPECT_THROW(compose(A1("1"), A1("1"), 2, kTrivial), DomainError);
}

TEST(MTilde, HigherAritySlotProducts) {
  const MTildeElement x = MTildeElement::basis_term(0, {kT1, k1, k1});
  MTildeElement expected = MTildeElement::basis_term(0, {kT1Sq, k1, k1});
  expected = expected + MTildeElement::basis_term(0, {kT1T2, k1, k1}, 2);
  EXPECT_EQ(mt_mul(x, x, kTrivial), expected);
  EXPECT_EQ(mt_mul(MTildeElement::unit(2, kTrivial), x, kTrivial), x);
  const MTildeElement h = MTildeElement::from_base(2, {0, 1});
  EXPECT_TRUE(mt_mul(h, h, kRank2).is_zero());
  EXPECT_EQ(mt_pow(x, 0, kTrivial), MTildeElement::unit(2, kTrivial));
}

TEST(MTilde, CompositionExamples) {
  const MTildeElement u2 = MTildeElement::unit(2, kTrivial);
  EXPECT_EQ(compose(u2, A1("1"), 1, kTrivial), MTildeElement::basis_term(0, {k1, kT1, k1}));
  EXPECT_EQ(compose(u2, A1("1"), 2, kTrivial), MTildeElement::basis_term(0, {k1, k1, kT1}));
  EXPECT_EQ(compose(u2, u2, 1, kTrivial), MTildeElement::unit(3, kTrivial));
  EXPECT_THROW(compose(u2, u2, 3, kTrivial), DomainError);
  const BaseOperadConfig small = BaseOperadConfig::trivial(3);
  EXPECT_THROW(compose(MTildeElement::unit(3, small), MTildeElement::unit(3, small), 1, small), ConfigError);
}

TEST(MTilde, ActionMovesSlots) {
  const MTildeElement x = MTildeElement::basis_term(0, {k1, kT1, k1});
  EXPECT_EQ(act({0, 2, 1}, x, kTrivial), MTildeElement::basis_term(0, {k1, k1, kT1}));
  EXPECT_EQ(act({1, 0, 2}, x, kTrivial), MTildeElement::basis_term(0, {kT1, k1, k1}));
  EXPECT_EQ(act({0, 1, 2}, x, kTrivial), x);
}

TEST(MTilde, ClassesAndF) {
  const ClassConstants c = ClassConstants::standard();
  EXPECT_EQ(psi_phi_classes(1, 0, kTrivial).first, MTildeElement::from_rt0(c.psi0));
  EXPECT_EQ(psi_phi_classes(1, 1, kTrivial).first, MTildeElement::from_rt0(c.psi1));
  EXPECT_EQ(psi_phi_classes(1, 0, kTrivial).second, MTildeElement::from_rt0(c.phi0));
  EXPECT_EQ(psi_phi_classes(1, 1, kTrivial).second, MTildeElement::from_rt0(c.phi1));
  EXPECT_TRUE(morphism_F(1, {1}).is_zero());
  EXPECT_EQ(morphism_F(3, {1}), MTildeElement::unit(3, kTrivial));
  EXPECT_EQ(morphism_F(2, {0, 1}), MTildeElement::from_base(2, {0, 1}));
}

TEST(ImportantIdentities, ArityOne) {
  for (unsigned d0 = 0; d0 <= 3; ++d0)
    for (unsigned d1 = 1; d1 <= 3; ++d1) {
      const IdentityOutcome r = important_a_check(d0, d1);
      EXPECT_TRUE(r.holds) << d0 << " " << d1 << ": " << r.lhs << " vs " << r.rhs;
    }
}

TEST(ImportantIdentities, HigherArity) {
  for (const BaseOperadConfig* base : {&kTrivial, &kRank2})
    for (std::size_t j = 1; j <= 2; ++j) {
      std::vector<unsigned> d{1, 0, 0}, e{0, 0, 1};
      d[j] = 1;
      const IdentityOutcome r = important_b_check(2, d, e, j, *base);
      EXPECT_TRUE(r.holds) << base->name() << " j=" << j << ": " << r.lhs << " vs " << r.rhs;
    }
}

}  // namespace
}  // namespace zoll
