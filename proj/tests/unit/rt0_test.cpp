#include <gtest/gtest.h>

#include "zoll/base_algebra.hpp"
#include "zoll/errors.hpp"
#include "zoll/expression.hpp"
#include "zoll/rt0.hpp"

namespace zoll {
namespace {

// Values below were frozen from tests/oracles/rt0_oracle.py (a separate
// sympy model: level-d projection for ".", the Q_k double sum for (*)).

RT0Element X(std::string_view s) { return RT0Element::from_polynomial(parse_polynomial(s)); }
const RT0Element kOne = RT0Element::one();

TEST(RT0Element, Membership) {
  const RT0Element x = X("t0^2*t1 + t1*t2");
  const auto c = x.components();
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c.at(1), parse_polynomial("t0^2*t1"));
  EXPECT_EQ(c.at(2), parse_polynomial("t1*t2"));
  try {
    X("t1*t3");
    FAIL();
  } catch (const MembershipError& e) {
    EXPECT_NE(std::string(e.what()).find("t1*t3"), std::string::npos);
  }
  EXPECT_EQ(X("1").components().at(0), Polynomial(1));
  EXPECT_TRUE(X("t0^3 + t0*t1").t0_coefficients().count(3));
}

TEST(RT0Element, EnumerationCountsArePowersOfTwo) {
  for (unsigned n = 0; n <= 12; ++n) {
    const auto monos = enumerate_rt0_monomials(n);
    EXPECT_EQ(monos.size(), std::size_t{1} << n);
    for (const auto& m : monos) {
      EXPECT_EQ(m.degree(), n);
      EXPECT_TRUE(m.prefix_length().has_value());
    }
  }
}

TEST(Dot, WorkedValues) {
  EXPECT_EQ(dot_mul(X("t1"), X("t1")), X("t1^2 + 2*t1*t2"));
  EXPECT_EQ(dot_mul(X("t1"), X("t1*t2")), X("t1^2*t2 + t1*t2^2 + 3*t1*t2*t3"));
  EXPECT_EQ(dot_mul(X("t0^3"), X("t1*t2^2 + t1")), X("t0^3*t1*t2^2 + t0^3*t1"));
  EXPECT_EQ(dot_mul(kOne, X("t0*t1*t2")), X("t0*t1*t2"));
}

TEST(Iota, WorkedValues) {
  EXPECT_EQ(iota(X("t0")), X("-t0 - t1"));
  EXPECT_EQ(iota(kOne), kOne);
  EXPECT_EQ(iota(X("t1*t2^2")), X("t1^2*t2"));
  EXPECT_EQ(iota(X("t0*t1*t2")), X("-t0*t1*t2 - t1^2*t2 - t1*t2^2 - 3*t1*t2*t3"));
  EXPECT_EQ(iota(X("t0^2*t1")),
            X("t0^2*t1 + 2*t0*t1^2 + 4*t0*t1*t2 + t1^3 + 3*t1^2*t2 + 3*t1*t2^2 + 6*t1*t2*t3"));
}

TEST(Iota, TwoCoefficientVariantDiffersOnlyThere) {
  const RT0Element with_twos = X("t0^2*t1 + 2*t0*t1^2 + 4*t0*t1*t2 + t1^3 + 2*t1^2*t2 + 2*t1*t2^2 + 6*t1*t2*t3");
  const RT0Element diff = iota(X("t0^2*t1")) - with_twos;
  EXPECT_EQ(diff, X("t1^2*t2 + t1*t2^2"));
  // t1.t1.t1 carries the 3s.
  EXPECT_EQ(dot_pow(X("t1"), 3), X("t1^3 + 3*t1^2*t2 + 3*t1*t2^2 + 6*t1*t2*t3"));
}

TEST(Iota, InvolutionAndDotHomomorphism) {
  for (unsigned d = 0; d <= 4; ++d)
    for (const auto& m : enumerate_rt0_monomials(d)) {
      const RT0Element x = RT0Element::from_polynomial(Polynomial(m));
      EXPECT_EQ(iota(iota(x)), x) << to_string(m);
      EXPECT_EQ(iota(dot_mul(x, X("t0 + t1*t2"))), dot_mul(iota(x), iota(X("t0 + t1*t2"))));
    }
}

TEST(QK, Examples) {
  EXPECT_EQ(q_k(Monomial{}, Monomial{}, 3), parse_polynomial("t1 + t2 + t3"));
  EXPECT_EQ(q_k(Monomial{1}, Monomial{}, 2), parse_polynomial("t0*t1 + t0*t2"));
  EXPECT_THROW(q_k(Monomial{0, 0, 1}, Monomial{}, 2), DomainError);
  for (std::size_t k = 1; k <= 6; ++k)
    EXPECT_EQ(set_var_zero(q_k(Monomial{1, 2}, Monomial{1, 1}, k + 1), k + 1), q_k(Monomial{1, 2}, Monomial{1, 1}, k));
}

TEST(Odot, WorkedValues) {
  EXPECT_EQ(odot(kOne, kOne), X("t1"));
  EXPECT_EQ(odot(X("t0"), kOne), X("t0*t1"));
  EXPECT_EQ(odot(kOne, X("t0")), X("t0*t1 + t1^2 + t1*t2"));
  EXPECT_EQ(odot(kOne, X("t0 + t1")), X("t0*t1 + t1^2 + 2*t1*t2"));
  EXPECT_EQ(odot(X("t0"), X("t0")), X("t0^2*t1 + t0*t1^2 + t0*t1*t2"));
  EXPECT_EQ(odot(X("t1"), X("t0")), X("t0*t1*t2 + t1^2*t2 + t1*t2^2 + 2*t1*t2*t3"));
  EXPECT_EQ(odot(X("t0^2"), X("t0")), X("t0^3*t1 + t0^2*t1^2 + t0^2*t1*t2"));
  EXPECT_EQ(odot(kOne, X("t0^2")),
            X("t0^2*t1 + 2*t0*t1^2 + 2*t0*t1*t2 + t1^3 + t1^2*t2 + 2*t1*t2^2 + 2*t1*t2*t3"));
}

TEST(Odot, PowersOfOne) {
  EXPECT_THROW(odot_pow(kOne, 0), DomainError);
  Polynomial expected(1);
  for (unsigned n = 1; n <= 7; ++n) {
    EXPECT_EQ(odot_pow(kOne, n).polynomial(), expected) << n;
    expected *= Polynomial::variable(n);
  }
}

TEST(Odot, ConcatenationAndNoncommutativity) {
  EXPECT_EQ(odot_concatenation(X("t0*t1^2"), X("t1*t2 + 1")), X("t0*t1^2*t2*t3*t4 + t0*t1^2*t2"));
  EXPECT_THROW(odot_concatenation(kOne, X("t0")), DomainError);
  EXPECT_NE(odot(X("t0"), kOne), odot(kOne, X("t0")));
}

TEST(Odot, IdentityWithDotPowers) {
  RT0Element power = kOne;
  for (unsigned n = 0; n <= 6; ++n) {
    EXPECT_EQ(odot(kOne, power), dot_mul(X("t1"), power)) << n;
    power = dot_mul(power, X("t0 + t1"));
  }
}

TEST(LeadingTerm, Examples) {
  EXPECT_TRUE(leading_term_check(Monomial{1}));
  EXPECT_TRUE(leading_term_check(Monomial{}));
  EXPECT_TRUE(leading_term_check(Monomial{0, 1}));
  EXPECT_THROW(leading_term_check(Monomial{0, 0, 1}), DomainError);
}

TEST(ClassConstants, Standard) {
  const auto c = ClassConstants::standard();
  EXPECT_EQ(c.psi0, X("-t0"));
  EXPECT_EQ(c.psi1, X("t0 + t1"));
  EXPECT_EQ(c.phi0, X("-t0 - t1"));
  EXPECT_EQ(c.phi1, X("t0"));
  EXPECT_EQ(iota(c.psi0), c.psi1);
  EXPECT_EQ(iota(c.phi0), c.phi1);
}

TEST(SubstituteClass, Examples) {
  const BaseOperadConfig rank2 = BaseOperadConfig::truncated_rank2(2);
  const GradedAlgebra& b = rank2.algebra(2);
  const AlgElement zero = b.zero(), h{0, 1};
  const auto one_r = [](std::string_view s) { return RElement::from_polynomial(parse_polynomial(s)); };

  const BaseTensorR a = substitute_class(X("t0 + t1"), b, zero);
  EXPECT_EQ(a.parts[0], one_r("t1"));
  EXPECT_TRUE(a.parts[1].is_zero());

  EXPECT_TRUE(substitute_class(X("t0^2"), b, h).is_zero());

  const BaseTensorR c = substitute_class(X("t1*t2"), b, h);
  EXPECT_EQ(c.parts[0], one_r("t1*t2"));
  EXPECT_TRUE(c.parts[1].is_zero());

  const BaseTensorR d = substitute_class(X("t0*t1 + t1^2"), b, h);
  EXPECT_EQ(d.parts[0], one_r("t1^2"));
  EXPECT_EQ(d.parts[1], one_r("t1"));

  EXPECT_THROW(substitute_class(X("t0"), b, b.unit()), DomainError);
}

}  // namespace
}  // namespace zoll
