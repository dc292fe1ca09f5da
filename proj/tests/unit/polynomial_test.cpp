#include <gtest/gtest.h>

#include <random>

#include "zoll/errors.hpp"
#include "zoll/expression.hpp"
#include "zoll/increasing_map.hpp"
#include "zoll/polynomial.hpp"

namespace zoll {
namespace {

Polynomial P(std::string_view s) { return parse_polynomial(s); }

TEST(Polynomial, ParsesAndPrintsCanonically) {
  EXPECT_EQ(to_string(P("t0^2*t1 + 2*t0*t1^2")), "t0^2*t1 + 2*t0*t1^2");
  EXPECT_EQ(to_string(P("-(t0+t1)")), "-t0 - t1");
  EXPECT_EQ(to_string(P("t1*t1")), "t1^2");
  EXPECT_EQ(to_string(P("2*t1*t2 + t1^2 + t0*t1")), "t0*t1 + t1^2 + 2*t1*t2");
  EXPECT_EQ(to_string(P("1/2*t3 - 3/6*t3")), "0");
  EXPECT_EQ(to_string(P("(t0 + 1)^2")), "t0^2 + 2*t0 + 1");
  EXPECT_EQ(to_string(P("4/6")), "2/3");
}

TEST(Polynomial, CanonicalOrderIsDegreeThenLexFromT0) {
  const Polynomial p = P("t2^3 + t0*t1*t2 + t1^3 + t0^3 + t1");
  EXPECT_EQ(to_string(p), "t0^3 + t0*t1*t2 + t1^3 + t2^3 + t1");
}

TEST(Polynomial, ParseErrorsCarryPosition) {
  try {
    P("t0 + * t1");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 5u);
  }
  EXPECT_THROW(P("x1"), ParseError);
  EXPECT_THROW(P("t"), ParseError);
  EXPECT_THROW(P("(t0"), ParseError);
  EXPECT_THROW(P("t0^-1"), ParseError);
  EXPECT_THROW(P("1/0"), ParseError);
  EXPECT_THROW(P(""), ParseError);
}

TEST(Polynomial, UnreducedFractionsCompareEqual) {
  Polynomial a(Monomial{0, 1}, Scalar(2, 4));
  Polynomial b;
  b.add_term(Monomial{0, 1}, Scalar(1, 2));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, P("1/2*t1"));
}

TEST(Polynomial, SubstituteT0) {
  EXPECT_EQ(substitute_t0(P("t0^2*t1"), P("t0+t1")), P("t0^2*t1 + 2*t0*t1^2 + t1^3"));
  EXPECT_EQ(substitute_t0(P("t1*t2"), P("t5 + 7")), P("t1*t2"));
  EXPECT_EQ(substitute_t0(P("t0"), Polynomial()), Polynomial());
}

TEST(Polynomial, SetVarZero) {
  EXPECT_EQ(set_var_zero(P("t1*t2 + t1"), 2), P("t1"));
  EXPECT_EQ(set_var_zero(P("t0^3"), 1), P("t0^3"));
  EXPECT_EQ(set_var_zero(P("t1"), 1), Polynomial());
}

TEST(IncreasingMap, EnumerationExamples) {
  EXPECT_EQ(enumerate_increasing_maps(0, 3).size(), 1u);
  const auto maps = enumerate_increasing_maps(2, 3);
  ASSERT_EQ(maps.size(), 3u);
  EXPECT_EQ(maps[0].values(), (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(maps[1].values(), (std::vector<std::size_t>{1, 3}));
  EXPECT_EQ(maps[2].values(), (std::vector<std::size_t>{2, 3}));
  EXPECT_TRUE(enumerate_increasing_maps(3, 2).empty());
}

TEST(IncreasingMap, CountsAreBinomialAndDistinct) {
  for (std::size_t d = 0; d <= 9; ++d)
    for (std::size_t n = 0; n <= d + 1; ++n) {
      const auto maps = enumerate_increasing_maps(n, d);
      // Pascal's rule as the oracle.
      std::vector<std::vector<std::size_t>> c(d + 2, std::vector<std::size_t>(d + 3, 0));
      for (std::size_t a = 0; a <= d; ++a) {
        c[a][0] = 1;
        for (std::size_t b = 1; b <= a; ++b) c[a][b] = c[a - 1][b - 1] + c[a - 1][b];
      }
      EXPECT_EQ(maps.size(), n <= d ? c[d][n] : 0u) << n << " " << d;
      for (std::size_t i = 1; i < maps.size(); ++i) EXPECT_LT(maps[i - 1].values(), maps[i].values());
    }
}

TEST(IncreasingMap, RejectsInvalidValues) {
  EXPECT_THROW(IncreasingMap({2, 1}, 3), DomainError);
  EXPECT_THROW(IncreasingMap({0}, 3), DomainError);
  EXPECT_THROW(IncreasingMap({4}, 3), DomainError);
}

TEST(IncreasingMap, PushforwardAndPullbackExamples) {
  const IncreasingMap a13({1, 3}, 3), a2({2}, 2), empty({}, 0);
  EXPECT_EQ(pushforward(a13, P("t1*t2")), P("t1*t3"));
  EXPECT_EQ(pushforward(a2, P("t0^2*t1")), P("t0^2*t2"));
  EXPECT_EQ(pushforward(empty, P("5")), P("5"));
  EXPECT_THROW(pushforward(a2, P("t2")), DomainError);
  EXPECT_EQ(pullback(a13, P("t1*t2*t3")), Polynomial());
  EXPECT_EQ(pullback(a13, P("t1*t3")), P("t1*t2"));
  EXPECT_EQ(pullback(a2, P("t0 + t2")), P("t0 + t1"));
}

class RandomPolynomials : public ::testing::Test {
 protected:
  std::mt19937_64 rng{7};
  Polynomial random(std::size_t vars, unsigned degree) {
    std::uniform_int_distribution<int> coeff(-5, 5);
    Polynomial p;
    for (unsigned d = 0; d <= degree; ++d)
      for (const auto& m : monomials_of_degree(d, 0, vars))
        if (rng() % 3 == 0) p.add_term(m, coeff(rng));
    return p;
  }
};

TEST_F(RandomPolynomials, RingLaws) {
  for (int i = 0; i < 60; ++i) {
    const Polynomial a = random(3, 3), b = random(3, 2), c = random(3, 2);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, Polynomial());
    EXPECT_EQ(parse_polynomial(to_string(a)), a);
  }
}

TEST_F(RandomPolynomials, PushforwardPullbackLaws) {
  for (std::size_t d = 0; d <= 4; ++d)
    for (std::size_t n = 0; n <= d; ++n)
      for (const auto& alpha : enumerate_increasing_maps(n, d)) {
        const Polynomial p = random(n, 2), q = random(n, 2);
        const Polynomial P1 = random(d, 2), Q1 = random(d, 2);
        EXPECT_EQ(pushforward(alpha, p * q), pushforward(alpha, p) * pushforward(alpha, q));
        EXPECT_EQ(pullback(alpha, P1 * Q1), pullback(alpha, P1) * pullback(alpha, Q1));
        EXPECT_EQ(pullback(alpha, pushforward(alpha, p)), p);
      }
}

}  // namespace
}  // namespace zoll
