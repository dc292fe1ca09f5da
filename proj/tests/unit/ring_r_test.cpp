#include <gtest/gtest.h>

#include <random>
#include <set>

#include "zoll/errors.hpp"
#include "zoll/expression.hpp"
#include "zoll/increasing_map.hpp"
#include "zoll/ring_r.hpp"

namespace zoll {
namespace {

Polynomial P(std::string_view s) { return parse_polynomial(s); }
RElement R(std::string_view s) { return RElement::from_polynomial(P(s)); }

TEST(CheckComponent, Examples) {
  EXPECT_TRUE(check_component(2, P("t1*t2 + 3*t1^2*t2")));
  EXPECT_FALSE(check_component(2, P("t1*t3")));
  EXPECT_TRUE(check_component(0, P("7")));
  EXPECT_FALSE(check_component(1, P("t0*t1")));
  EXPECT_FALSE(check_component(1, P("t1 + 1")));
}

TEST(RElement, MembershipErrors) {
  EXPECT_THROW(R("t1*t3"), MembershipError);
  EXPECT_THROW(R("t0*t1"), MembershipError);
  EXPECT_THROW(RElement::from_components({{2, P("t1")}}), MembershipError);
  const RElement x = RElement::from_components({{0, P("3")}, {2, P("t1*t2^2")}});
  EXPECT_EQ(x.components().size(), 2u);
  EXPECT_EQ(x.component(2), P("t1*t2^2"));
  EXPECT_EQ(x.top_component(), 2u);
}

TEST(RMul, WorkedValues) {
  EXPECT_EQ(r_mul(R("t1"), R("t1")), R("t1^2 + 2*t1*t2"));
  EXPECT_EQ(r_mul(R("t1"), R("t1*t2")), R("t1^2*t2 + t1*t2^2 + 3*t1*t2*t3"));
  EXPECT_EQ(r_mul(RElement::unit(), R("t1*t2^3 + 4")), R("t1*t2^3 + 4"));
}

// Oracle: enumerate covering pairs of increasing maps straight from the
// definition of the product.
RElement covering_product(const RElement& f, const RElement& g) {
  Polynomial out;
  const auto fc = f.components(), gc = g.components();
  std::size_t top = 0;
  for (const auto& [p, fp] : fc)
    for (const auto& [q, gq] : gc) top = std::max(top, p + q);
  for (std::size_t n = 0; n <= top; ++n)
    for (const auto& [p, fp] : fc)
      for (const auto& [q, gq] : gc)
        for (const auto& a : enumerate_increasing_maps(p, n))
          for (const auto& b : enumerate_increasing_maps(q, n)) {
            std::set<std::size_t> image(a.values().begin(), a.values().end());
            image.insert(b.values().begin(), b.values().end());
            if (image.size() == n) out += pushforward(a, fp) * pushforward(b, gq);
          }
  return RElement::from_polynomial(out);
}

TEST(RMul, MatchesCoveringDefinitionAndRingLaws) {
  std::mt19937_64 rng(11);
  const std::vector<std::string> pool{"1", "t1", "t1^2", "t1*t2", "t1^2*t2", "t1*t2^2", "t1*t2*t3", "t1^3"};
  auto rand_r = [&] {
    Polynomial p;
    for (int k = 0; k < 3; ++k) p += Scalar(static_cast<long>(rng() % 7) - 3) * P(pool[rng() % pool.size()]);
    return RElement::from_polynomial(p);
  };
  for (int i = 0; i < 40; ++i) {
    const RElement f = rand_r(), g = rand_r(), h = rand_r();
    const RElement fg = r_mul(f, g);
    EXPECT_EQ(fg, covering_product(f, g));
    EXPECT_EQ(fg, r_mul(g, f));
    EXPECT_EQ(r_mul(fg, h), r_mul(f, r_mul(g, h)));
  }
}

TEST(ProjectToLevel, Examples) {
  EXPECT_EQ(project_to_level(R("t1"), 3).value, P("t1 + t2 + t3"));
  EXPECT_EQ(project_to_level(R("5"), 4).value, P("5"));
  EXPECT_EQ(project_to_level(R("t1*t2"), 3).value, P("t1*t2 + t1*t3 + t2*t3"));
  EXPECT_EQ(project_to_level(R("t1*t2*t3"), 2).value, Polynomial());
}

TEST(DecodeRd, Examples) {
  EXPECT_EQ(decode_rd(P("t1 + t2 + t3"), 3), R("t1"));
  EXPECT_THROW(decode_rd(P("t2"), 2), MembershipError);
  EXPECT_EQ(decode_rd(P("5"), 0), R("5"));
  EXPECT_THROW(decode_rd(P("t0"), 2), DomainError);
  EXPECT_THROW(decode_rd(P("t3"), 2), DomainError);
}

TEST(RestrictLevel, Examples) {
  EXPECT_EQ(restrict_level({2, P("t1 + t2")}), (RdElement{1, P("t1")}));
  EXPECT_EQ(restrict_level({2, P("t1*t2")}), (RdElement{1, Polynomial()}));
  EXPECT_EQ(restrict_level({1, P("7")}), (RdElement{0, P("7")}));
}

TEST(ProjectToLevel, HomomorphismTowerAndDecode) {
  const std::vector<RElement> xs{R("1"), R("t1"), R("t1^2 - 2"), R("t1*t2"), R("t1*t2^2 + t1"), R("t1*t2*t3 + 3*t1^2")};
  for (std::size_t d = 0; d <= 5; ++d)
    for (const auto& f : xs) {
      for (const auto& g : xs)
        EXPECT_EQ(project_to_level(r_mul(f, g), d).value, project_to_level(f, d).value * project_to_level(g, d).value);
      if (d >= 1) EXPECT_EQ(restrict_level(project_to_level(f, d)), project_to_level(f, d - 1));
      if (f.top_component() <= d) EXPECT_EQ(decode_rd(project_to_level(f, d).value, d), f);
    }
}

}  // namespace
}  // namespace zoll
