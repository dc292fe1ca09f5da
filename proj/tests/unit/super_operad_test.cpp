#include <gtest/gtest.h>

#include "zoll/errors.hpp"
#include "zoll/super_operad.hpp"

namespace zoll {
namespace {

// mixed(3): 0 = e (even), 1 = o1, 2 = o2 (odd); b(e,e) = 1, b(o1,o2) = 1 = -b(o2,o1).
const SuperSpace kSpace = SuperSpace::mixed(3);
constexpr std::uint8_t E = 0, O1 = 1, O2 = 2;

void expect_term(const BasisTerm& t, int coeff, const BasisTuple& tuple) {
  EXPECT_EQ(t.coeff, Scalar(coeff));
  if (coeff != 0) EXPECT_EQ(t.tuple, tuple);
}

TEST(SuperSpace, BuiltIns) {
  EXPECT_EQ(kSpace.dimension(), 3u);
  EXPECT_EQ(kSpace.parity(O1), 1);
  EXPECT_EQ(kSpace.b(O1, O2), Scalar(1));
  EXPECT_EQ(kSpace.b(O2, O1), Scalar(-1));
  EXPECT_EQ(kSpace.index_of("o2"), 2u);
  const SuperSpace even = SuperSpace::even_identity(4);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(even.parity(i), 0);
  EXPECT_EQ(SuperSpace::mixed(4).b(0, 0), Scalar(2));
  EXPECT_THROW(SuperSpace::mixed(5), DomainError);
}

TEST(SuperSpace, RejectsBadForms) {
  // Odd vectors pairing with an even one.
  EXPECT_THROW(parse_super_space("[space]\nbasis e parity 0\nbasis o parity 1\npair e o = 1\npair o e = 1\n"),
               ConfigError);
  // Symmetric on odd vectors.
  EXPECT_THROW(parse_super_space("[space]\nbasis a parity 1\nbasis b parity 1\npair a b = 1\npair b a = 1\n"),
               ConfigError);
  // Antisymmetric on even vectors.
  EXPECT_THROW(parse_super_space("[space]\nbasis a parity 0\nbasis b parity 0\npair a b = 1\npair b a = -1\n"),
               ConfigError);
  EXPECT_THROW(parse_super_space("[space]\nbasis a parity 2\n"), ConfigError);
}

TEST(SuperSpace, ShippedFileMatchesBuiltIn) {
  const SuperSpace s = load_super_space(std::string(ZOLL_CONFIG_DIR) + "/mixed3.space");
  ASSERT_EQ(s.dimension(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(s.parity(i), kSpace.parity(i));
    for (std::size_t k = 0; k < 3; ++k) EXPECT_EQ(s.b(i, k), kSpace.b(i, k));
  }
}

TEST(EsCompose, Examples) {
  expect_term(es_compose_basis(kSpace, {E, O1}, {O2, E}, 1), 1, {E, E});
  expect_term(es_compose_basis(kSpace, {E, O2}, {O1, E}, 1), -1, {E, E});
  // o1 in the tail moves past the odd w.
  expect_term(es_compose_basis(kSpace, {O1, E, O1}, {E, O2}, 1), -1, {O1, O2, O1});
  expect_term(es_compose_basis(kSpace, {O1, E, O1}, {E, E}, 1), 1, {O1, E, O1});
  // Parity mismatch pairs to zero.
  expect_term(es_compose_basis(kSpace, {E, E}, {O1, E}, 1), 0, {});
  EXPECT_THROW(es_compose_basis(kSpace, {E, E}, {E, E}, 2), DomainError);

  const SuperTensor v = SuperTensor::basis({E, O1}) + Scalar(2) * SuperTensor::basis({E, E});
  const SuperTensor w = SuperTensor::basis({O2, O1}) + SuperTensor::basis({E, O2});
  SuperTensor expected(2);
  expected.add_term({E, O1}, 1);
  expected.add_term({E, O2}, 2);
  EXPECT_EQ(es_compose(kSpace, v, w, 1), expected);
}

TEST(EsPermute, KoszulSigns) {
  expect_term(es_permute_basis(kSpace, {1, 0, 2}, {O1, O2, E}), -1, {O2, O1, E});
  expect_term(es_permute_basis(kSpace, {1, 0}, {O1, E}), 1, {E, O1});
  // Factor 0 travels to position 2.
  expect_term(es_permute_basis(kSpace, {2, 0, 1}, {O1, O2, E}), -1, {O2, E, O1});
  expect_term(es_permute_word(kSpace, {1, 0}, {O1, O2, E}), -1, {O2, E, O1});
  expect_term(es_permute_word(kSpace, {}, {O1, O2, E}), 1, {O1, O2, E});
  EXPECT_THROW(es_permute_basis(kSpace, {1, 0}, {O1, O2, E}), DomainError);
}

TEST(Pairing, Examples) {
  EXPECT_EQ(pair_basis(kSpace, {O1, O2}, {O2, O1}), Scalar(1));
  EXPECT_EQ(pair_basis(kSpace, {E, O1}, {E, O2}), Scalar(1));
  EXPECT_EQ(pair_basis(kSpace, {O1, E}, {O2, E}), Scalar(1));
  EXPECT_EQ(pair_basis(kSpace, {O1, E}, {E, O2}), Scalar(0));
  const SuperTensor v = SuperTensor::basis({O1, O2}, 3) + SuperTensor::basis({E, E});
  EXPECT_EQ(pair(kSpace, v, SuperTensor::basis({O2, O1})), Scalar(3));
}

TEST(DualBasis, StandardAndDegenerate) {
  const DualBasisPair d = DualBasisPair::standard(kSpace);
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t c = 0; c < 3; ++c) {
      Scalar s = 0;
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t k = 0; k < 3; ++k) s += d.primal[a][i] * kSpace.b(i, k) * d.dual[c][k];
      EXPECT_EQ(s, Scalar(a == c ? 1 : 0));
    }
  EXPECT_THROW(DualBasisPair::standard(SuperSpace({{"e", 0}}, Matrix(1, 1))), DomainError);
}

TEST(Vowa, HoldsForEvenTuplesAndRefusesOdd) {
  const DualBasisPair d = DualBasisPair::standard(kSpace);
  const std::vector<BasisTuple> even{{E, E}, {O1, O2}, {O2, O1}, {O1, O1}};
  std::vector<BasisTuple> alphas;
  for (std::uint8_t a = 0; a < 3; ++a)
    for (std::uint8_t b = 0; b < 3; ++b) alphas.push_back({a, b});
  for (const auto& v : even)
    for (const auto& w : even)
      for (const auto& alpha : alphas) {
        const VowaOutcome r = vowa_check(kSpace, d, v, w, 1, alpha);
        EXPECT_TRUE(r.holds);
        EXPECT_TRUE(r.sign_agrees);
        EXPECT_EQ(r.lhs, r.rhs_full);
      }
  EXPECT_THROW(vowa_check(kSpace, d, BasisTuple{O1, E}, BasisTuple{E, E}, 1, BasisTuple{E, E}), DomainError);
}

}  // namespace
}  // namespace zoll
