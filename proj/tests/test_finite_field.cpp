#include <gtest/gtest.h>

#include <random>
#include <set>

#include "figplane/finite_field.hpp"
#include "oracle.hpp"

using namespace figplane;

namespace {

struct FieldCase {
  std::uint32_t p, k;
};

class FieldTest : public ::testing::TestWithParam<FieldCase> {};

TEST_P(FieldTest, ModulusIsSmallestIrreducible) {
  const FieldCtx f(GetParam().p, GetParam().k);
  const auto want = oracle::smallest_irreducible(f.p(), 3 * f.k());
  EXPECT_EQ(f.irreducible(), want);
}

TEST_P(FieldTest, GeneratorHasFullOrderAndIsSmallest) {
  const FieldCtx f(GetParam().p, GetParam().k);
  const auto F = oracle::ref_field(f);
  const std::uint64_t ord = F.size() - 1;
  auto order_of = [&](const oracle::Poly& g) {
    oracle::Poly x = g;
    std::uint64_t e = 1;
    while (x != F.one()) {
      x = F.mul(x, g);
      ++e;
    }
    return e;
  };
  EXPECT_EQ(order_of(F.from_code(f.generator_code())), ord);
  for (std::uint32_t c = 2; c < f.generator_code(); ++c) EXPECT_LT(order_of(F.from_code(c)), ord);
}

TEST_P(FieldTest, ArithmeticMatchesSchoolbook) {
  const FieldCtx f(GetParam().p, GetParam().k);
  const auto F = oracle::ref_field(f);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint32_t> any(0, f.size() - 1);
  for (int i = 0; i < 3000; ++i) {
    const Elem a{any(rng)}, b{any(rng)};
    const auto A = oracle::to_ref(F, f, a), B = oracle::to_ref(F, f, b);
    ASSERT_EQ(oracle::to_ref(F, f, f.add(a, b)), F.add(A, B));
    ASSERT_EQ(oracle::to_ref(F, f, f.sub(a, b)), F.sub(A, B));
    ASSERT_EQ(oracle::to_ref(F, f, f.mul(a, b)), F.mul(A, B));
    ASSERT_EQ(oracle::to_ref(F, f, f.neg(a)), F.neg(A));
    if (!b.is_zero()) {
      ASSERT_EQ(oracle::to_ref(F, f, f.div(a, b)), F.mul(A, F.inv(B)));
    }
    ASSERT_EQ(oracle::to_ref(F, f, f.frobenius(a, 1)), F.pow(A, f.q()));
    ASSERT_EQ(oracle::to_ref(F, f, f.frobenius(a, 2)), F.pow(A, std::uint64_t{f.q()} * f.q()));
    ASSERT_EQ(oracle::to_ref(F, f, f.norm(a)), F.pow(A, f.norm_exponent()));
    ASSERT_EQ(f.in_base_subfield(a), F.pow(A, f.q()) == A);
  }
}

TEST_P(FieldTest, NonzeroSquares) {
  const FieldCtx f(GetParam().p, GetParam().k);
  std::set<std::uint32_t> squares;
  for (Elem y : f.elements())
    if (!y.is_zero()) squares.insert(f.mul(y, y).v);
  for (Elem x : f.elements()) EXPECT_EQ(f.is_nonzero_square(x), squares.count(x.v) == 1);
}

TEST_P(FieldTest, NormLandsInBaseField) {
  const FieldCtx f(GetParam().p, GetParam().k);
  std::set<std::uint32_t> image;
  for (Elem x : f.elements()) {
    if (x.is_zero()) continue;
    ASSERT_TRUE(f.in_base_subfield(f.norm(x)));
    image.insert(f.norm(x).v);
  }
  EXPECT_EQ(image.size(), f.q() - 1);
}

INSTANTIATE_TEST_SUITE_P(Small, FieldTest,
                         ::testing::Values(FieldCase{2, 1}, FieldCase{3, 1}, FieldCase{2, 2},
                                           FieldCase{5, 1}, FieldCase{7, 1}));

TEST(Field, TauOrderAtFive) {
  const FieldCtx f(5, 1);
  EXPECT_NE(f.pow(f.tau(), 13), kOne);
  EXPECT_NE(f.pow(f.tau(), 62), kOne);
  EXPECT_EQ(f.pow(f.tau(), 124), kOne);
}

TEST(Field, NormClassSizeAtThree) {
  const FieldCtx f(3, 1);
  int n = 0;
  for (Elem x : f.elements()) n += !x.is_zero() && f.norm(x) == f.norm(f.tau());
  EXPECT_EQ(n, 13);
}

TEST(Field, EvenCharacteristicEveryNonzeroIsSquare) {
  const FieldCtx f(2, 2);
  for (Elem x : f.elements()) EXPECT_EQ(f.is_nonzero_square(x), !x.is_zero());
}

TEST(Field, SquareCountAtThree) {
  const FieldCtx f(3, 1);
  int n = 0;
  for (Elem x : f.elements()) n += f.is_nonzero_square(x);
  EXPECT_EQ(n, 13);
}

TEST(Field, RejectsBadParameters) {
  EXPECT_THROW(FieldCtx(4, 1), FieldConfigError);
  EXPECT_THROW(FieldCtx(3, 0), FieldConfigError);
  EXPECT_THROW(FieldCtx(2, 8, 1 << 20), FieldConfigError);
}

TEST(Field, FactorPrimePower) {
  EXPECT_EQ(factor_prime_power(8), (std::pair<std::uint32_t, std::uint32_t>{2, 3}));
  EXPECT_EQ(factor_prime_power(9), (std::pair<std::uint32_t, std::uint32_t>{3, 2}));
  EXPECT_EQ(factor_prime_power(7), (std::pair<std::uint32_t, std::uint32_t>{7, 1}));
  EXPECT_FALSE(factor_prime_power(6));
  EXPECT_FALSE(factor_prime_power(1));
  EXPECT_FALSE(factor_prime_power(12));
}

TEST(Field, ZeroHandling) {
  const FieldCtx f(3, 1);
  EXPECT_EQ(f.mul(kZero, f.tau()), kZero);
  EXPECT_EQ(f.add(kZero, f.tau()), f.tau());
  EXPECT_EQ(f.pow(kZero, 0), kOne);
  EXPECT_THROW(f.inv(kZero), PreconditionError);
}

}  // namespace
