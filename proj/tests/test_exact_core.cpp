#include <gtest/gtest.h>

#include <random>

#include "szego/rational_function.hpp"

using namespace szego;

namespace {

BetaPoly lin(int c0, int c1) { return BetaPoly{Rat(c0), Rat(c1)}; }

}  // namespace

TEST(Rat, CanonicalForm) {
  EXPECT_EQ(Rat(BigInt(6), BigInt(-4)).to_string(), "-3/2");
  EXPECT_EQ(Rat(0).to_string(), "0/1");
  EXPECT_EQ(Rat(3).to_string(), "3/1");
  EXPECT_EQ(Rat::parse("10/4"), Rat(5, 2));
  EXPECT_THROW(Rat(BigInt(1), BigInt(0)), std::domain_error);
  EXPECT_THROW(Rat::parse("1/x"), std::invalid_argument);
}

TEST(Rat, BinomialAndFactorial) {
  EXPECT_EQ(factorial(10), BigInt(3628800));
  EXPECT_EQ(binomial(10, 3), BigInt(120));
}

TEST(RatFuncBeta, NormalizeSelfCancels) {
  const auto r = RatFuncBeta::normalize(lin(1, 1), lin(1, 1));
  EXPECT_EQ(r.num(), BetaPoly(Rat(1)));
  EXPECT_EQ(r.den(), BetaPoly(Rat(1)));
}

TEST(RatFuncBeta, NormalizeMonicDenominator) {
  const auto r = RatFuncBeta::normalize(BetaPoly(Rat(1)), lin(1, 1) * lin(1, 2));
  EXPECT_EQ(r.num(), BetaPoly(Rat(1, 2)));
  EXPECT_EQ(r.den(), (BetaPoly{Rat(1, 2), Rat(3, 2), Rat(1)}));
}

TEST(RatFuncBeta, NormalizeGcd) {
  const auto r = RatFuncBeta::normalize(BetaPoly::monomial(Rat(2), 1), BetaPoly::monomial(Rat(4), 2));
  EXPECT_EQ(r.num(), BetaPoly(Rat(1, 2)));
  EXPECT_EQ(r.den(), BetaPoly::beta());
}

TEST(RatFuncBeta, ZeroDenominatorRejected) {
  EXPECT_THROW(RatFuncBeta::normalize(BetaPoly(Rat(1)), BetaPoly()), std::domain_error);
}

TEST(RatFuncBeta, Eval) {
  const auto r = RatFuncBeta::normalize(BetaPoly(Rat(1)), lin(1, 1));
  EXPECT_EQ(r.eval(Rat(1)), Rat(1, 2));
  const auto v = RatFuncBeta::normalize(lin(1, 1), BetaPoly::monomial(Rat(2), 2));
  EXPECT_EQ(v.eval(Rat(1)), Rat(1));
  EXPECT_EQ(v.eval(Rat(2)), Rat(3, 8));
}

TEST(RatFuncBeta, PoleNamesFactor) {
  const auto r = RatFuncBeta::normalize(BetaPoly(Rat(1)), lin(1, 1));
  try {
    r.eval(Rat(-1));
    FAIL() << "expected PoleError";
  } catch (const PoleError& e) {
    EXPECT_NE(std::string(e.what()).find("beta"), std::string::npos) << e.what();
  }
}

TEST(RatFuncBeta, EqualityIsBitwiseAndByCrossMultiplication) {
  const auto a = RatFuncBeta::normalize(lin(2, 2), lin(3, 3) * lin(0, 1));
  const auto b = RatFuncBeta::normalize(BetaPoly(Rat(2, 3)), BetaPoly::beta());
  EXPECT_EQ(a, b);
  EXPECT_TRUE(RatFuncBeta::equivalent(a, b));
}

TEST(RatFuncBeta, EvalIsRingHomomorphism) {
  std::mt19937 gen(7);
  std::uniform_int_distribution<int> coef(-5, 5);
  auto random_poly = [&](int deg) {
    std::vector<Rat> c;
    for (int k = 0; k <= deg; ++k) c.emplace_back(coef(gen));
    return BetaPoly(c);
  };
  for (int trial = 0; trial < 50; ++trial) {
    BetaPoly da = random_poly(2), db = random_poly(2);
    if (da.is_zero() || db.is_zero()) continue;
    const auto a = RatFuncBeta::normalize(random_poly(3), da);
    const auto b = RatFuncBeta::normalize(random_poly(3), db);
    const Rat x(coef(gen) * 7 + 3, 11);
    try {
      const Rat ea = a.eval(x), eb = b.eval(x);
      EXPECT_EQ((a + b).eval(x), ea + eb);
      EXPECT_EQ((a * b).eval(x), ea * eb);
      EXPECT_EQ((a - b).eval(x), ea - eb);
    } catch (const PoleError&) {
    }
  }
}

TEST(BetaPoly, DivmodAndGcd) {
  const BetaPoly a = lin(1, 1) * lin(2, 1) * lin(3, 1);
  const BetaPoly b = lin(1, 1) * lin(5, 1);
  EXPECT_EQ(gcd(a, b), lin(1, 1));
  const auto [qq, rr] = a.divmod(lin(2, 1));
  EXPECT_TRUE(rr.is_zero());
  EXPECT_EQ(qq, lin(1, 1) * lin(3, 1));
}
