#include "oracles.hpp"
#include "tmeasure/polynomial.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace tmeasure;

TEST(IntPolynomial, ParseIsLeadingFirst) {
    const IntPolynomial p = IntPolynomial::parse("1,0,-2");
    EXPECT_EQ(p.degree(), 2);
    EXPECT_EQ(p.coeff(0), -2);
    EXPECT_EQ(p.coeff(2), 1);
    EXPECT_EQ(p.leading_first(), (std::vector<Integer>{1, 0, -2}));
    EXPECT_EQ(IntPolynomial::parse("0,0,3,1").degree(), 1);
    EXPECT_THROW(IntPolynomial::parse("1,x"), DomainError);
}

TEST(IntPolynomial, LengthContentPrimitive) {
    const IntPolynomial p = IntPolynomial::from_leading_first({-6, 4, 10});
    EXPECT_EQ(p.length(), 20);
    EXPECT_EQ(p.content(), 2);
    EXPECT_EQ(p.normalized(), IntPolynomial::from_leading_first({3, -2, -5}));
    EXPECT_EQ(p.reversed(), IntPolynomial::from_leading_first({10, 4, -6}));
    EXPECT_EQ(p.derivative(), IntPolynomial::from_leading_first({-12, 4}));
}

TEST(IntPolynomial, EvalAgreesWithHorner) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> c(-30, 30);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Integer> a(6);
        for (auto& x : a) x = c(rng);
        const IntPolynomial p(a);
        const Rational x(c(rng), 7);
        Rational ref = 0, pw = 1;
        for (const auto& ak : a) {
            ref += Rational(ak) * pw;
            pw *= x;
        }
        EXPECT_EQ(p.eval(x), ref);
        EXPECT_TRUE(p.eval(CertifiedReal(x)).contains(ref));
    }
}

TEST(IntPolynomial, ProductMatchesConvolution) {
    const IntPolynomial a = IntPolynomial::from_leading_first({2, -1, 3});
    const IntPolynomial b = IntPolynomial::from_leading_first({1, 5});
    const auto ref = oracle::mul({3, -1, 2}, {5, 1});
    const IntPolynomial prod = a * b;
    ASSERT_EQ(prod.degree(), 3);
    for (unsigned k = 0; k <= 3; ++k) EXPECT_EQ(Rational(prod.coeff(k)), ref[k]);
    EXPECT_TRUE((a - a).is_zero());
}

TEST(RatPolynomial, DivmodReconstructs) {
    const RatPolynomial a({Rational(1), Rational(-3), Rational(0), Rational(2, 3), Rational(5)});
    const RatPolynomial b({Rational(-1, 2), Rational(0), Rational(7)});
    RatPolynomial q, r;
    RatPolynomial::divmod(a, b, q, r);
    EXPECT_EQ(q * b + r, a);
    EXPECT_LT(r.degree(), b.degree());
    EXPECT_THROW(RatPolynomial::divmod(a, RatPolynomial(), q, r), DomainError);
}

TEST(RatPolynomial, OrderAtZero) {
    EXPECT_EQ(RatPolynomial({Rational(0), Rational(0), Rational(3)}).order_at_zero(), 2);
    EXPECT_EQ(RatPolynomial().order_at_zero(), -1);
}

TEST(Gcd, CommonFactor) {
    const IntPolynomial f = IntPolynomial::from_leading_first({1, -1});  // x - 1
    const IntPolynomial a = f * IntPolynomial::from_leading_first({1, 0, 1});
    const IntPolynomial b = f * IntPolynomial::from_leading_first({2, 3});
    EXPECT_EQ(gcd(a, b), f);
    EXPECT_EQ(gcd(-(a * IntPolynomial::from_leading_first({3})), b), f);
    EXPECT_TRUE(divides(f, a));
    EXPECT_FALSE(divides(IntPolynomial::from_leading_first({1, 1}), a));
}

TEST(Squarefree, YunDecomposition) {
    const IntPolynomial x1 = IntPolynomial::from_leading_first({1, -1});
    const IntPolynomial x2 = IntPolynomial::from_leading_first({1, 2});
    const IntPolynomial p = x1 * x2 * x2 * x2 * IntPolynomial::from_leading_first({4});
    const auto parts = squarefree_decomposition(p);
    ASSERT_EQ(parts.size(), 3u);
    EXPECT_EQ(parts[0], x1);
    EXPECT_EQ(parts[1].degree(), 0);
    EXPECT_EQ(parts[2], x2);
    EXPECT_EQ(squarefree_part(p), x1 * x2);
}
