#include "oracles.hpp"
#include "tmeasure/binomial.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace tmeasure;

namespace {

// Ascending coefficients in t of Delta(x + t, N, H), built factor by factor.
std::vector<Rational> shifted_delta(const Rational& x, unsigned long N, unsigned long H) {
    std::vector<Rational> out{Rational(1)};
    if (N == 0) return out;
    const unsigned long q = (N - 1) / H, r = N - q * H;
    for (unsigned long rep = 0; rep < q; ++rep)
        for (unsigned long j = 0; j < H; ++j) out = oracle::mul(out, {(x + j) / (j + 1), Rational(1, j + 1)});
    for (unsigned long j = 0; j < r; ++j) out = oracle::mul(out, {(x + j) / (j + 1), Rational(1, j + 1)});
    return out;
}

}  // namespace

TEST(DeltaParams, Split) {
    const auto p = DeltaParams::make(10, 4);
    EXPECT_EQ(p.q, 2u);
    EXPECT_EQ(p.r, 2u);
    const auto e = DeltaParams::make(8, 4);
    EXPECT_EQ(e.q, 1u);
    EXPECT_EQ(e.r, 4u);
    const auto z = DeltaParams::make(0, 3);
    EXPECT_EQ(z.q, 0u);
    EXPECT_EQ(z.r, 0u);
}

TEST(Nu, MatchesLcm) {
    unsigned long long l = 1;
    for (unsigned long k = 1; k <= 30; ++k) {
        l = std::lcm(l, static_cast<unsigned long long>(k));
        EXPECT_EQ(nu(k), Integer(std::to_string(l))) << k;
    }
    EXPECT_EQ(d_sigma(6, 3).value, 60 * 60 * 60);
}

TEST(Delta, PolynomialMatchesProduct) {
    for (unsigned long H : {1ul, 2ul, 3ul, 5ul})
        for (unsigned long N = 0; N <= 12; ++N) {
            const auto ref = shifted_delta(0, N, H);
            const RatPolynomial& p = delta_polynomial(DeltaParams::make(N, H));
            ASSERT_EQ(p.degree(), static_cast<int>(N));
            for (unsigned long k = 0; k <= N; ++k) EXPECT_EQ(p.coeff(k), ref[k]) << N << "," << H;
        }
}

TEST(Delta, IntegerValuedAtIntegers) {
    for (long x = -12; x <= 12; ++x) {
        const Rational v = delta_eval(x, DeltaParams::make(9, 4));
        EXPECT_EQ(v.get_den(), 1) << x;
    }
}

TEST(Delta, DerivativesFromTaylorExpansion) {
    for (unsigned long H : {2ul, 3ul})
        for (unsigned long N : {1ul, 5ul, 7ul})
            for (const Rational x : {Rational(0), Rational(-3), Rational(4), Rational(1, 3)}) {
                const auto p = DeltaParams::make(N, H);
                const auto taylor = shifted_delta(x, N, H);
                const auto d = delta_derivatives(x, p, N + 2);
                ASSERT_EQ(d.size(), N + 3);
                for (unsigned long u = 0; u <= N + 2; ++u) {
                    const Rational ref = u <= N ? taylor[u] * Rational(oracle::factorial(u)) : Rational(0);
                    EXPECT_EQ(d[u], ref) << "N=" << N << " H=" << H << " u=" << u;
                    EXPECT_EQ(delta_derivative_polynomial(p, u).eval(x), ref);
                }
            }
}

TEST(Delta, ProductOfBinomialsAtPositiveIntegers) {
    // Delta(x, N, H) = C(x+H-1, H)^q C(x+r-1, r) for x >= 1.
    for (unsigned long H = 1; H <= 4; ++H)
        for (unsigned long N = 1; N <= 10; ++N) {
            const auto p = DeltaParams::make(N, H);
            for (unsigned long x = 1; x <= 8; ++x) {
                Integer ref = oracle::binom(x + p.r - 1, p.r);
                for (unsigned long i = 0; i < p.q; ++i) ref *= oracle::binom(x + H - 1, H);
                EXPECT_EQ(delta_eval(Rational(Integer(x)), p), Rational(ref));
            }
        }
}

TEST(Delta, IntegralityAndEstimatesOnGrid) {
    for (unsigned long H = 1; H <= 5; ++H)
        for (unsigned long N = 0; N <= 12; ++N)
            for (unsigned long sigma = 0; sigma <= 4; ++sigma)
                for (long x = -6; x <= 6; x += 3) {
                    const auto rep = lemma4_check(x, DeltaParams::make(N, H), sigma);
                    EXPECT_TRUE(rep.integrality);
                    EXPECT_TRUE(rep.denominator_bound);
                    EXPECT_TRUE(rep.derivative_sum_bound);
                }
}

TEST(Delta, ClearedValuesAreScaledDerivatives) {
    const auto p = DeltaParams::make(7, 3);
    const auto rep = lemma4_check(-2, p, 3);
    const auto d = delta_derivatives(-2, p, 3);
    ASSERT_EQ(rep.cleared.size(), 4u);
    for (std::size_t u = 0; u < 4; ++u) EXPECT_EQ(Rational(rep.cleared[u]), d[u] * Rational(d_sigma(3, 3).value));
}

TEST(Delta, EmptyProductIsOne) {
    const auto rep = lemma4_check(5, DeltaParams::make(0, 2), 3);
    EXPECT_TRUE(rep.integrality && rep.denominator_bound && rep.derivative_sum_bound);
    EXPECT_EQ(rep.cleared, (std::vector<Integer>{8, 0, 0, 0}));
}
