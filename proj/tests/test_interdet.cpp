#include "oracles.hpp"
#include "tmeasure/interdet.hpp"
#include "tmeasure/samplers.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace tmeasure;
using oracle::dec;

namespace {

struct DoubleParams {
    double U, V, W, S, S1, T, T1, H;
};

DoubleParams double_params(unsigned D, double logA, double logB, double logE, double abs_theta) {
    DoubleParams p{};
    const double E = std::exp(logE);
    p.U = (3.3 * D * std::log(D + 2.0) + logE) / logE;
    p.V = (2 * E * abs_theta + D * logA + 6 * logE) / logE;
    const double wn = logB + std::log(logA) + 4 * std::log(double(D)) + 2 * (logE + std::log(std::max(1.0, abs_theta))) + 10;
    p.W = wn / logE;
    p.S = 10.5 * p.U * p.V;
    p.S1 = 12 * D * p.W + 0.5;
    p.T = 20.2 * D * p.V * p.W;
    p.T1 = 4.2 * p.U + 0.5;
    p.H = 1.5 * wn;
    return p;
}

bool floor_matches(const Integer& got, double want) {
    if (std::abs(want - std::round(want)) < 1e-9 * std::max(1.0, want)) return true;  // too close to call in double
    return got == Integer(static_cast<long>(std::floor(want)));
}

// Delta^{(k)}(x, N, H) from the falling-factorial product, via finite Taylor expansion.
Rational delta_deriv(long x, unsigned long N, unsigned long H, unsigned long k) {
    std::vector<Rational> poly{Rational(1)};
    if (N > 0) {
        const unsigned long q = (N - 1) / H, r = N - q * H;
        for (unsigned long rep = 0; rep <= q; ++rep)
            for (unsigned long j = 0; j < (rep == q ? r : H); ++j)
                poly = oracle::mul(poly, {Rational(x + static_cast<long>(j), static_cast<long>(j + 1)), Rational(1, j + 1)});
    }
    return k < poly.size() ? poly[k] * Rational(oracle::factorial(k)) : Rational(0);
}

}  // namespace

TEST(Params, AgreeWithDoublePrecisionFormulas) {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> Dd(1, 8);
    for (int trial = 0; trial < 25; ++trial) {
        const unsigned D = Dd(rng);
        const Rational logA(1 + trial % 7, 2), logB(trial % 5, 1), logE(3 + trial % 4, 2), th(1 + trial % 9, 3);
        ParamInputs in{D, exact(logA), exact(logB), exact(logE), exact_complex(th)};
        const BoundParams p = derive_params(in);
        const auto ref = double_params(D, logA.get_d(), logB.get_d(), logE.get_d(), th.get_d());
        EXPECT_NEAR(p.values.U.mid().get_d(), ref.U, 1e-9 * ref.U);
        EXPECT_NEAR(p.values.V.mid().get_d(), ref.V, 1e-9 * ref.V);
        EXPECT_NEAR(p.values.W.mid().get_d(), ref.W, 1e-9 * ref.W);
        EXPECT_TRUE(floor_matches(p.S, ref.S));
        EXPECT_TRUE(floor_matches(p.S1, ref.S1));
        EXPECT_TRUE(floor_matches(p.T, ref.T));
        EXPECT_TRUE(floor_matches(p.T1, ref.T1));
        EXPECT_TRUE(floor_matches(p.H, ref.H));
        EXPECT_EQ(p.L, (p.T + 1) * (2 * p.T1 + 1));
    }
}

TEST(Params, RandomPacksSatisfyChecks) {
    Rng rng(2);
    for (const auto& p : random_param_packs(5, rng, {})) {
        EXPECT_TRUE(p.checks_pass());
        EXPECT_EQ(p.checks.size(), 4u);
    }
}

TEST(Params, RejectsNonPositiveLogs) {
    ParamInputs in{1, exact(0), exact(1), exact(1), exact_complex(1)};
    EXPECT_THROW(derive_params(in), DomainError);
}

TEST(Toy, RankMinorAndIntegrality) {
    ToyConfig toy;
    toy.S = 2;
    toy.S1 = 2;
    toy.T = 1;
    toy.T1 = 1;
    toy.H = 2;
    toy.alpha = 2;
    toy.beta = 1;
    const auto rep = toy_rank_check(toy);
    EXPECT_EQ(rep.L, 6u);
    EXPECT_EQ(rep.rows, 9u);
    EXPECT_TRUE(rep.entries_integral);

    // Independent construction of the same matrix.
    oracle::Matrix m;
    for (unsigned long sigma = 0; sigma <= 2; ++sigma)
        for (long s = 0; s <= 2; ++s) {
            std::vector<Rational> row;
            Rational d = 1;  // nu(2)^sigma
            for (unsigned long e = 0; e < sigma; ++e) d *= 2;
            for (unsigned long tau = 0; tau <= 1; ++tau)
                for (long t = -1; t <= 1; ++t) {
                    Rational acc = 0;
                    for (unsigned long k = 0; k <= sigma; ++k) {
                        Rational tb = 1;
                        for (unsigned long e = 0; e < sigma - k; ++e) tb *= Rational(t) * toy.beta;
                        acc += Rational(oracle::binom(sigma, k)) * delta_deriv(s, tau, 2, k) * tb;
                    }
                    const long ts = t * s;
                    Rational ap = 1;
                    for (long e = 0; e < std::labs(ts); ++e) ap *= toy.alpha;
                    if (ts < 0) ap = 1 / ap;
                    row.push_back(d * acc * ap);
                }
            m.push_back(row);
        }
    EXPECT_EQ(oracle::rank(m), 6u);
    EXPECT_EQ(rep.rank, 6u);
    ASSERT_TRUE(rep.minor.has_value());
    EXPECT_NE(*rep.minor, 0);
    ASSERT_EQ(rep.selected_rows.size(), 6u);
    oracle::Matrix sub;
    for (const auto& r : rep.selected_rows) sub.push_back(m[r.sigma * 3 + r.s]);
    EXPECT_EQ(oracle::det(sub), *rep.minor);
}

TEST(Toy, DeficientRankGivesKernelWitness) {
    ToyConfig toy;
    toy.S = 0;
    toy.S1 = 1;
    toy.T = 1;
    toy.T1 = 1;
    toy.H = 1;
    toy.alpha = 3;
    const auto rep = toy_rank_check(toy);
    EXPECT_LT(rep.rank, rep.L);
    EXPECT_FALSE(rep.minor.has_value());
    ASSERT_EQ(rep.kernel_witness.size(), rep.L);
    for (const auto& row : rep.matrix) {
        Rational s = 0;
        for (std::size_t k = 0; k < row.size(); ++k) s += row[k] * rep.kernel_witness[k];
        EXPECT_EQ(s, 0);
    }
}

TEST(Entries, PolynomialAndAnalyticPathsAgree) {
    Rng rng(12);
    for (const ThetaSpec& th : {ThetaSpec::rational(1), ThetaSpec::log2(), ThetaSpec::rational(Rational(1, 2)),
                                ThetaSpec::pi_i()}) {
        for (int i = 0; i < 15; ++i) {
            const EntryIndex idx = random_entry_index(rng, 3, 3, 4, 4);
            const auto c = entry_consistency_check(idx, 3, th, dec("1e-20"));
            EXPECT_EQ(c.verdict, Verdict::pass) << th.name;
        }
    }
}

TEST(Entries, AnalyticEntryAtOrigin) {
    // sigma = 0, s = 0: gamma = Delta(0, tau, H), which is 1 for tau = 0 and 0 otherwise.
    EXPECT_TRUE(gamma_entry({0, 2, 0, 0}, 3, ThetaSpec::log2(), 64).re().contains(1));
    EXPECT_TRUE(gamma_entry({2, 2, 0, 0}, 3, ThetaSpec::log2(), 64).re().contains(0));
}

TEST(DecayBound, RightHandSide) {
    Lemma3Config cfg{4, exact(2), Rational(3), Rational(1), dec("1e-5")};
    // -(4/2)*2 + 3 + 1*2 + log 8 + 2 = 3 + log 8
    const CertifiedReal r = lemma3_rhs(cfg, 128);
    EXPECT_TRUE(r.overlaps(CertifiedReal(3L) + CertifiedReal(3L) * const_log2(256)));
    cfg.epsilon = dec("1e-2");  // not below e^-8
    EXPECT_THROW(lemma3_rhs(cfg, 128), DomainError);
}

TEST(DecayBound, ToyDeterminantBelowBound) {
    ToyConfig toy;
    toy.S = 1;
    toy.S1 = 2;
    toy.T = 1;
    toy.T1 = 1;
    toy.H = 2;
    const auto rep = determinant_decay_check(toy, ThetaSpec::rational(1), exact(1));
    EXPECT_TRUE(rep.pass);
    EXPECT_EQ(rep.L, 6u);
}

TEST(VanishingOrder, DeterminantIsMonomialTimesConstantDeterminant) {
    Rng rng(30);
    for (int trial = 0; trial < 20; ++trial) {
        const auto c = random_vanishing_case(2 + trial % 4, rng);
        const auto rep = vanishing_order_check(c);
        EXPECT_TRUE(rep.pass);
        const std::size_t k = c.n.size();
        oracle::Matrix C(k, std::vector<Rational>(k, Rational(0)));
        long sn = 0, ss = 0;
        for (std::size_t l = 0; l < k; ++l) sn += static_cast<long>(c.n[l]);
        for (std::size_t mu = 0; mu < k; ++mu) ss += static_cast<long>(c.sigma[mu]);
        for (std::size_t l = 0; l < k; ++l)
            for (std::size_t mu = 0; mu < k; ++mu) {
                const unsigned long n = c.n[l], s = c.sigma[mu];
                if (s > n) continue;
                Rational v = Rational(oracle::factorial(n) / oracle::factorial(n - s));
                for (unsigned long e = 0; e < n - s; ++e) v *= c.zeta[mu];
                C[l][mu] = v;
            }
        const Rational dc = oracle::det(C);
        if (dc == 0) {
            EXPECT_TRUE(rep.identically_zero);
        } else {
            EXPECT_EQ(rep.computed_ord, sn - ss);
            EXPECT_EQ(rep.determinant.degree(), sn - ss);
            EXPECT_EQ(rep.determinant.coeff(static_cast<unsigned>(sn - ss)), dc);
            EXPECT_GE(rep.computed_ord, static_cast<long>(k * (k - 1) / 2) - ss);
        }
    }
}

TEST(VanishingOrder, SigmaZeroIsMinimal) {
    VanishingOrderCase c{{0, 1, 2}, {0, 0, 0}, {Rational(1), Rational(2), Rational(3)}};
    const auto rep = vanishing_order_check(c);
    EXPECT_EQ(rep.computed_ord, 3);
    EXPECT_EQ(rep.lower_bound, 3);
    EXPECT_TRUE(rep.pass);
}
