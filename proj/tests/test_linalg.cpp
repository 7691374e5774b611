#include "oracles.hpp"
#include "tmeasure/linalg.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace tmeasure;

namespace {

RatMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, std::size_t rank_cap) {
    std::uniform_int_distribution<long> c(-9, 9), den(1, 5);
    RatMatrix basis(rank_cap, std::vector<Rational>(cols));
    for (auto& row : basis)
        for (auto& v : row) v = Rational(c(rng), den(rng));
    RatMatrix m(rows, std::vector<Rational>(cols, Rational(0)));
    for (auto& row : m)
        for (const auto& b : basis) {
            const Rational f(c(rng));
            for (std::size_t k = 0; k < cols; ++k) row[k] += f * b[k];
        }
    for (auto& row : m)
        for (auto& v : row) v.canonicalize();
    return m;
}

}  // namespace

TEST(Linalg, HilbertDeterminant) {
    // det H_4 = 1/6048000.
    RatMatrix h(4, std::vector<Rational>(4));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) h[i][j] = Rational(1, static_cast<long>(i + j + 1));
    EXPECT_EQ(determinant(h), Rational(1, 6048000));
}

TEST(Linalg, AgreesWithGaussianElimination) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + trial % 6;
        const RatMatrix m = random_matrix(rng, n, n, trial % 3 == 0 ? n - (n > 1) : n);
        EXPECT_EQ(determinant(m), oracle::det(m));
        EXPECT_EQ(rank(m), oracle::rank(m));
    }
}

TEST(Linalg, KernelBasisSpansNullSpace) {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t rows = 3 + trial % 4, cols = 6, r = 1 + trial % 4;
        const RatMatrix m = random_matrix(rng, rows, cols, r);
        const auto ker = kernel_basis(m, cols);
        const std::size_t rk = oracle::rank(m);
        EXPECT_EQ(ker.size(), cols - rk);
        for (const auto& v : ker) {
            for (const auto& row : m) {
                Rational s = 0;
                for (std::size_t k = 0; k < cols; ++k) s += row[k] * v[k];
                EXPECT_EQ(s, 0);
            }
        }
        EXPECT_EQ(oracle::rank(ker.empty() ? RatMatrix{} : ker), ker.size());
    }
}

TEST(Linalg, GreedyRowsAreFirstIndependentSubset) {
    RatMatrix m = {{1, 2, 3}, {2, 4, 6}, {0, 1, 1}, {1, 3, 4}, {0, 0, 1}};
    EXPECT_EQ(greedy_independent_rows(m), (std::vector<std::size_t>{0, 2, 4}));
}

TEST(Linalg, PolynomialDeterminantMatchesPointwise) {
    using P = RatPolynomial;
    const std::vector<std::vector<P>> m = {
        {P({Rational(1), Rational(1)}), P({Rational(2)}), P({Rational(0), Rational(0), Rational(1)})},
        {P({Rational(3)}), P({Rational(0), Rational(1)}), P({Rational(1)})},
        {P({Rational(-1), Rational(2)}), P({Rational(1), Rational(0), Rational(1)}), P({Rational(5)})}};
    const P d = determinant(m);
    for (long z = -3; z <= 3; ++z) {
        oracle::Matrix num(3, std::vector<Rational>(3));
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) num[i][j] = m[i][j].eval(Rational(z));
        EXPECT_EQ(d.eval(Rational(z)), oracle::det(num)) << z;
    }
}

TEST(Linalg, IntervalDeterminantEnclosesExact) {
    const RatMatrix m = {{2, 1, 0}, {1, 3, 1}, {0, 1, 4}};
    std::vector<std::vector<CertifiedComplex>> c(3, std::vector<CertifiedComplex>(3));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) c[i][j] = CertifiedComplex(CertifiedReal(m[i][j]).with_bits(64));
    const CertifiedComplex d = determinant(c);
    EXPECT_TRUE(d.re().contains(oracle::det(m)));
    EXPECT_TRUE(d.im().contains(0));
}
