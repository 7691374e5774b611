#include "oracles.hpp"
#include "tmeasure/search.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <numeric>

using namespace tmeasure;

namespace {

// Every nonzero leading-first vector of length d+1 with sum |a_i| <= L and
// first nonzero entry positive, by nested loops.
std::vector<std::vector<long>> brute_force_space(unsigned long d, long L) {
    std::vector<std::vector<long>> out;
    std::vector<long> v(d + 1, 0);
    std::function<void(std::size_t, long)> rec = [&](std::size_t i, long left) {
        if (i == v.size()) {
            auto nz = std::find_if(v.begin(), v.end(), [](long x) { return x != 0; });
            if (nz != v.end() && *nz > 0) out.push_back(v);
            return;
        }
        for (long a = -left; a <= left; ++a) {
            v[i] = a;
            rec(i + 1, left - std::labs(a));
        }
        v[i] = 0;
    };
    rec(0, L);
    return out;
}

long double target_ld(Target t) {
    switch (t) {
        case Target::pi: return 3.14159265358979323846264338327950288L;
        case Target::log2: return 0.693147180559945309417232121458176568L;
        case Target::e: return 2.71828182845904523536028747135266250L;
    }
    return 0;
}

long double eval_ld(const std::vector<long>& v, long double x) {
    long double acc = 0;
    for (long a : v) acc = acc * x + a;
    return acc;
}

std::vector<long> as_vector(const IntPolynomial& p, unsigned long d) {
    std::vector<long> v(d + 1, 0);
    for (int k = 0; k <= p.degree(); ++k) v[d - k] = p.coeff(k).get_si();
    return v;
}

bool is_square(long n) {
    if (n < 0) return false;
    const long r = std::lround(std::sqrt(static_cast<double>(n)));
    for (long s = std::max(0l, r - 2); s <= r + 2; ++s)
        if (s * s == n) return true;
    return false;
}

// Closest real root of an irreducible primitive polynomial of degree 1 or 2.
std::pair<long double, std::vector<long>> brute_alg(unsigned long d, long L, long double x) {
    long double best = std::numeric_limits<long double>::infinity();
    std::vector<long> arg;
    for (const auto& v : brute_force_space(d, L)) {
        std::vector<long> w(v.begin() + static_cast<long>(std::find_if(v.begin(), v.end(), [](long c) { return c != 0; }) - v.begin()), v.end());
        long g = 0;
        for (long c : w) g = std::gcd(g, std::labs(c));
        if (g != 1 || w.size() < 2) continue;
        std::vector<long double> roots;
        if (w.size() == 2) roots.push_back(-static_cast<long double>(w[1]) / w[0]);
        if (w.size() == 3) {
            const long disc = w[1] * w[1] - 4 * w[0] * w[2];
            if (w[2] == 0 || disc < 0 || is_square(disc)) continue;
            const long double s = std::sqrt(static_cast<long double>(disc));
            roots.push_back((-w[1] + s) / (2 * w[0]));
            roots.push_back((-w[1] - s) / (2 * w[0]));
        }
        for (auto r : roots)
            if (std::fabs(r - x) < best) {
                best = std::fabs(r - x);
                arg = w;
            }
    }
    return {best, arg};
}

SearchSpace space(Target t, unsigned long d, unsigned long L, unsigned workers = 1) {
    SearchSpace s;
    s.target = t;
    s.d_max = d;
    s.L_max = L;
    s.workers = workers;
    return s;
}

}  // namespace

TEST(Count, ClosedFormMatchesEnumeration) {
    for (unsigned long d = 0; d <= 3; ++d)
        for (long L = 0; L <= 7; ++L) {
            const auto ref = brute_force_space(d, L).size();
            EXPECT_EQ(lattice_count(d + 1, L), ref) << d << " " << L;
            std::size_t n = 0;
            for_each_polynomial(d, L, [&](const IntPolynomial&) { ++n; });
            EXPECT_EQ(n, ref);
            EXPECT_EQ(space_size(space(Target::pi, d, L)), ref);
        }
}

TEST(Count, EnumerationOrderIsLexicographic) {
    std::vector<IntPolynomial> all;
    for_each_polynomial(2, 4, [&](const IntPolynomial& p) { all.push_back(p); });
    for (std::size_t i = 1; i < all.size(); ++i) EXPECT_TRUE(lex_less(all[i - 1], all[i]));
}

TEST(PolyValue, MatchesBruteForce) {
    for (Target t : {Target::pi, Target::log2, Target::e})
        for (unsigned long d = 1; d <= 2; ++d)
            for (long L : {3l, 6l, 8l}) {
                long double best = std::numeric_limits<long double>::infinity();
                std::vector<long> arg;
                for (const auto& v : brute_force_space(d, L)) {
                    const long double val = std::fabs(eval_ld(v, target_ld(t)));
                    if (val < best) {
                        best = val;
                        arg = v;
                    }
                }
                const auto r = enumerate_min_poly_value(space(t, d, static_cast<unsigned long>(L)));
                EXPECT_EQ(as_vector(r.best_poly, d), arg);
                EXPECT_NEAR(r.best_value.mid().get_d(), static_cast<double>(best), 1e-15);
                EXPECT_EQ(r.enumerated, lattice_count(d + 1, static_cast<unsigned long>(L)));
            }
}

TEST(AlgApprox, MatchesBruteForce) {
    for (Target t : {Target::pi, Target::log2, Target::e})
        for (unsigned long d = 1; d <= 2; ++d)
            for (long L : {3l, 6l, 8l}) {
                const auto [best, arg] = brute_alg(d, L, target_ld(t));
                const auto r = enumerate_min_alg_approx(space(t, d, static_cast<unsigned long>(L)));
                EXPECT_EQ(r.best_poly.leading_first().size(), arg.size());
                EXPECT_NEAR(r.best_value.mid().get_d(), static_cast<double>(best), 1e-15);
                ASSERT_TRUE(r.witness_root.has_value());
            }
}

TEST(Desk, DegreeOneReferenceNumbers) {
    const auto pi = enumerate_min_poly_value(space(Target::pi, 1, 10));
    EXPECT_EQ(pi.best_poly.to_string(), IntPolynomial::parse("1,-3").to_string());
    EXPECT_NEAR(pi.best_value.mid().get_d(), 0.141593, 1e-6);
    const auto l2 = enumerate_min_poly_value(space(Target::log2, 1, 10));
    EXPECT_EQ(l2.best_poly, IntPolynomial::parse("3,-2"));
    EXPECT_NEAR(l2.best_value.mid().get_d(), 0.0794415, 1e-6);
    const auto e = enumerate_min_poly_value(space(Target::e, 1, 10));
    EXPECT_NEAR(e.best_value.mid().get_d(), 0.281718, 1e-6);
}

TEST(Search, DeterministicAcrossWorkers) {
    for (Target t : {Target::pi, Target::e}) {
        const auto a = enumerate_min_poly_value(space(t, 3, 6, 1));
        const auto a8 = enumerate_min_alg_approx(space(t, 3, 6, 1));
        for (unsigned w : {4u, 8u}) {
            const auto b = enumerate_min_poly_value(space(t, 3, 6, w));
            EXPECT_EQ(a.best_poly, b.best_poly);
            EXPECT_EQ(a.best_value.lo(), b.best_value.lo());
            EXPECT_EQ(a.screened_survivors, b.screened_survivors);
            const auto b8 = enumerate_min_alg_approx(space(t, 3, 6, w));
            EXPECT_EQ(a8.best_poly, b8.best_poly);
        }
    }
}

TEST(Search, MinimumIsMonotone) {
    for (Target t : {Target::pi, Target::log2})
        for (Form f : {Form::polynomial, Form::algebraic}) {
            Rational prev = -1;
            for (unsigned long L = 2; L <= 9; ++L) {
                const auto r = f == Form::polynomial ? enumerate_min_poly_value(space(t, 2, L))
                                                     : enumerate_min_alg_approx(space(t, 2, L));
                if (prev >= 0) EXPECT_LE(r.best_value.hi(), prev);
                prev = r.best_value.hi();
            }
        }
}

TEST(AlgApprox, ReducibleCandidatesExcluded) {
    // x^2 - 4 has root 2 but is reducible; 2 is reached through x - 2 instead.
    const auto r = enumerate_min_alg_approx(space(Target::log2, 2, 5));
    EXPECT_NE(r.best_poly, IntPolynomial::parse("1,0,-4"));
    EXPECT_TRUE(is_irreducible(r.best_poly));
    EXPECT_EQ(r.best_poly.content(), 1);
}

TEST(Verify, PassesStatedBound) {
    const auto r = enumerate_min_poly_value(space(Target::pi, 2, 8));
    const auto c = verify_against_bound(r, {Target::pi, Form::polynomial, 2, 8});
    EXPECT_EQ(c.verdict, Verdict::pass);
    EXPECT_TRUE(c.margin.positive());
}

TEST(Verify, OverrideExercisesFailurePath) {
    const auto r = enumerate_min_poly_value(space(Target::e, 1, 5));
    const auto c = verify_against_bound(r, {Target::e, Form::polynomial, 1, 5}, {}, exact(0));
    EXPECT_EQ(c.verdict, Verdict::fail);
}

TEST(Verify, RejectsMismatchedQuery) {
    const auto r = enumerate_min_poly_value(space(Target::e, 1, 5));
    EXPECT_THROW(verify_against_bound(r, {Target::pi, Form::polynomial, 1, 5}), DomainError);
    EXPECT_THROW(verify_against_bound(r, {Target::e, Form::algebraic, 1, 5}), DomainError);
    EXPECT_THROW(verify_against_bound(r, {Target::e, Form::polynomial, 1, 3}), DomainError);
}

TEST(Search, CapAndDomain) {
    auto s = space(Target::pi, 6, 40);
    s.cap = 1000;
    EXPECT_THROW(enumerate_min_poly_value(s), SearchCapExceeded);
    EXPECT_THROW(enumerate_min_alg_approx(space(Target::pi, 0, 5)), DomainError);
}

TEST(Sweep, ResumesFromLog) {
    const auto path = std::filesystem::temp_directory_path() / "tmeasure_sweep_test.jsonl";
    std::filesystem::remove(path);
    std::vector<SweepCell> cells = {{Target::pi, Form::polynomial, 1, 3}, {Target::e, Form::algebraic, 2, 4}};
    EXPECT_EQ(run_sweep(cells, path.string(), SearchSpace{}), 2u);
    EXPECT_EQ(run_sweep(cells, path.string(), SearchSpace{}), 0u);
    cells.push_back({Target::log2, Form::polynomial, 2, 2});
    EXPECT_EQ(run_sweep(cells, path.string(), SearchSpace{}), 1u);
    std::ifstream in(path);
    std::size_t lines = 0;
    for (std::string line; std::getline(in, line);) ++lines;
    EXPECT_EQ(lines, 3u);
    EXPECT_EQ(cells[1].key(), "e/alg/d=2/L=4");
    std::filesystem::remove(path);
}
