#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace tmeasure;
using oracle::dec;

TEST(ParseRational, Forms) {
    EXPECT_EQ(parse_rational("3/4"), Rational(3, 4));
    EXPECT_EQ(parse_rational("-2.5"), Rational(-5, 2));
    EXPECT_EQ(parse_rational("1e-3"), Rational(1, 1000));
    EXPECT_EQ(parse_rational("1.5e2"), Rational(150));
    EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
    EXPECT_THROW(parse_rational("abc"), DomainError);
    EXPECT_THROW(parse_rational("1/0"), DomainError);
}

TEST(CertifiedReal, ExactArithmeticStaysExact) {
    CertifiedReal a(Rational(1, 3)), b(Rational(2, 7));
    CertifiedReal s = a * b + a / b - CertifiedReal(1L);
    EXPECT_TRUE(s.is_exact());
    EXPECT_EQ(s.lo(), Rational(2, 21) + Rational(7, 6) - 1);
    EXPECT_TRUE(s.is_point());
}

TEST(CertifiedReal, OutwardRoundingEncloses) {
    CertifiedReal third = CertifiedReal(Rational(1, 3)).with_bits(64);
    EXPECT_TRUE(third.contains(Rational(1, 3)));
    EXPECT_FALSE(third.is_point());
    CertifiedReal x = third * third * CertifiedReal(9L);
    EXPECT_TRUE(x.contains(1));
    EXPECT_LT(x.width(), dyadic(-55));
}

TEST(CertifiedReal, DivisionByIntervalContainingZeroThrows) {
    CertifiedReal z(Rational(-1, 10), Rational(1, 10), 64);
    EXPECT_THROW(CertifiedReal(1L) / z, InconclusivePrecision);
}

TEST(Transcendentals, MatchReferenceDigits) {
    const Rational w = dyadic(-190);
    EXPECT_TRUE(oracle::encloses(const_pi(200), dec(oracle::kPi), w));
    EXPECT_TRUE(oracle::encloses(const_e(200), dec(oracle::kE), w));
    EXPECT_TRUE(oracle::encloses(const_log2(200), dec(oracle::kLog2), w));
    EXPECT_TRUE(oracle::encloses(exp(CertifiedReal(1L), 200), dec(oracle::kE), w));
    EXPECT_TRUE(oracle::encloses(log(CertifiedReal(5L), 200), dec(oracle::kLog5), w));
    EXPECT_TRUE(oracle::encloses(sqrt(CertifiedReal(2L), 200), dec(oracle::kSqrt2), w));
}

TEST(Transcendentals, ExactSpecialValues) {
    EXPECT_TRUE(log(CertifiedReal(1L), 64).is_exact());
    EXPECT_EQ(log(CertifiedReal(1L), 64).lo(), 0);
    EXPECT_TRUE(exp(CertifiedReal(0L), 64).is_exact());
    EXPECT_EQ(log_plus(CertifiedReal(Rational(1, 2)), 64).hi(), 0);
    EXPECT_THROW(log(CertifiedReal(Rational(-1)), 64), DomainError);
}

TEST(Transcendentals, SinCosPi) {
    const CertifiedReal pi = const_pi(128);
    EXPECT_TRUE(sin(pi, 128).contains(0));
    EXPECT_TRUE(cos(pi, 128).contains(-1));
    EXPECT_LT(cos(pi, 128).width(), dyadic(-120));
}

TEST(CertifiedComplex, ExpOfPiI) {
    const CertifiedComplex z(CertifiedReal(0L), const_pi(128));
    const CertifiedComplex w = exp(z, 128);
    EXPECT_TRUE(w.re().contains(-1));
    EXPECT_TRUE(w.im().contains(0));
}

TEST(CertifiedComplex, DivisionAndModulus) {
    const CertifiedComplex a(CertifiedReal(3L), CertifiedReal(4L));
    EXPECT_EQ(norm(a).lo(), 25);
    EXPECT_TRUE(abs(a, 64).contains(5));
    const CertifiedComplex q = a / CertifiedComplex(CertifiedReal(0L), CertifiedReal(1L));
    EXPECT_EQ(q.re().lo(), 4);
    EXPECT_EQ(q.im().lo(), -3);
}

TEST(Compare, EscalatesUntilDecided) {
    const RealFn pi = [](long bits) { return const_pi(bits); };
    // 355/113 - pi is about 2.7e-7; the first attempt decides.
    EXPECT_TRUE(compare(pi, Relation::lt, exact(Rational(355, 113))).holds);
    // A gap near 1e-30 needs more than 64 bits.
    const Rational close = dec(oracle::kPi) + dec("1e-30");
    const Comparison c = compare(pi, Relation::lt, exact(close));
    EXPECT_TRUE(c.holds);
    EXPECT_GT(c.bits, 64);
    EXPECT_FALSE(compare(exact(4), Relation::le, pi).holds);
}

TEST(Compare, InconclusiveAtCeiling) {
    const RealFn pi = [](long bits) { return const_pi(bits); };
    PrecisionPolicy tight;
    tight.max_bits = 128;
    EXPECT_THROW(compare(pi, Relation::le, pi, tight), InconclusivePrecision);
}

TEST(Compare, ExactEqualityDecidesNonStrict) {
    EXPECT_TRUE(compare(exact(2), Relation::le, exact(2)).holds);
    EXPECT_FALSE(compare(exact(2), Relation::lt, exact(2)).holds);
}

TEST(DecidedFloor, StraddlingIsUndecided) {
    EXPECT_EQ(*decided_floor(CertifiedReal(Rational(5, 2), Rational(11, 4), 64)), 2);
    EXPECT_EQ(*decided_floor(CertifiedReal(Rational(-1, 2))), -1);
    EXPECT_FALSE(decided_floor(CertifiedReal(Rational(19, 10), Rational(21, 10), 64)).has_value());
}

TEST(RefineToWidth, MeetsWidth) {
    const CertifiedReal x = refine_to_width([](long bits) { return const_e(bits); }, dec("1e-40"));
    EXPECT_LE(x.width(), dec("1e-40"));
    EXPECT_TRUE(oracle::encloses(x, dec(oracle::kE), dec("1e-40")));
}

TEST(ConstEval, ByName) {
    EXPECT_TRUE(oracle::encloses(const_eval("log2", dec("1e-30")), dec(oracle::kLog2), dec("1e-30")));
    EXPECT_THROW(const_eval("tau", dec("1e-3")), DomainError);
}

TEST(FastInterval, EnclosesExact) {
    const FastInterval pi = FastInterval::from(const_pi(64));
    FastInterval v = pi * pi + FastInterval::point(-10);  // pi^2 - 10 < 0
    EXPECT_LT(v.hi, 0);
    EXPECT_LE(v.lo, -0.130395);
    EXPECT_GE(v.hi, -0.130397);
    EXPECT_GE(v.abs().lo, 0);
}

TEST(ToDecimal, RoundsOutward) {
    EXPECT_EQ(to_decimal(Rational(1, 3), 5, false), "3.3333e-01");
    EXPECT_EQ(to_decimal(Rational(1, 3), 5, true), "3.3334e-01");
}
