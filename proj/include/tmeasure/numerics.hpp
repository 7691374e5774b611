#pragma once

// Certified interval arithmetic over exact rationals.
//
// A CertifiedReal is a closed interval [lo, hi] with rational endpoints. Each
// value carries a working precision in bits; 0 means "exact", and exactness is
// preserved by +, -, *, / on exact operands. As soon as an inexact operand is
// involved the endpoints are rounded outward to that many significant bits, so
// the result always encloses the exact value. Transcendental functions are
// evaluated through MPFR with directed rounding.

#include <gmpxx.h>
#include <mpfr.h>

#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace tmeasure {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when a comparison or width target cannot be decided below the
/// configured precision ceiling.
class InconclusivePrecision : public std::runtime_error {
public:
    explicit InconclusivePrecision(const std::string& what)
        : std::runtime_error("inconclusive-precision: " + what) {}
};

/// Raised on invalid input (precondition violations).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Process-wide ceiling on working precision (bits). Defaults to 32768.
long default_max_bits();
void set_default_max_bits(long bits);

struct PrecisionPolicy {
    long start_bits = 64;
    long max_bits = default_max_bits();
};

// Outward rounding of a rational to `bits` significant bits (identity for bits <= 0).
Rational round_down(const Rational& q, long bits);
Rational round_up(const Rational& q, long bits);

/// 2^k for any integer k.
Rational dyadic(long k);

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

class CertifiedReal {
public:
    CertifiedReal() = default;
    CertifiedReal(long v) : lo_(v), hi_(v) {}  // NOLINT(google-explicit-constructor)
    CertifiedReal(const Integer& v) : lo_(v), hi_(v) {}  // NOLINT
    CertifiedReal(const Rational& v) : lo_(v), hi_(v) {}  // NOLINT
    CertifiedReal(Rational lo, Rational hi, long bits);

    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    long bits() const { return bits_; }
    bool is_exact() const { return bits_ == 0; }
    bool is_point() const { return lo_ == hi_; }

    Rational width() const { return hi_ - lo_; }
    Rational mid() const { return (lo_ + hi_) / 2; }

    bool contains(const Rational& v) const { return lo_ <= v && v <= hi_; }
    bool contains_zero() const { return lo_ <= 0 && hi_ >= 0; }
    bool overlaps(const CertifiedReal& o) const { return !(hi_ < o.lo_ || o.hi_ < lo_); }
    bool positive() const { return lo_ > 0; }
    bool negative() const { return hi_ < 0; }

    /// Same value, rounded outward to at most `bits` bits (used to promote exact values).
    CertifiedReal with_bits(long bits) const;

    CertifiedReal operator-() const;
    friend CertifiedReal operator+(const CertifiedReal& a, const CertifiedReal& b);
    friend CertifiedReal operator-(const CertifiedReal& a, const CertifiedReal& b);
    friend CertifiedReal operator*(const CertifiedReal& a, const CertifiedReal& b);
    friend CertifiedReal operator/(const CertifiedReal& a, const CertifiedReal& b);
    CertifiedReal& operator+=(const CertifiedReal& o) { return *this = *this + o; }
    CertifiedReal& operator-=(const CertifiedReal& o) { return *this = *this - o; }
    CertifiedReal& operator*=(const CertifiedReal& o) { return *this = *this * o; }
    CertifiedReal& operator/=(const CertifiedReal& o) { return *this = *this / o; }

private:
    static CertifiedReal make(Rational lo, Rational hi, long bits);

    Rational lo_ = 0;
    Rational hi_ = 0;
    long bits_ = 0;
};

CertifiedReal hull(const CertifiedReal& a, const CertifiedReal& b);
CertifiedReal abs(const CertifiedReal& x);
CertifiedReal square(const CertifiedReal& x);
CertifiedReal pow(const CertifiedReal& x, unsigned long n);
CertifiedReal max(const CertifiedReal& a, const CertifiedReal& b);
CertifiedReal min(const CertifiedReal& a, const CertifiedReal& b);

// Transcendental functions evaluated at max(bits, x.bits()) bits.
CertifiedReal exp(const CertifiedReal& x, long bits);
CertifiedReal log(const CertifiedReal& x, long bits);
CertifiedReal sqrt(const CertifiedReal& x, long bits);
CertifiedReal sin(const CertifiedReal& x, long bits);
CertifiedReal cos(const CertifiedReal& x, long bits);
/// log max(1, x); continuous, so defined for any x >= 0 interval.
CertifiedReal log_plus(const CertifiedReal& x, long bits);

CertifiedReal const_pi(long bits);
CertifiedReal const_e(long bits);
CertifiedReal const_log2(long bits);

/// floor(x) when every point of x has the same floor.
std::optional<Integer> decided_floor(const CertifiedReal& x);

class CertifiedComplex {
public:
    CertifiedComplex() = default;
    CertifiedComplex(CertifiedReal re) : re_(std::move(re)) {}  // NOLINT
    CertifiedComplex(CertifiedReal re, CertifiedReal im) : re_(std::move(re)), im_(std::move(im)) {}

    static CertifiedComplex i() { return {CertifiedReal(0L), CertifiedReal(1L)}; }

    const CertifiedReal& re() const { return re_; }
    const CertifiedReal& im() const { return im_; }
    bool is_real() const { return im_.is_point() && im_.lo() == 0; }
    bool contains_zero() const { return re_.contains_zero() && im_.contains_zero(); }
    bool overlaps(const CertifiedComplex& o) const { return re_.overlaps(o.re_) && im_.overlaps(o.im_); }

    CertifiedComplex conj() const { return {re_, -im_}; }
    CertifiedComplex operator-() const { return {-re_, -im_}; }
    friend CertifiedComplex operator+(const CertifiedComplex& a, const CertifiedComplex& b);
    friend CertifiedComplex operator-(const CertifiedComplex& a, const CertifiedComplex& b);
    friend CertifiedComplex operator*(const CertifiedComplex& a, const CertifiedComplex& b);
    friend CertifiedComplex operator/(const CertifiedComplex& a, const CertifiedComplex& b);
    CertifiedComplex& operator+=(const CertifiedComplex& o) { return *this = *this + o; }
    CertifiedComplex& operator*=(const CertifiedComplex& o) { return *this = *this * o; }

private:
    CertifiedReal re_;
    CertifiedReal im_;
};

CertifiedReal norm(const CertifiedComplex& z);  // |z|^2
CertifiedReal abs(const CertifiedComplex& z, long bits);
CertifiedComplex exp(const CertifiedComplex& z, long bits);
CertifiedComplex pow(const CertifiedComplex& z, unsigned long n);

/// A real or complex quantity that can be re-evaluated at any working precision.
using RealFn = std::function<CertifiedReal(long bits)>;
using ComplexFn = std::function<CertifiedComplex(long bits)>;

RealFn exact(const Rational& v);
ComplexFn exact_complex(const Rational& re, const Rational& im = 0);

/// Calls f(bits) with doubling precision until it yields a value; f signals
/// "not yet" by returning nullopt or throwing InconclusivePrecision.
template <class F>
auto escalate(F&& f, const PrecisionPolicy& policy, const std::string& what)
    -> typename std::invoke_result_t<F, long>::value_type {
    for (long bits = policy.start_bits;; bits *= 2) {
        if (bits > policy.max_bits) bits = policy.max_bits;
        try {
            if (auto r = f(bits)) return std::move(*r);
        } catch (const InconclusivePrecision&) {
            if (bits >= policy.max_bits) throw;
        }
        if (bits >= policy.max_bits) throw InconclusivePrecision(what);
    }
}

/// Evaluates f until the enclosure is at most `width` wide.
CertifiedReal refine_to_width(const RealFn& f, const Rational& width, const PrecisionPolicy& policy = {},
                              const std::string& what = "refine_to_width");

enum class Relation { le, lt };

/// Certified comparison lhs (<= | <) rhs with precision escalation. Throws
/// InconclusivePrecision when undecided at the ceiling.
struct Comparison {
    bool holds;
    CertifiedReal lhs;
    CertifiedReal rhs;
    long bits;
};
Comparison compare(const RealFn& lhs, Relation rel, const RealFn& rhs, const PrecisionPolicy& policy = {});

/// Named constants at a target width.
enum class Constant { pi, e, log2 };
std::optional<Constant> parse_constant(std::string_view name);
std::string_view constant_name(Constant c);
CertifiedReal constant_value(Constant c, long bits);
CertifiedReal const_eval(Constant c, const Rational& width, const PrecisionPolicy& policy = {});
CertifiedReal const_eval(std::string_view name, const Rational& width, const PrecisionPolicy& policy = {});

/// Decimal rendering of an endpoint, rounded down (lo) or up (hi).
std::string to_decimal(const Rational& q, int digits, bool round_up);

/// Outward-rounded double interval used for cheap screening passes.
struct FastInterval {
    double lo = 0;
    double hi = 0;

    static FastInterval from(const CertifiedReal& x);
    static FastInterval point(double v) { return {v, v}; }
    FastInterval operator+(const FastInterval& o) const;
    FastInterval operator*(const FastInterval& o) const;
    FastInterval abs() const;
};

}  // namespace tmeasure
