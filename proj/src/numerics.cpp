#include "tmeasure/numerics.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>

namespace tmeasure {

namespace {

std::atomic<long> g_max_bits{32768};

constexpr long kMinBits = 16;

// RAII holder for an mpfr_t.
class Mp {
public:
    explicit Mp(long prec) { mpfr_init2(v_, std::max<long>(prec, MPFR_PREC_MIN)); }
    Mp(const Mp&) = delete;
    Mp& operator=(const Mp&) = delete;
    ~Mp() { mpfr_clear(v_); }

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

    void set(const Rational& q, mpfr_rnd_t rnd) { mpfr_set_q(v_, q.get_mpq_t(), rnd); }

    Rational to_rational() const {
        if (!mpfr_number_p(v_)) throw DomainError("non-finite value in certified evaluation");
        Rational r;
        mpfr_get_q(r.get_mpq_t(), v_);
        return r;
    }

private:
    mpfr_t v_;
};

long working_bits(long bits, const CertifiedReal& x) { return std::max({bits, x.bits(), kMinBits}); }

// Applies a nondecreasing mpfr function endpoint-wise with directed rounding.
template <class Fn>
CertifiedReal monotone(const CertifiedReal& x, long bits, Fn fn) {
    long b = working_bits(bits, x);
    Mp lo(b), hi(b);
    lo.set(x.lo(), MPFR_RNDD);
    fn(lo.get(), lo.get(), MPFR_RNDD);
    hi.set(x.hi(), MPFR_RNDU);
    fn(hi.get(), hi.get(), MPFR_RNDU);
    return {lo.to_rational(), hi.to_rational(), b};
}

// sin/cos via midpoint-radius: both are 1-Lipschitz.
template <class Fn>
CertifiedReal lipschitz_trig(const CertifiedReal& x, long bits, Fn fn) {
    long b = working_bits(bits, x);
    Rational m = x.mid();
    Rational radius = x.width() / 2;
    Mp center(b);
    center.set(m, MPFR_RNDN);
    Rational shift = abs(m - center.to_rational());
    Mp lo(b), hi(b);
    fn(lo.get(), center.get(), MPFR_RNDD);
    fn(hi.get(), center.get(), MPFR_RNDU);
    Rational l = lo.to_rational() - radius - shift;
    Rational h = hi.to_rational() + radius + shift;
    if (l < -1) l = -1;
    if (h > 1) h = 1;
    return {l, h, b};
}

}  // namespace

long default_max_bits() { return g_max_bits.load(); }
void set_default_max_bits(long bits) {
    if (bits < kMinBits) throw DomainError("maximum precision must be at least 16 bits");
    g_max_bits.store(bits);
}

Rational round_down(const Rational& q, long bits) {
    if (bits <= 0 || q == 0) return q;
    Mp t(bits);
    t.set(q, MPFR_RNDD);
    return t.to_rational();
}

Rational round_up(const Rational& q, long bits) {
    if (bits <= 0 || q == 0) return q;
    Mp t(bits);
    t.set(q, MPFR_RNDU);
    return t.to_rational();
}

Rational dyadic(long k) {
    Integer p = 1;
    p <<= static_cast<unsigned long>(std::labs(k));
    return k >= 0 ? Rational(p) : Rational(Integer(1), p);
}

Rational parse_rational(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw DomainError("empty number");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Rational num = parse_rational(s.substr(0, slash));
        Rational den = parse_rational(s.substr(slash + 1));
        if (den == 0) throw DomainError("zero denominator in '" + s + "'");
        Rational r = num / den;
        r.canonicalize();
        return r;
    }
    std::size_t pos = 0;
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') negative = s[pos++] == '-';
    std::string digits;
    long scale = 0;
    bool seen_point = false;
    for (; pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '.'); ++pos) {
        if (s[pos] == '.') {
            if (seen_point) throw DomainError("malformed number '" + s + "'");
            seen_point = true;
        } else {
            digits.push_back(s[pos]);
            if (seen_point) --scale;
        }
    }
    if (digits.empty()) throw DomainError("malformed number '" + s + "'");
    if (pos < s.size()) {
        if (s[pos] != 'e' && s[pos] != 'E') throw DomainError("malformed number '" + s + "'");
        std::string exponent = s.substr(pos + 1);
        if (exponent.empty()) throw DomainError("malformed exponent in '" + s + "'");
        try {
            std::size_t used = 0;
            scale += std::stol(exponent, &used);
            if (used != exponent.size()) throw DomainError("malformed exponent in '" + s + "'");
        } catch (const std::logic_error&) {
            throw DomainError("malformed exponent in '" + s + "'");
        }
    }
    Integer mantissa(digits, 10);
    Integer ten_pow;
    mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(scale)));
    Rational r = scale >= 0 ? Rational(mantissa * ten_pow) : Rational(mantissa, ten_pow);
    r.canonicalize();
    return negative ? Rational(-r) : r;
}

std::string to_string(const Rational& q) { return q.get_str(); }

CertifiedReal::CertifiedReal(Rational lo, Rational hi, long bits) {
    if (lo > hi) throw DomainError("interval with lo > hi");
    *this = make(std::move(lo), std::move(hi), bits);
}

CertifiedReal CertifiedReal::make(Rational lo, Rational hi, long bits) {
    CertifiedReal r;
    r.bits_ = std::max(0L, bits);
    if (r.bits_ > 0) {
        r.lo_ = round_down(lo, r.bits_);
        r.hi_ = round_up(hi, r.bits_);
    } else {
        r.lo_ = std::move(lo);
        r.hi_ = std::move(hi);
    }
    return r;
}

CertifiedReal CertifiedReal::with_bits(long bits) const {
    if (bits <= 0) return *this;
    return make(lo_, hi_, std::max(bits, bits_));
}

CertifiedReal CertifiedReal::operator-() const {
    CertifiedReal r;
    r.lo_ = -hi_;
    r.hi_ = -lo_;
    r.bits_ = bits_;
    return r;
}

CertifiedReal operator+(const CertifiedReal& a, const CertifiedReal& b) {
    return CertifiedReal::make(a.lo_ + b.lo_, a.hi_ + b.hi_, std::max(a.bits_, b.bits_));
}

CertifiedReal operator-(const CertifiedReal& a, const CertifiedReal& b) {
    return CertifiedReal::make(a.lo_ - b.hi_, a.hi_ - b.lo_, std::max(a.bits_, b.bits_));
}

CertifiedReal operator*(const CertifiedReal& a, const CertifiedReal& b) {
    long bits = std::max(a.bits_, b.bits_);
    if (a.is_point() && b.is_point()) {
        Rational p = a.lo_ * b.lo_;
        return CertifiedReal::make(p, p, bits);
    }
    Rational p1 = a.lo_ * b.lo_, p2 = a.lo_ * b.hi_, p3 = a.hi_ * b.lo_, p4 = a.hi_ * b.hi_;
    Rational lo = std::min({p1, p2, p3, p4});
    Rational hi = std::max({p1, p2, p3, p4});
    return CertifiedReal::make(std::move(lo), std::move(hi), bits);
}

CertifiedReal operator/(const CertifiedReal& a, const CertifiedReal& b) {
    if (b.contains_zero()) {
        if (b.is_point()) throw DomainError("division by zero");
        throw InconclusivePrecision("divisor interval contains zero");
    }
    long bits = std::max(a.bits_, b.bits_);
    CertifiedReal inv = CertifiedReal::make(Rational(1) / b.hi_, Rational(1) / b.lo_, bits);
    return a * inv;
}

CertifiedReal hull(const CertifiedReal& a, const CertifiedReal& b) {
    return {std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi()), std::max(a.bits(), b.bits())};
}

CertifiedReal abs(const CertifiedReal& x) {
    if (x.lo() >= 0) return x;
    if (x.hi() <= 0) return -x;
    return {Rational(0), std::max(Rational(-x.lo()), x.hi()), x.bits()};
}

CertifiedReal square(const CertifiedReal& x) {
    CertifiedReal a = abs(x);
    return {a.lo() * a.lo(), a.hi() * a.hi(), a.bits()};
}

CertifiedReal pow(const CertifiedReal& x, unsigned long n) {
    if (n == 0) return CertifiedReal(1L);
    if (n == 1) return x;
    CertifiedReal half = pow(x, n / 2);
    CertifiedReal sq = square(half);
    return n % 2 == 0 ? sq : sq * x;
}

CertifiedReal max(const CertifiedReal& a, const CertifiedReal& b) {
    return {std::max(a.lo(), b.lo()), std::max(a.hi(), b.hi()), std::max(a.bits(), b.bits())};
}

CertifiedReal min(const CertifiedReal& a, const CertifiedReal& b) {
    return {std::min(a.lo(), b.lo()), std::min(a.hi(), b.hi()), std::max(a.bits(), b.bits())};
}

CertifiedReal exp(const CertifiedReal& x, long bits) {
    if (x.is_point() && x.lo() == 0) return CertifiedReal(1L).with_bits(x.bits());
    return monotone(x, bits, mpfr_exp);
}

CertifiedReal log(const CertifiedReal& x, long bits) {
    if (x.lo() <= 0) {
        if (x.hi() <= 0) throw DomainError("log of a non-positive number");
        throw InconclusivePrecision("log argument interval reaches zero");
    }
    if (x.is_point() && x.lo() == 1) return CertifiedReal(0L).with_bits(x.bits());
    return monotone(x, bits, mpfr_log);
}

CertifiedReal sqrt(const CertifiedReal& x, long bits) {
    if (x.hi() < 0) throw DomainError("sqrt of a negative number");
    CertifiedReal clamped = x.lo() < 0 ? CertifiedReal(Rational(0), x.hi(), x.bits()) : x;
    return monotone(clamped, bits, mpfr_sqrt);
}

CertifiedReal sin(const CertifiedReal& x, long bits) { return lipschitz_trig(x, bits, mpfr_sin); }
CertifiedReal cos(const CertifiedReal& x, long bits) { return lipschitz_trig(x, bits, mpfr_cos); }

CertifiedReal log_plus(const CertifiedReal& x, long bits) {
    if (x.hi() <= 1) return CertifiedReal(0L).with_bits(x.bits());
    long b = working_bits(bits, x);
    Rational lo = 0;
    if (x.lo() > 1) {
        Mp t(b);
        t.set(x.lo(), MPFR_RNDD);
        mpfr_log(t.get(), t.get(), MPFR_RNDD);
        lo = t.to_rational();
    }
    Mp t(b);
    t.set(x.hi(), MPFR_RNDU);
    mpfr_log(t.get(), t.get(), MPFR_RNDU);
    return {lo, t.to_rational(), b};
}

CertifiedReal const_pi(long bits) {
    long b = std::max(bits, kMinBits);
    Mp lo(b), hi(b);
    mpfr_const_pi(lo.get(), MPFR_RNDD);
    mpfr_const_pi(hi.get(), MPFR_RNDU);
    return {lo.to_rational(), hi.to_rational(), b};
}

CertifiedReal const_e(long bits) { return exp(CertifiedReal(1L), bits); }

CertifiedReal const_log2(long bits) {
    long b = std::max(bits, kMinBits);
    Mp lo(b), hi(b);
    mpfr_const_log2(lo.get(), MPFR_RNDD);
    mpfr_const_log2(hi.get(), MPFR_RNDU);
    return {lo.to_rational(), hi.to_rational(), b};
}

std::optional<Integer> decided_floor(const CertifiedReal& x) {
    Integer flo, fhi;
    mpz_fdiv_q(flo.get_mpz_t(), x.lo().get_num_mpz_t(), x.lo().get_den_mpz_t());
    mpz_fdiv_q(fhi.get_mpz_t(), x.hi().get_num_mpz_t(), x.hi().get_den_mpz_t());
    if (flo != fhi) return std::nullopt;
    return flo;
}

CertifiedComplex operator+(const CertifiedComplex& a, const CertifiedComplex& b) {
    return {a.re_ + b.re_, a.im_ + b.im_};
}

CertifiedComplex operator-(const CertifiedComplex& a, const CertifiedComplex& b) {
    return {a.re_ - b.re_, a.im_ - b.im_};
}

CertifiedComplex operator*(const CertifiedComplex& a, const CertifiedComplex& b) {
    if (a.is_real() && b.is_real()) return {a.re_ * b.re_, a.im_};
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
}

CertifiedComplex operator/(const CertifiedComplex& a, const CertifiedComplex& b) {
    CertifiedReal n = norm(b);
    CertifiedComplex num = a * b.conj();
    return {num.re_ / n, num.im_ / n};
}

CertifiedReal norm(const CertifiedComplex& z) { return square(z.re()) + square(z.im()); }

CertifiedReal abs(const CertifiedComplex& z, long bits) {
    if (z.is_real()) return abs(z.re());
    return sqrt(norm(z), bits);
}

CertifiedComplex exp(const CertifiedComplex& z, long bits) {
    CertifiedReal modulus = exp(z.re(), bits);
    if (z.is_real()) return {modulus, z.im()};
    return {modulus * cos(z.im(), bits), modulus * sin(z.im(), bits)};
}

CertifiedComplex pow(const CertifiedComplex& z, unsigned long n) {
    if (z.is_real()) return {pow(z.re(), n), z.im()};
    CertifiedComplex result(CertifiedReal(1L));
    CertifiedComplex base = z;
    while (n > 0) {
        if (n & 1UL) result = result * base;
        n >>= 1;
        if (n > 0) base = base * base;
    }
    return result;
}

RealFn exact(const Rational& v) {
    return [v](long) { return CertifiedReal(v); };
}

ComplexFn exact_complex(const Rational& re, const Rational& im) {
    return [re, im](long) { return CertifiedComplex(CertifiedReal(re), CertifiedReal(im)); };
}

CertifiedReal refine_to_width(const RealFn& f, const Rational& width, const PrecisionPolicy& policy,
                              const std::string& what) {
    if (width <= 0) throw DomainError("target width must be positive");
    return escalate(
        [&](long bits) -> std::optional<CertifiedReal> {
            CertifiedReal v = f(bits);
            if (v.width() <= width) return v;
            return std::nullopt;
        },
        policy, what);
}

Comparison compare(const RealFn& lhs, Relation rel, const RealFn& rhs, const PrecisionPolicy& policy) {
    return escalate(
        [&](long bits) -> std::optional<Comparison> {
            CertifiedReal l = lhs(bits);
            CertifiedReal r = rhs(bits);
            if (rel == Relation::le) {
                if (l.hi() <= r.lo()) return Comparison{true, l, r, bits};
                if (l.lo() > r.hi()) return Comparison{false, l, r, bits};
            } else {
                if (l.hi() < r.lo()) return Comparison{true, l, r, bits};
                if (l.lo() >= r.hi()) return Comparison{false, l, r, bits};
            }
            return std::nullopt;
        },
        policy, "comparison undecided");
}

std::optional<Constant> parse_constant(std::string_view name) {
    if (name == "pi") return Constant::pi;
    if (name == "e") return Constant::e;
    if (name == "log2") return Constant::log2;
    return std::nullopt;
}

std::string_view constant_name(Constant c) {
    switch (c) {
        case Constant::pi: return "pi";
        case Constant::e: return "e";
        case Constant::log2: return "log2";
    }
    return "?";
}

CertifiedReal constant_value(Constant c, long bits) {
    switch (c) {
        case Constant::pi: return const_pi(bits);
        case Constant::e: return const_e(bits);
        case Constant::log2: return const_log2(bits);
    }
    throw DomainError("unknown constant");
}

CertifiedReal const_eval(Constant c, const Rational& width, const PrecisionPolicy& policy) {
    return refine_to_width([c](long bits) { return constant_value(c, bits); }, width, policy,
                           "constant " + std::string(constant_name(c)));
}

CertifiedReal const_eval(std::string_view name, const Rational& width, const PrecisionPolicy& policy) {
    auto c = parse_constant(name);
    if (!c) throw DomainError("unknown constant '" + std::string(name) + "'");
    return const_eval(*c, width, policy);
}

std::string to_decimal(const Rational& q, int digits, bool round_up) {
    digits = std::max(digits, 1);
    long bits = static_cast<long>(digits * 3.33) + 64;
    Mp t(bits);
    mpfr_rnd_t rnd = round_up ? MPFR_RNDU : MPFR_RNDD;
    t.set(q, rnd);
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*R*e", digits - 1, rnd, t.get());
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
}

FastInterval FastInterval::from(const CertifiedReal& x) {
    Mp lo(53), hi(53);
    lo.set(x.lo(), MPFR_RNDD);
    hi.set(x.hi(), MPFR_RNDU);
    return {mpfr_get_d(lo.get(), MPFR_RNDD), mpfr_get_d(hi.get(), MPFR_RNDU)};
}

FastInterval FastInterval::operator+(const FastInterval& o) const {
    constexpr double inf = std::numeric_limits<double>::infinity();
    return {std::nextafter(lo + o.lo, -inf), std::nextafter(hi + o.hi, inf)};
}

FastInterval FastInterval::operator*(const FastInterval& o) const {
    constexpr double inf = std::numeric_limits<double>::infinity();
    double p1 = lo * o.lo, p2 = lo * o.hi, p3 = hi * o.lo, p4 = hi * o.hi;
    return {std::nextafter(std::min({p1, p2, p3, p4}), -inf), std::nextafter(std::max({p1, p2, p3, p4}), inf)};
}

FastInterval FastInterval::abs() const {
    if (lo >= 0) return *this;
    if (hi <= 0) return {-hi, -lo};
    return {0.0, std::max(-lo, hi)};
}

}  // namespace tmeasure
