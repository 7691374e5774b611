#include "tmeasure/roots.hpp"

#include <algorithm>
#include <cmath>

namespace tmeasure {

namespace {

// Copyable MPFR float at a fixed precision, round-to-nearest.
class BigFloat {
public:
    explicit BigFloat(long prec, double v = 0.0) {
        mpfr_init2(v_, prec);
        mpfr_set_d(v_, v, MPFR_RNDN);
    }
    BigFloat(long prec, const Rational& q) {
        mpfr_init2(v_, prec);
        mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
    }
    BigFloat(const BigFloat& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    long prec() const { return static_cast<long>(mpfr_get_prec(v_)); }
    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }
    bool finite() const { return mpfr_number_p(v_) != 0; }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    Rational to_rational() const {
        Rational r;
        mpfr_get_q(r.get_mpq_t(), v_);
        return r;
    }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
        BigFloat r(a.prec());
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
        BigFloat r(a.prec());
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
        BigFloat r(a.prec());
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
        BigFloat r(a.prec());
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }

private:
    mpfr_t v_;
};

struct BigComplex {
    BigFloat re;
    BigFloat im;

    explicit BigComplex(long prec, double r = 0.0, double i = 0.0) : re(prec, r), im(prec, i) {}
    BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

    friend BigComplex operator+(const BigComplex& a, const BigComplex& b) { return {a.re + b.re, a.im + b.im}; }
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b) { return {a.re - b.re, a.im - b.im}; }
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend BigComplex operator/(const BigComplex& a, const BigComplex& b) {
        BigFloat n = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    double magnitude() const { return std::hypot(re.to_double(), im.to_double()); }
    BigComplex with_prec(long prec) const {
        BigComplex r(prec);
        mpfr_set(r.re.get(), re.get(), MPFR_RNDN);
        mpfr_set(r.im.get(), im.get(), MPFR_RNDN);
        return r;
    }
};

// Value and derivative by Horner.
void horner(const std::vector<BigFloat>& coeffs, const BigComplex& z, BigComplex& value, BigComplex& deriv) {
    long prec = z.re.prec();
    value = BigComplex(prec);
    deriv = BigComplex(prec);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        deriv = deriv * z + value;
        value = value * z + BigComplex(*it, BigFloat(prec));
    }
}

std::vector<BigComplex> initial_guesses(const IntPolynomial& p, long prec, double offset) {
    int n = p.degree();
    // Geometric mean of root moduli when the constant term is nonzero.
    double lead = std::fabs(p.leading().get_d());
    double radius = 1.0;
    double c0 = std::fabs(p.coeff(0).get_d());
    if (c0 > 0) radius = std::pow(c0 / lead, 1.0 / n);
    radius = std::clamp(radius, 1e-6, 1e6);
    std::vector<BigComplex> z;
    const double two_pi = 6.283185307179586;
    for (int k = 0; k < n; ++k) {
        double angle = two_pi * k / n + offset;
        z.emplace_back(prec, radius * std::cos(angle), radius * std::sin(angle));
    }
    return z;
}

// Aberth-Ehrlich iteration; returns true on convergence.
bool aberth(const IntPolynomial& p, std::vector<BigComplex>& z, long prec) {
    std::vector<BigFloat> coeffs;
    for (const auto& c : p.ascending()) coeffs.emplace_back(prec, Rational(c));
    const std::size_t n = z.size();
    const double tol = std::ldexp(1.0, -static_cast<int>(std::min<long>(prec - 4, 1000)));
    const int max_iter = 60 + static_cast<int>(prec / 4);
    BigComplex value(prec), deriv(prec);
    for (int iter = 0; iter < max_iter; ++iter) {
        double worst = 0.0;
        bool tiny_everywhere = true;
        for (std::size_t i = 0; i < n; ++i) {
            horner(coeffs, z[i], value, deriv);
            if (!value.re.finite() || !deriv.re.finite()) return false;
            if (value.magnitude() == 0.0 && mpfr_zero_p(value.re.get()) && mpfr_zero_p(value.im.get())) continue;
            BigComplex ratio = value / deriv;
            BigComplex sum(prec);
            for (std::size_t j = 0; j < n; ++j)
                if (j != i) sum = sum + BigComplex(prec, 1.0) / (z[i] - z[j]);
            BigComplex step = ratio / (BigComplex(prec, 1.0) - ratio * sum);
            if (!step.re.finite() || !step.im.finite()) return false;
            z[i] = z[i] - step;
            double rel = step.magnitude() / std::max(1.0, z[i].magnitude());
            worst = std::max(worst, rel);
            if (rel > tol) tiny_everywhere = false;
        }
        if (tiny_everywhere || worst == 0.0) return true;
    }
    return false;
}

CertifiedComplex exact_point(const BigComplex& z) {
    return {CertifiedReal(z.re.to_rational()), CertifiedReal(z.im.to_rational())};
}

// Inclusion disks D(c_i, n |W_i|) with Weierstrass corrections W_i; when the
// boxes around them are pairwise disjoint each holds exactly one root.
std::optional<std::vector<RootEnclosure>> certify(const IntPolynomial& p, const std::vector<BigComplex>& z, long bits,
                                                  const Rational& width) {
    const std::size_t n = z.size();
    std::vector<CertifiedComplex> centers;
    for (const auto& zi : z) centers.push_back(exact_point(zi));
    CertifiedReal lead = CertifiedReal(p.leading());
    std::vector<RootEnclosure> boxes;
    for (std::size_t i = 0; i < n; ++i) {
        // Centers are exact dyadic rationals, so this evaluation is exact.
        CertifiedComplex value = p.eval(centers[i]);
        if (value.contains_zero()) {
            boxes.push_back({centers[i], 1});
            continue;
        }
        CertifiedComplex denom(lead);
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            CertifiedComplex diff = centers[i] - centers[j];
            if (diff.contains_zero()) return std::nullopt;
            denom = denom * diff;
        }
        CertifiedComplex w;
        try {
            w = value / denom;
        } catch (const InconclusivePrecision&) {
            return std::nullopt;
        }
        Rational r = round_up(sqrt(norm(w), bits).hi() * static_cast<long>(n), bits);
        if (2 * r > width) return std::nullopt;
        const auto& c = centers[i];
        boxes.push_back({CertifiedComplex(CertifiedReal(c.re().lo() - r, c.re().hi() + r, 0),
                                          CertifiedReal(c.im().lo() - r, c.im().hi() + r, 0)),
                         1});
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!disjoint(boxes[i], boxes[j])) return std::nullopt;
    return boxes;
}

}  // namespace

Rational RootEnclosure::diameter() const { return std::max(root.re().width(), root.im().width()); }

bool disjoint(const RootEnclosure& a, const RootEnclosure& b) { return !a.root.overlaps(b.root); }

std::vector<RootEnclosure> isolate_squarefree(const IntPolynomial& p, const Rational& width, const PrecisionPolicy& policy) {
    if (p.degree() < 1) throw DomainError("root isolation needs degree >= 1");
    if (width <= 0) throw DomainError("root enclosure width must be positive");
    if (p.degree() == 1) {
        Rational root(-p.coeff(0), p.coeff(1));
        root.canonicalize();
        return {RootEnclosure{CertifiedComplex(CertifiedReal(root), CertifiedReal(0L)), 1}};
    }
    long bits = std::max<long>(policy.start_bits, 64);
    std::vector<BigComplex> z = initial_guesses(p, bits, 0.4);
    int restarts = 0;
    for (;;) {
        std::vector<BigComplex> zp;
        for (const auto& zi : z) zp.push_back(zi.with_prec(bits));
        bool converged = aberth(p, zp, bits);
        if (converged) {
            if (auto boxes = certify(p, zp, bits, width)) return *boxes;
            z = zp;
        } else if (restarts < 8) {
            ++restarts;
            z = initial_guesses(p, bits, 0.4 + 0.7 * restarts);
            continue;
        }
        if (bits >= policy.max_bits)
            throw InconclusivePrecision("root isolation of " + p.to_string() + " at " + std::to_string(bits) + " bits");
        bits = std::min(bits * 2, policy.max_bits);
    }
}

std::vector<RootEnclosure> root_enclosures(const IntPolynomial& p, const Rational& width, const PrecisionPolicy& policy) {
    if (p.is_zero()) throw DomainError("root enclosures of the zero polynomial");
    if (p.degree() < 1) throw DomainError("root enclosures need degree >= 1");
    auto factors = squarefree_decomposition(p);
    Rational w = width;
    for (int attempt = 0; attempt < 12; ++attempt) {
        std::vector<RootEnclosure> all;
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (factors[i].degree() < 1) continue;
            for (auto& r : isolate_squarefree(factors[i], w, policy)) {
                r.multiplicity = static_cast<unsigned>(i + 1);
                all.push_back(std::move(r));
            }
        }
        bool ok = true;
        for (std::size_t i = 0; i < all.size() && ok; ++i)
            for (std::size_t j = i + 1; j < all.size() && ok; ++j) ok = disjoint(all[i], all[j]);
        if (ok) return all;
        w *= dyadic(-32);
    }
    throw InconclusivePrecision("could not separate roots of distinct squarefree factors of " + p.to_string());
}

Realness realness(const std::vector<RootEnclosure>& roots, std::size_t i) {
    CertifiedComplex mirror = roots[i].root.conj();
    if (!mirror.overlaps(roots[i].root)) return Realness::nonreal;
    for (std::size_t j = 0; j < roots.size(); ++j)
        if (j != i && mirror.overlaps(roots[j].root)) return Realness::undecided;
    return Realness::real;
}

}  // namespace tmeasure
