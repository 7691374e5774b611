#include "tmeasure/heights.hpp"

#include <algorithm>
#include <bit>

namespace tmeasure {

namespace {

constexpr int kMaxIrreducibilityDegree = 20;

// True when [lo, hi] holds no integer.
bool excludes_integers(const CertifiedReal& x) {
    Integer c;
    mpz_cdiv_q(c.get_mpz_t(), x.lo().get_num_mpz_t(), x.lo().get_den_mpz_t());
    return c > x.hi();
}

Integer ceil_of(const Rational& q) {
    Integer c;
    mpz_cdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return c;
}

enum class SubsetOutcome { not_a_factor, factor, undecided };

SubsetOutcome test_subset(const IntPolynomial& p, const std::vector<RootEnclosure>& roots, unsigned mask) {
    // a0 * prod_{i in mask} (x - r_i), ascending coefficients.
    std::vector<CertifiedComplex> poly{CertifiedComplex(CertifiedReal(p.leading()))};
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (!(mask & (1U << i))) continue;
        std::vector<CertifiedComplex> next(poly.size() + 1, CertifiedComplex(CertifiedReal(0L)));
        for (std::size_t k = 0; k < poly.size(); ++k) {
            next[k + 1] = next[k + 1] + poly[k];
            next[k] = next[k] - poly[k] * roots[i].root;
        }
        poly = std::move(next);
    }
    bool narrow = true;
    for (const auto& c : poly) {
        if (!c.im().contains_zero() || excludes_integers(c.re())) return SubsetOutcome::not_a_factor;
        if (c.re().width() >= 1) narrow = false;
    }
    if (!narrow) return SubsetOutcome::undecided;
    std::vector<Integer> candidate;
    for (const auto& c : poly) candidate.push_back(ceil_of(c.re().lo()));
    IntPolynomial g = IntPolynomial(std::move(candidate)).primitive_part();
    if (g.degree() == std::popcount(mask) && divides(g, p)) return SubsetOutcome::factor;
    return SubsetOutcome::not_a_factor;
}

}  // namespace

bool is_irreducible(const IntPolynomial& input, const PrecisionPolicy& policy) {
    IntPolynomial p = input.normalized();
    if (p.degree() < 1) throw DomainError("irreducibility is defined for degree >= 1");
    if (p.degree() == 1) return true;
    if (p.coeff(0) == 0) return false;
    if (gcd(p, p.derivative()).degree() > 0) return false;
    if (p.degree() > kMaxIrreducibilityDegree) throw DomainError("irreducibility test limited to degree <= 20");
    const unsigned n = static_cast<unsigned>(p.degree());
    Rational width = dyadic(-20);
    for (int attempt = 0; attempt < 8; ++attempt) {
        auto roots = isolate_squarefree(p, width, policy);
        bool decided = true;
        for (unsigned mask = 1; mask < (1U << n) - 1; ++mask) {
            unsigned k = std::popcount(mask);
            // Complements describe the cofactor; visit each split once.
            if (2 * k > n || (2 * k == n && !(mask & 1U))) continue;
            switch (test_subset(p, roots, mask)) {
                case SubsetOutcome::factor: return false;
                case SubsetOutcome::undecided: decided = false; break;
                case SubsetOutcome::not_a_factor: break;
            }
        }
        if (decided) return true;
        width *= dyadic(-32);
    }
    throw InconclusivePrecision("irreducibility of " + p.to_string());
}

std::vector<RootEnclosure> sorted_roots(const IntPolynomial& p, const Rational& width, const PrecisionPolicy& policy) {
    auto roots = root_enclosures(p, width, policy);
    std::sort(roots.begin(), roots.end(), [](const RootEnclosure& a, const RootEnclosure& b) {
        if (a.root.re().lo() != b.root.re().lo()) return a.root.re().lo() < b.root.re().lo();
        return a.root.im().lo() < b.root.im().lo();
    });
    return roots;
}

AlgebraicNumber AlgebraicNumber::from_minpoly(const IntPolynomial& minpoly, std::size_t root_index,
                                              const PrecisionPolicy& policy) {
    if (minpoly.degree() < 1) throw DomainError("minimal polynomial must have degree >= 1");
    if (minpoly.content() != 1) throw DomainError("minimal polynomial must be primitive: " + minpoly.to_string());
    IntPolynomial p = minpoly.leading() < 0 ? -minpoly : minpoly;
    if (!is_irreducible(p, policy)) throw DomainError("polynomial is reducible over Q: " + p.to_string());
    auto roots = sorted_roots(p, dyadic(-30), policy);
    if (root_index >= roots.size()) throw DomainError("root index out of range");
    return {std::move(p), roots[root_index]};
}

AlgebraicNumber AlgebraicNumber::rational(const Rational& q) {
    IntPolynomial p(std::vector<Integer>{-q.get_num(), q.get_den()});
    return {std::move(p), RootEnclosure{CertifiedComplex(CertifiedReal(q), CertifiedReal(0L)), 1}};
}

Integer length(const IntPolynomial& p) { return p.length(); }

CertifiedReal log_mahler_over_degree(const IntPolynomial& p, long bits, const PrecisionPolicy& policy) {
    if (p.degree() < 1) throw DomainError("height needs degree >= 1");
    if (p.degree() == 1) {
        // log M(a x + b) = log max(|a|, |b|).
        Integer m = std::max<Integer>(abs(p.coeff(0)), abs(p.coeff(1)));
        return log(CertifiedReal(m), bits);
    }
    Rational width = dyadic(-bits);
    CertifiedReal sum = log(CertifiedReal(Integer(abs(p.leading()))), bits);
    for (const auto& r : root_enclosures(p, width, policy)) {
        CertifiedReal modulus = abs(r.root, bits);
        sum = sum + CertifiedReal(static_cast<long>(r.multiplicity)) * log_plus(modulus, bits);
    }
    return sum / CertifiedReal(static_cast<long>(p.degree()));
}

CertifiedReal height_of_minpoly(const IntPolynomial& p, const Rational& width, const PrecisionPolicy& policy) {
    return refine_to_width([&](long bits) { return log_mahler_over_degree(p, bits, policy); }, width, policy,
                           "height of " + p.to_string());
}

CertifiedReal height(const AlgebraicNumber& alpha, const Rational& width, const PrecisionPolicy& policy) {
    return height_of_minpoly(alpha.minpoly(), width, policy);
}

std::string_view verdict_name(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

HeightLengthCheck check_height_length(const IntPolynomial& p, const PrecisionPolicy& policy) {
    if (p.degree() < 1) throw DomainError("height/length check needs degree >= 1");
    if (!is_irreducible(p, policy)) throw DomainError("reducible input: " + p.to_string());
    IntPolynomial q = p.primitive_part();
    const long d = q.degree();
    const Integer len = q.length();
    try {
        Comparison c = compare([&](long bits) { return log_mahler_over_degree(q, bits, policy); }, Relation::le,
                               [&](long bits) { return log(CertifiedReal(len), bits) / CertifiedReal(d); }, policy);
        return {c.holds ? Verdict::pass : Verdict::fail, c.lhs, c.rhs};
    } catch (const InconclusivePrecision&) {
        return {Verdict::inconclusive, CertifiedReal(), CertifiedReal()};
    }
}

LiouvilleContext::LiouvilleContext(unsigned field_degree, bool is_real_field)
    : field_degree_(field_degree), is_real_(is_real_field) {
    if (field_degree == 0) throw DomainError("field degree must be positive");
}

Rational LiouvilleContext::effective_degree() const {
    Rational d = is_real_ ? Rational(field_degree_) : Rational(field_degree_, 2);
    d.canonicalize();
    return d;
}

CertifiedReal liouville_bound(const std::vector<unsigned>& degree_bounds, const Integer& length_f,
                              const std::vector<CertifiedReal>& heights, const LiouvilleContext& ctx, long bits) {
    if (length_f < 1) throw DomainError("L(f) must be at least 1");
    if (degree_bounds.size() != heights.size()) throw DomainError("one height per variable required");
    CertifiedReal dprime(ctx.effective_degree());
    CertifiedReal sum(0L);
    for (std::size_t i = 0; i < heights.size(); ++i) sum = sum + CertifiedReal(static_cast<long>(degree_bounds[i])) * heights[i];
    return -(dprime - CertifiedReal(1L)) * log(CertifiedReal(length_f), bits) - dprime * sum;
}

CertifiedComplex refine(const AlgebraicNumber& alpha, const Rational& width, const PrecisionPolicy& policy) {
    if (alpha.is_rational()) {
        const auto& p = alpha.minpoly();
        Rational q(-p.coeff(0), p.coeff(1));
        q.canonicalize();
        return CertifiedComplex(CertifiedReal(q));
    }
    const auto roots = sorted_roots(alpha.minpoly(), width, policy);
    const CertifiedComplex* hit = nullptr;
    for (const auto& r : roots) {
        if (!r.root.overlaps(alpha.which_root().root)) continue;
        if (hit) throw InconclusivePrecision("root not singled out after refinement");
        hit = &r.root;
    }
    if (!hit) throw InconclusivePrecision("root lost after refinement");
    return *hit;
}

LiouvilleCheck liouville_check(const IntPolynomial& f, const AlgebraicNumber& alpha, const PrecisionPolicy& policy) {
    if (f.is_zero()) throw DomainError("f must be nonzero");
    if (f.degree() >= alpha.minpoly().degree() && divides(alpha.minpoly(), f))
        throw DomainError("f vanishes at alpha");
    const auto roots = sorted_roots(alpha.minpoly(), dyadic(-30), policy);
    bool real = alpha.is_rational();
    for (std::size_t i = 0; !real && i < roots.size(); ++i)
        if (roots[i].root.overlaps(alpha.which_root().root)) real = realness(roots, i) == Realness::real;
    LiouvilleCheck out;
    if (alpha.is_rational()) {
        // Q is real of degree 1: the bound reads |f(p/q)| max(|p|, q)^N >= 1, decided exactly.
        const auto& p = alpha.minpoly();
        Rational q(-p.coeff(0), p.coeff(1));
        q.canonicalize();
        Integer hmax = std::max<Integer>(abs(q.get_num()), q.get_den());
        Rational lhs = abs(f.eval(q));
        for (int k = 0; k < f.degree(); ++k) lhs *= hmax;
        out.verdict = lhs >= 1 ? Verdict::pass : Verdict::fail;
        out.log_value = log(CertifiedReal(abs(f.eval(q))), 64);
        out.bound = -(CertifiedReal(Integer(std::max(f.degree(), 0))) * log(CertifiedReal(hmax), 64));
        return out;
    }
    const LiouvilleContext ctx(alpha.degree(), real);
    const CertifiedReal h = height(alpha, dyadic(-60), policy);
    RealFn bound = [&](long bits) {
        return liouville_bound({static_cast<unsigned>(std::max(f.degree(), 0))}, f.length(), {h}, ctx, bits);
    };
    RealFn value = [&](long bits) {
        const CertifiedComplex z = refine(alpha, dyadic(-bits), policy);
        return log(abs(f.eval(z), bits), bits);
    };
    try {
        const Comparison c = compare(bound, Relation::le, value, policy);
        out.bound = c.lhs;
        out.log_value = c.rhs;
        out.verdict = c.holds ? Verdict::pass : Verdict::fail;
    } catch (const InconclusivePrecision&) {
        out.verdict = Verdict::inconclusive;
    }
    return out;
}

}  // namespace tmeasure
