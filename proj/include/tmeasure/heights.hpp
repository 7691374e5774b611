#pragma once

#include "tmeasure/roots.hpp"

#include <vector>

namespace tmeasure {

/// Exact factorization-based irreducibility test over the rationals.
///
/// Candidate factors are products of subsets of certified root enclosures,
/// scaled by the leading coefficient; any true factor is an integer
/// polynomial, so once the enclosures are narrower than one unit each
/// candidate is either excluded or confirmed by exact division.
bool is_irreducible(const IntPolynomial& p, const PrecisionPolicy& policy = {});

/// An algebraic number: its minimal polynomial (primitive, irreducible,
/// positive leading coefficient) plus an enclosure singling out one root.
class AlgebraicNumber {
public:
    /// Validates irreducibility; `root_index` indexes the certified root list
    /// of `minpoly` (ordered by real part, then imaginary part).
    static AlgebraicNumber from_minpoly(const IntPolynomial& minpoly, std::size_t root_index = 0,
                                        const PrecisionPolicy& policy = {});
    static AlgebraicNumber rational(const Rational& q);

    const IntPolynomial& minpoly() const { return minpoly_; }
    const RootEnclosure& which_root() const { return root_; }
    unsigned degree() const { return static_cast<unsigned>(minpoly_.degree()); }
    bool is_rational() const { return minpoly_.degree() == 1; }

private:
    AlgebraicNumber(IntPolynomial p, RootEnclosure r) : minpoly_(std::move(p)), root_(std::move(r)) {}
    IntPolynomial minpoly_;
    RootEnclosure root_;
};

/// Certified roots sorted by (real lo, imaginary lo).
std::vector<RootEnclosure> sorted_roots(const IntPolynomial& p, const Rational& width, const PrecisionPolicy& policy = {});

/// L(P) = sum |a_i|.
Integer length(const IntPolynomial& p);

/// (1/d) log M(P) for P of degree d >= 1, at working precision `bits`.
CertifiedReal log_mahler_over_degree(const IntPolynomial& p, long bits, const PrecisionPolicy& policy = {});

/// Absolute logarithmic Weil height, enclosure of width <= `width`.
CertifiedReal height(const AlgebraicNumber& alpha, const Rational& width, const PrecisionPolicy& policy = {});

/// Height of the roots of an irreducible polynomial (any root; the value is
/// shared by all conjugates). Irreducibility is the caller's responsibility.
CertifiedReal height_of_minpoly(const IntPolynomial& p, const Rational& width, const PrecisionPolicy& policy = {});

enum class Verdict { pass, fail, inconclusive };
std::string_view verdict_name(Verdict v);

struct HeightLengthCheck {
    Verdict verdict;
    CertifiedReal height;
    CertifiedReal bound;  // d^{-1} log L(P)
};

/// Checks h(alpha) <= d^{-1} log L(alpha) for an irreducible P.
HeightLengthCheck check_height_length(const IntPolynomial& p, const PrecisionPolicy& policy = {});

/// Field data for Liouville's inequality: D' = D for a real field, D/2 otherwise.
class LiouvilleContext {
public:
    LiouvilleContext(unsigned field_degree, bool is_real_field);
    unsigned field_degree() const { return field_degree_; }
    bool is_real_field() const { return is_real_; }
    Rational effective_degree() const;

private:
    unsigned field_degree_;
    bool is_real_;
};

/// Lower bound for log |f(alpha_1..alpha_n)|:
///   -(D'-1) log L(f) - D' sum N_i h(alpha_i).
/// The caller guarantees f does not vanish at the point.
CertifiedReal liouville_bound(const std::vector<unsigned>& degree_bounds, const Integer& length_f,
                              const std::vector<CertifiedReal>& heights, const LiouvilleContext& ctx, long bits);

/// Enclosure of alpha with box side at most `width`.
CertifiedComplex refine(const AlgebraicNumber& alpha, const Rational& width, const PrecisionPolicy& policy = {});

struct LiouvilleCheck {
    Verdict verdict = Verdict::inconclusive;
    CertifiedReal log_value;  // log |f(alpha)|
    CertifiedReal bound;
};

/// log |f(alpha)| against the bound for one variable, field Q(alpha).
/// Throws DomainError when f(alpha) = 0.
LiouvilleCheck liouville_check(const IntPolynomial& f, const AlgebraicNumber& alpha, const PrecisionPolicy& policy = {});

}  // namespace tmeasure
