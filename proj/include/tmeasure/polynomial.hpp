#pragma once

#include "tmeasure/numerics.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tmeasure {

class RatPolynomial;

/// Dense univariate polynomial with integer coefficients.
///
/// Storage is by ascending power (coeff(k) multiplies x^k). The external text
/// format lists coefficients leading-first, "a0,a1,...,ad", so "1,0,-2" is
/// x^2 - 2.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Integer> ascending);

    static IntPolynomial from_leading_first(std::span<const Integer> coeffs);
    static IntPolynomial from_leading_first(std::initializer_list<long> coeffs);
    static IntPolynomial parse(std::string_view text);
    static IntPolynomial monomial(const Integer& c, unsigned degree);

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const Integer& coeff(unsigned k) const;
    const Integer& leading() const;
    const std::vector<Integer>& ascending() const { return coeffs_; }
    std::vector<Integer> leading_first() const;
    std::string to_string() const;

    Integer length() const;
    Integer content() const;
    IntPolynomial primitive_part() const;
    /// Primitive part with positive leading coefficient.
    IntPolynomial normalized() const;
    IntPolynomial derivative() const;
    /// x^d P(1/x).
    IntPolynomial reversed() const;

    Rational eval(const Rational& x) const;
    CertifiedReal eval(const CertifiedReal& x) const;
    CertifiedComplex eval(const CertifiedComplex& x) const;
    FastInterval eval(const FastInterval& x) const;

    RatPolynomial to_rational() const;

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    IntPolynomial operator-() const;
    bool operator==(const IntPolynomial&) const = default;

private:
    void trim();
    std::vector<Integer> coeffs_;
};

/// Dense univariate polynomial with rational coefficients (ascending powers).
class RatPolynomial {
public:
    RatPolynomial() = default;
    explicit RatPolynomial(std::vector<Rational> ascending);
    static RatPolynomial constant(const Rational& c);
    /// x + a
    static RatPolynomial linear_root(const Rational& a);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const Rational& coeff(unsigned k) const;
    const Rational& leading() const;
    const std::vector<Rational>& ascending() const { return coeffs_; }
    /// Index of the lowest nonzero coefficient (order of vanishing at 0); -1 for zero.
    int order_at_zero() const;

    RatPolynomial derivative() const;
    Rational eval(const Rational& x) const;
    CertifiedComplex eval(const CertifiedComplex& x) const;
    RatPolynomial monic() const;
    /// Scaled to a primitive integer polynomial (sign kept).
    IntPolynomial to_integer() const;

    friend RatPolynomial operator+(const RatPolynomial& a, const RatPolynomial& b);
    friend RatPolynomial operator-(const RatPolynomial& a, const RatPolynomial& b);
    friend RatPolynomial operator*(const RatPolynomial& a, const RatPolynomial& b);
    friend RatPolynomial operator*(const Rational& c, const RatPolynomial& p);
    bool operator==(const RatPolynomial&) const = default;

    /// Euclidean division; throws DomainError on a zero divisor.
    static void divmod(const RatPolynomial& a, const RatPolynomial& b, RatPolynomial& q, RatPolynomial& r);
    static RatPolynomial gcd(RatPolynomial a, RatPolynomial b);

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Exact divisibility test over the rationals.
bool divides(const IntPolynomial& divisor, const IntPolynomial& p);
/// Primitive gcd with positive leading coefficient.
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

/// Squarefree decomposition p = c * prod f_i^i (Yun); entry i-1 is f_i,
/// primitive with positive leading coefficient (possibly constant 1).
std::vector<IntPolynomial> squarefree_decomposition(const IntPolynomial& p);
IntPolynomial squarefree_part(const IntPolynomial& p);

}  // namespace tmeasure
