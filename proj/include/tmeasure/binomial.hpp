#pragma once

// Binomial polynomials
//
//   Delta(z, N, H) = (z(z+1)...(z+H-1)/H!)^q * z(z+1)...(z+r-1)/r!,
//   N = qH + r, 1 <= r <= H,  Delta(z, 0, H) = 1,
//
// and the denominators d_sigma = nu(H)^sigma, nu(k) = lcm(1..k), that clear
// every derivative of order <= sigma at integer points.

#include "tmeasure/polynomial.hpp"

#include <vector>

namespace tmeasure {

struct DeltaParams {
    unsigned long N = 0;
    unsigned long H = 1;
    unsigned long q = 0;
    unsigned long r = 0;

    /// Splits N = qH + r with 1 <= r <= H (q = r = 0 when N = 0).
    static DeltaParams make(unsigned long N, unsigned long H);
};

struct DenominatorPower {
    unsigned long H;
    unsigned long sigma;
    Integer value;
};

/// lcm(1, ..., k); k >= 1.
Integer nu(unsigned long k);

DenominatorPower d_sigma(unsigned long H, unsigned long sigma);

/// Exact coefficients of Delta(z, N, H); cached and safe for concurrent use.
const RatPolynomial& delta_polynomial(const DeltaParams& p);

/// u-th derivative of Delta(z, N, H) as a polynomial (u > N gives zero).
const RatPolynomial& delta_derivative_polynomial(const DeltaParams& p, unsigned long u);

/// Delta(x, N, H) from the product formula.
Rational delta_eval(const Rational& x, const DeltaParams& p);

/// [Delta^{(0)}(x), ..., Delta^{(sigma)}(x)].
std::vector<Rational> delta_derivatives(const Rational& x, const DeltaParams& p, unsigned long sigma);

struct Lemma4Report {
    bool integrality = false;
    bool denominator_bound = false;  // log d_sigma < (107/103) sigma H
    bool derivative_sum_bound = false;  // sum_u C(sigma,u) |Delta^{(u)}(x)| < sigma^sigma e^{N+H} (1+|x|/H)^N
    std::vector<Integer> cleared;  // d_sigma * Delta^{(u)}(x) when integral
    Rational derivative_sum;
    CertifiedReal derivative_sum_limit;
    CertifiedReal log_d_sigma;
    CertifiedReal denominator_limit;
};

/// Checks the integrality and the two size estimates for integer x.
Lemma4Report lemma4_check(long x, const DeltaParams& p, unsigned long sigma, const PrecisionPolicy& policy = {});

}  // namespace tmeasure
