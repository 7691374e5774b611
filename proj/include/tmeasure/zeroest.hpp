#pragma once

// Polynomials in X, Y, 1/Y, the derivation delta = d/dX + beta*Y*d/dY, and
// an exact verifier for the multiplicity estimate
//
//   SM > (D0 + M)(D1 + 1)  ==>  no nonzero P with deg_X P <= D0, deg_Y P <= D1
//   satisfies delta^sigma P(xi_mu, eta_mu) = 0 for all mu <= M, sigma < S.

#include "tmeasure/linalg.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace tmeasure {

class LaurentBiPoly {
public:
    using Key = std::pair<long, long>;  // (i, j) for X^i Y^j

    LaurentBiPoly() = default;
    static LaurentBiPoly monomial(const Rational& c, long i, long j);
    static LaurentBiPoly constant(const Rational& c) { return monomial(c, 0, 0); }

    const std::map<Key, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(long i, long j) const;
    /// -1 for the zero polynomial.
    long deg_x() const;
    long max_j() const;
    long min_j() const;
    bool has_integer_coefficients() const;

    LaurentBiPoly d_dx() const;
    /// Y * d/dY.
    LaurentBiPoly y_d_dy() const;

    Rational eval(const Rational& x, const Rational& y) const;
    CertifiedComplex eval(const CertifiedComplex& x, const CertifiedComplex& y) const;

    std::string to_string() const;

    friend LaurentBiPoly operator+(const LaurentBiPoly& a, const LaurentBiPoly& b);
    friend LaurentBiPoly operator-(const LaurentBiPoly& a, const LaurentBiPoly& b);
    friend LaurentBiPoly operator*(const LaurentBiPoly& a, const LaurentBiPoly& b);
    friend LaurentBiPoly operator*(const Rational& c, const LaurentBiPoly& p);
    bool operator==(const LaurentBiPoly&) const = default;

private:
    void add(const Key& k, const Rational& c);
    std::map<Key, Rational> terms_;
};

/// delta^order P with delta = d/dX + beta Y d/dY.
LaurentBiPoly delta_apply(const LaurentBiPoly& p, const Rational& beta, unsigned long order);

struct ZeroEstimateInstance {
    unsigned long D0 = 0;
    unsigned long D1 = 0;
    unsigned long S = 1;
    unsigned long M = 1;
    Rational beta = 1;
    std::vector<std::pair<Rational, Rational>> points;  // (xi, eta)

    /// Throws DomainError on a zero beta, a zero eta, repeated xi or a point count != M.
    void validate() const;
    bool size_condition() const;

    /// Text form: lines "D0 n", "D1 n", "S n", "M n", "beta p/q", "point xi eta";
    /// '#' starts a comment. M defaults to the number of points.
    static ZeroEstimateInstance parse(const std::string& text);
};

/// Rows (mu, sigma) in that order, columns X^i Y^j with i major.
RatMatrix constraint_matrix(const ZeroEstimateInstance& inst);

struct Lemma2Report {
    bool size_condition = false;
    std::size_t rows = 0;
    std::size_t columns = 0;
    std::size_t rank = 0;
    std::size_t kernel_dim = 0;
    bool counterexample = false;
    std::vector<Rational> kernel_witness;  // coefficient vector, same column order
    std::string verdict() const { return counterexample ? "COUNTEREXAMPLE" : "consistent-with-lemma"; }
};

Lemma2Report lemma2_check(const ZeroEstimateInstance& inst);

}  // namespace tmeasure
