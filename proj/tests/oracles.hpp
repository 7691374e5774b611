#pragma once

// Independent reference computations for the unit tests. Nothing here calls
// into the library beyond its number types.

#include "tmeasure/numerics.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace oracle {

using tmeasure::CertifiedReal;
using tmeasure::Integer;
using tmeasure::Rational;

// 60-digit reference values.
inline const char* const kPi = "3.14159265358979323846264338327950288419716939937510582097494";
inline const char* const kE = "2.71828182845904523536028747135266249775724709369995957496697";
inline const char* const kLog2 = "0.693147180559945309417232121458176568075500134360255254120680";
inline const char* const kLog3 = "1.09861228866810969139524523692252570464749055782274945173469";
inline const char* const kLog5 = "1.60943791243410037460075933322618763952560135426851772191264";
inline const char* const kSqrt2 = "1.41421356237309504880168872420969807856967187537694807317668";

inline Rational dec(const std::string& s) { return tmeasure::parse_rational(s); }

/// x encloses the reference value (known to 1e-58) and is at most `width` wide.
inline bool encloses(const CertifiedReal& x, const Rational& ref, const Rational& width = Rational(1, 1000000)) {
    const Rational slack = dec("1e-58");
    return x.lo() <= ref + slack && ref - slack <= x.hi() && x.width() <= width;
}

/// |x - ref| <= tol for every point of x.
inline bool within(const CertifiedReal& x, const Rational& ref, const Rational& tol) {
    return x.lo() >= ref - tol && x.hi() <= ref + tol;
}

using Matrix = std::vector<std::vector<Rational>>;

/// Plain Gaussian elimination with rational pivots.
inline Rational det(Matrix m) {
    const std::size_t n = m.size();
    Rational d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            d = -d;
        }
        d *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m[r][c] == 0) continue;
            const Rational f = m[r][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return d;
}

inline std::size_t rank(Matrix m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            const Rational f = m[i][c] / m[r][c];
            for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
        }
        ++r;
    }
    return r;
}

/// Ascending-coefficient product of two polynomials.
inline std::vector<Rational> mul(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    std::vector<Rational> out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

inline Integer binom(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

}  // namespace oracle
