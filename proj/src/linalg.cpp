#include "tmeasure/linalg.hpp"

namespace tmeasure {

namespace {

using IntMatrix = std::vector<std::vector<Integer>>;

// Each row multiplied by the lcm of its denominators; returns the product of the multipliers.
Integer clear_denominators(const RatMatrix& m, IntMatrix& out) {
    Integer scale = 1;
    out.clear();
    for (const auto& row : m) {
        Integer l = 1;
        for (const auto& v : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
        std::vector<Integer> r;
        r.reserve(row.size());
        for (const auto& v : row) r.push_back(Integer(v.get_num() * (l / v.get_den())));
        out.push_back(std::move(r));
        scale *= l;
    }
    return scale;
}

// In-place Bareiss elimination with row and column pivoting. Returns rank;
// `sign` tracks row swaps and `last` the final pivot (the determinant for a
// full-rank square input).
std::size_t bareiss(IntMatrix& a, int& sign, Integer& last) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    Integer prev = 1;
    sign = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        if (p != r) {
            std::swap(a[p], a[r]);
            sign = -sign;
        }
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                Integer v = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = v;
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    last = prev;
    return r;
}

}  // namespace

std::size_t rank(const RatMatrix& m) {
    IntMatrix a;
    clear_denominators(m, a);
    int sign;
    Integer last;
    return bareiss(a, sign, last);
}

Rational determinant(const RatMatrix& m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw DomainError("determinant needs a square matrix");
    if (n == 0) return 1;
    IntMatrix a;
    Integer scale = clear_denominators(m, a);
    int sign;
    Integer last;
    if (bareiss(a, sign, last) < n) return 0;
    Rational det(Integer(sign * last), scale);
    det.canonicalize();
    return det;
}

std::vector<std::vector<Rational>> kernel_basis(const RatMatrix& m, std::size_t columns) {
    RatMatrix a = m;
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < columns && r < a.size(); ++c) {
        std::size_t p = r;
        while (p < a.size() && a[p][c] == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[r]);
        const Rational inv = 1 / a[r][c];
        for (auto& v : a[r]) v *= inv;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == r || a[i][c] == 0) continue;
            const Rational f = a[i][c];
            for (std::size_t j = 0; j < columns; ++j) a[i][j] -= f * a[r][j];
        }
        pivot_cols.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(columns, false);
    for (auto c : pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < columns; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(columns, Rational(0));
        v[free] = 1;
        for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -a[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<std::size_t> greedy_independent_rows(const RatMatrix& m) {
    // Incremental echelon basis: each stored row has a leading 1 at pivot[k].
    std::vector<std::vector<Rational>> basis;
    std::vector<std::size_t> pivots;
    std::vector<std::size_t> chosen;
    for (std::size_t i = 0; i < m.size(); ++i) {
        std::vector<Rational> v = m[i];
        for (std::size_t k = 0; k < basis.size(); ++k) {
            const Rational f = v[pivots[k]];
            if (f == 0) continue;
            for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * basis[k][j];
        }
        std::size_t p = 0;
        while (p < v.size() && v[p] == 0) ++p;
        if (p == v.size()) continue;
        const Rational inv = 1 / v[p];
        for (auto& x : v) x *= inv;
        // Keep earlier basis rows reduced at the new pivot.
        for (auto& b : basis) {
            const Rational f = b[p];
            if (f == 0) continue;
            for (std::size_t j = 0; j < v.size(); ++j) b[j] -= f * v[j];
        }
        basis.push_back(std::move(v));
        pivots.push_back(p);
        chosen.push_back(i);
    }
    return chosen;
}

RatPolynomial determinant(const std::vector<std::vector<RatPolynomial>>& m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw DomainError("determinant needs a square matrix");
    if (n == 0) return RatPolynomial::constant(1);
    auto a = m;
    RatPolynomial prev = RatPolynomial::constant(1);
    bool negate = false;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p][k].is_zero()) ++p;
        if (p == n) return {};
        if (p != k) {
            std::swap(a[p], a[k]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                RatPolynomial v = a[k][k] * a[i][j] - a[i][k] * a[k][j];
                RatPolynomial q, r;
                RatPolynomial::divmod(v, prev, q, r);
                if (!r.is_zero()) throw std::logic_error("Bareiss division left a remainder");
                a[i][j] = std::move(q);
            }
            a[i][k] = {};
        }
        prev = a[k][k];
    }
    return negate ? RatPolynomial::constant(-1) * prev : prev;
}

CertifiedComplex determinant(const std::vector<std::vector<CertifiedComplex>>& m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw DomainError("determinant needs a square matrix");
    auto a = m;
    CertifiedComplex det(CertifiedReal(1L));
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t best = n;
        Rational best_lo = 0;
        for (std::size_t i = k; i < n; ++i) {
            Rational lo = norm(a[i][k]).lo();
            if (lo > best_lo) {
                best_lo = lo;
                best = i;
            }
        }
        if (best == n) throw InconclusivePrecision("no certified nonzero pivot in interval determinant");
        if (best != k) {
            std::swap(a[best], a[k]);
            det = -det;
        }
        det *= a[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            const CertifiedComplex f = a[i][k] / a[k][k];
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] = a[i][j] - f * a[k][j];
        }
    }
    return det;
}

}  // namespace tmeasure
