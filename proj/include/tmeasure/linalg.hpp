#pragma once

// Exact linear algebra over Q and Q[z].

#include "tmeasure/polynomial.hpp"

#include <vector>

namespace tmeasure {

using RatMatrix = std::vector<std::vector<Rational>>;

/// Rank by fraction-free (Bareiss) elimination after clearing row denominators.
std::size_t rank(const RatMatrix& m);

/// Determinant of a square matrix, Bareiss.
Rational determinant(const RatMatrix& m);

/// Basis of the right kernel {v : m v = 0}, from the reduced row echelon form.
std::vector<std::vector<Rational>> kernel_basis(const RatMatrix& m, std::size_t columns);

/// Rows taken greedily in the given order, each kept when it raises the rank.
/// The result is the lexicographically first maximal independent subset.
std::vector<std::size_t> greedy_independent_rows(const RatMatrix& m);

/// Determinant over Q[z] by Bareiss with exact polynomial division.
RatPolynomial determinant(const std::vector<std::vector<RatPolynomial>>& m);

/// Interval determinant by Gaussian elimination with pivoting on the largest
/// certified lower modulus; throws InconclusivePrecision when no pivot is
/// certified nonzero.
CertifiedComplex determinant(const std::vector<std::vector<CertifiedComplex>>& m);

}  // namespace tmeasure
