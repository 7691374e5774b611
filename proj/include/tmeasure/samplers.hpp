#pragma once

// Seeded generators for randomized verification runs.

#include "tmeasure/bounds.hpp"

#include <cstdint>
#include <random>

namespace tmeasure {

using Rng = std::mt19937_64;

/// Uniform rational in [lo, hi] with denominator `den`.
Rational random_rational(Rng& rng, const Rational& lo, const Rational& hi, unsigned long den = 64);

/// Parameter packs with D in 1..6, log E in [1, 4], |theta| in [1/4, 8],
/// log A >= 1/D, log B >= 0 whose recorded checks pass. Packs failing the
/// checks are redrawn.
std::vector<BoundParams> random_param_packs(std::size_t count, Rng& rng, const PrecisionPolicy& policy = {});

/// Zero-estimate instance with the given sizes and random rational points.
ZeroEstimateInstance random_zero_estimate(unsigned long D0, unsigned long D1, unsigned long S, unsigned long M,
                                          Rng& rng);

/// Distinct exponents n, derivative orders sigma and nonzero points zeta, |I| = |J| = k.
VanishingOrderCase random_vanishing_case(std::size_t k, Rng& rng);

EntryIndex random_entry_index(Rng& rng, unsigned long max_tau = 3, long max_t = 3, unsigned long max_sigma = 4,
                              long max_s = 4);

/// Random polynomial of exact degree `deg` with coefficients in [-c, c]
/// and nonzero constant term.
IntPolynomial random_polynomial(Rng& rng, unsigned deg, long c);

/// Random irreducible primitive polynomial of degree in [1, max_deg].
IntPolynomial random_irreducible(Rng& rng, unsigned max_deg, long c, const PrecisionPolicy& policy = {});

}  // namespace tmeasure
