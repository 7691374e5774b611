#pragma once

#include "tmeasure/polynomial.hpp"

#include <vector>

namespace tmeasure {

/// Certified box around roots of an integer polynomial: the box contains
/// exactly `multiplicity` roots counted with multiplicity.
struct RootEnclosure {
    CertifiedComplex root;
    unsigned multiplicity = 1;

    /// Larger of the two side lengths of the box.
    Rational diameter() const;
};

bool disjoint(const RootEnclosure& a, const RootEnclosure& b);

/// Certified enclosures of all complex roots of `p`, each box of side at most
/// `width`, pairwise disjoint. Multiple roots are handled through the
/// squarefree decomposition. Throws DomainError for constant input and
/// InconclusivePrecision when the ceiling is reached.
std::vector<RootEnclosure> root_enclosures(const IntPolynomial& p, const Rational& width,
                                           const PrecisionPolicy& policy = {});

/// Root enclosures of a squarefree polynomial of degree >= 1 (multiplicity 1 each).
std::vector<RootEnclosure> isolate_squarefree(const IntPolynomial& p, const Rational& width,
                                              const PrecisionPolicy& policy = {});

enum class Realness { real, nonreal, undecided };

/// Decides whether enclosure `i` (of a real polynomial's full, disjoint root set)
/// holds a real root: its mirror image meets no other box and meets itself.
Realness realness(const std::vector<RootEnclosure>& roots, std::size_t i);

}  // namespace tmeasure
