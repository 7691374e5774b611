#pragma once

// Exhaustive search over integer polynomials of bounded degree and length:
// minimal |P(theta)| and closest real algebraic approximants to theta.

#include "tmeasure/bounds.hpp"
#include "tmeasure/roots.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tmeasure {

inline constexpr unsigned long long kDefaultSearchCap = 100'000'000ULL;

struct SearchSpace {
    Target target = Target::pi;
    unsigned long d_max = 1;
    unsigned long L_max = 1;
    unsigned workers = 1;
    unsigned long long cap = kDefaultSearchCap;
    PrecisionPolicy policy;
};

class SearchCapExceeded : public std::runtime_error {
public:
    SearchCapExceeded(Integer size, unsigned long long cap);
    const Integer& size() const { return size_; }

private:
    Integer size_;
};

/// Separation failed at the precision ceiling; `ambiguous` lists the contenders.
class SearchAmbiguous : public InconclusivePrecision {
public:
    SearchAmbiguous(std::vector<IntPolynomial> ambiguous);
    const std::vector<IntPolynomial>& ambiguous() const { return ambiguous_; }

private:
    std::vector<IntPolynomial> ambiguous_;
};

/// Number of nonzero integer vectors of n coordinates with sum |a_i| <= L, up to sign:
/// (sum_k 2^k C(n,k) C(L,k) - 1) / 2.
Integer lattice_count(unsigned long n, unsigned long L);

/// Size of the space: polynomials of degree <= d_max, length <= L_max, leading coefficient > 0.
Integer space_size(const SearchSpace& space);

/// Calls f for every polynomial of the space in lexicographic order of the
/// leading-first coefficient vector (single-threaded; for tests and small spaces).
void for_each_polynomial(unsigned long d_max, unsigned long L_max, const std::function<void(const IntPolynomial&)>& f);

/// Leading-first lexicographic order on coefficient vectors of length d_max + 1.
bool lex_less(const IntPolynomial& a, const IntPolynomial& b);

struct SearchResult {
    Target target = Target::pi;
    Form form = Form::polynomial;
    unsigned long d_max = 0;
    unsigned long L_max = 0;
    IntPolynomial best_poly;
    CertifiedReal best_value;  // |P(theta)| or |theta - xi|
    std::optional<RootEnclosure> witness_root;
    Integer enumerated;
    std::size_t screened_survivors = 0;
    long bits = 0;  // precision at which the minimum separated
};

SearchResult enumerate_min_poly_value(const SearchSpace& space);

/// Over real roots of irreducible primitive polynomials of degree >= 1 in the space.
SearchResult enumerate_min_alg_approx(const SearchSpace& space);

/// Certified |P(theta)| or |theta - xi| for the result's witness at `bits`.
CertifiedReal witness_value(const SearchResult& r, long bits);

struct BoundCheck {
    MeasureQuery query;
    CertifiedReal log_value;
    CertifiedReal bound;
    CertifiedReal margin;  // log_value - bound
    Verdict verdict = Verdict::inconclusive;
};

/// Pass iff log(best) >= bound, certified. `bound_override` replaces the
/// theorem bound (harness self-test).
BoundCheck verify_against_bound(const SearchResult& r, const MeasureQuery& q, const PrecisionPolicy& policy = {},
                                const std::optional<RealFn>& bound_override = std::nullopt);

struct SweepCell {
    Target target = Target::pi;
    Form form = Form::polynomial;
    unsigned long d = 1;
    unsigned long L = 1;

    std::string key() const;
};

/// Runs every cell not yet present in the JSON-lines log at `log_path`,
/// appending one record per finished cell. Returns the number of cells run.
std::size_t run_sweep(const std::vector<SweepCell>& cells, const std::string& log_path, const SearchSpace& base);

}  // namespace tmeasure
