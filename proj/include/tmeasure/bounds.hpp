#pragma once

// Explicit lower bounds (log scale) and instance verifiers for the
// inequality chains behind them.

#include "tmeasure/interdet.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tmeasure {

/// -211 D (W log E)(V log E)(U log E) (log E)^-2 for the given inputs.
CertifiedReal theorem1_log_bound(const ParamInputs& in, long bits);

enum class Target { pi, log2, e };
enum class Form { algebraic, polynomial };

std::optional<Target> parse_target(std::string_view name);
std::string_view target_name(Target t);
Constant target_constant(Target t);

struct MeasureQuery {
    Target target = Target::pi;
    Form form = Form::polynomial;
    unsigned long d = 1;
    Rational L = 3;
};

/// Log-scale lower bound for |target - xi| (algebraic) or |P(target)| (polynomial).
CertifiedReal measure_bound(const MeasureQuery& q, long bits);

/// phi(d, L) with |target - xi| >= e^{-d phi(d, L)} from the algebraic-approximation bound.
CertifiedReal measure_phi(Target t, unsigned long d, const Rational& L, long bits);

enum class Theorem5Kind { exp_minus_alpha, beta_minus_log };

struct Theorem5Input {
    unsigned long D = 1;
    RealFn logA;
    RealFn h_alpha;
    RealFn h_beta;
    RealFn abs_beta;
    RealFn logE;
    /// log A is |beta| E / D by construction; the hypothesis then reduces to
    /// that term being the largest of the three.
    bool logA_from_beta = false;
};

/// Certifies log A >= max(h(alpha), log E / D, |beta| E / D); throws DomainError otherwise.
void check_theorem5_hypothesis(const Theorem5Input& in, const PrecisionPolicy& policy = {});

/// -105500 D^2 log A (h(beta) + log+ log A + log D + log E)(D log D + log E)(log E)^-2.
/// Both kinds share the formula.
CertifiedReal theorem5_log_bound(Theorem5Kind kind, const Theorem5Input& in, long bits);

/// log of e^{-d phi} (4 M sqrt(N))^{-N}, phi being the caller's value of phi(N, 2^N M).
CertifiedReal lemma1_transfer(const CertifiedReal& phi, unsigned long d_exponent, unsigned long N, const Integer& M,
                              long bits);

struct ChainItem {
    std::string label;
    Verdict verdict = Verdict::inconclusive;
    CertifiedReal lhs;
    CertifiedReal rhs;
    bool strict = false;
    bool gating = true;  // non-gating items are reported but do not affect pass()
};

struct ChainReport {
    std::string name;
    std::vector<ChainItem> items;

    bool pass() const;
    std::size_t failures() const;
};

/// h(xi) given by value, or absent for the variant h(xi) <= d^-1 log L.
struct TheoremInstance {
    unsigned long d = 1;
    Rational L = 3;
    std::optional<RealFn> h_xi;
};

ChainReport chain_check_thm2(const TheoremInstance& inst, const PrecisionPolicy& policy = {});
ChainReport chain_check_thm3(const TheoremInstance& inst, const PrecisionPolicy& policy = {});
ChainReport chain_check_thm4(const TheoremInstance& inst, const PrecisionPolicy& policy = {});
ChainReport chain_check_thm5(const Theorem5Input& in, const PrecisionPolicy& policy = {});

/// The closing inequalities of the main estimate for one parameter pack.
ChainReport chain_check_main_estimate(const BoundParams& params, const PrecisionPolicy& policy = {});

// Named instantiations.
ParamInputs preset_thm2(unsigned long d, RealFn h_xi);
ParamInputs preset_thm3(unsigned long d, RealFn h_xi);
ParamInputs preset_thm4(unsigned long d, const Rational& L);
/// D given, E = e, beta = 1, h(alpha) = 0, log A = |beta| E / D = e / D.
Theorem5Input preset_thm5(unsigned long D);

}  // namespace tmeasure
