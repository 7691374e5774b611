#pragma once

// The interpolation determinant construction at desk scale: parameter
// derivation, the analytic entries gamma and their algebraic counterparts q,
// exact rank witnesses, the analytic upper bound for log|det|, and the
// order-of-vanishing claim behind it.

#include "tmeasure/binomial.hpp"
#include "tmeasure/heights.hpp"
#include "tmeasure/linalg.hpp"
#include "tmeasure/zeroest.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tmeasure {

/// Inputs of the parameter derivation. E enters through log E (so E = e^k
/// stays exact on the log scale); each quantity is re-evaluated at any
/// working precision.
struct ParamInputs {
    unsigned long D = 1;
    RealFn logA;
    RealFn logB;
    RealFn logE;
    ComplexFn theta;
};

/// The real quantities of the construction at one working precision.
struct ParamValues {
    long bits = 0;
    CertifiedReal logA, logB, logE, E;
    CertifiedComplex theta;
    CertifiedReal abs_theta;
    CertifiedReal theta_plus;      // max(1, |theta|)
    CertifiedReal log_e_theta_plus;  // log(E |theta|_+)
    CertifiedReal log_log_A;
    CertifiedReal log_D;
    CertifiedReal U, V, W;
    CertifiedReal U_num, V_num, W_num;  // U log E, V log E, W log E
};

ParamValues evaluate_params(const ParamInputs& in, long bits);

struct ParamCheck {
    std::string label;
    Verdict verdict = Verdict::inconclusive;
    CertifiedReal lhs;
    CertifiedReal rhs;
};

struct BoundParams {
    ParamInputs inputs;
    ParamValues values;
    Integer S, S1, T, T1, H, L;
    std::vector<ParamCheck> checks;  // U >= 1, V >= 6, W >= 2, L < 211 DUVW

    unsigned long D() const { return inputs.D; }
    bool checks_pass() const;
};

/// Evaluates U, V, W and the integer parameters; floors are decided by
/// precision escalation (InconclusivePrecision when an interval still
/// straddles an integer at the ceiling).
BoundParams derive_params(const ParamInputs& in, const PrecisionPolicy& policy = {});

/// theta together with e^theta; the latter is exact for theta = log 2.
struct ThetaSpec {
    ComplexFn theta;
    ComplexFn exp_theta;
    std::string name;

    static ThetaSpec rational(const Rational& q);
    static ThetaSpec log2();
    static ThetaSpec pi_i();
};

struct EntryIndex {
    unsigned long tau = 0;
    long t = 0;
    unsigned long sigma = 0;
    long s = 0;
};

/// sum_k C(sigma,k) Delta^{(k)}(s,tau,H) (t theta)^{sigma-k} e^{theta t s} at `bits`.
CertifiedComplex gamma_entry(const EntryIndex& idx, unsigned long H, const ThetaSpec& theta, long bits);

/// d_sigma sum_k C(sigma,k) Delta^{(k)}(s,tau,H) (tX)^{sigma-k} Y^{ts}. Aborts
/// (std::logic_error) if a coefficient is not an integer.
LaurentBiPoly a_entry_poly(const EntryIndex& idx, unsigned long H);

struct EntryConsistency {
    Verdict verdict = Verdict::inconclusive;
    CertifiedComplex polynomial_path;  // q(theta, e^theta)
    CertifiedComplex analytic_path;    // d_sigma * gamma
};

/// Pass iff both certified enclosures meet and each side is at most `width` wide.
EntryConsistency entry_consistency_check(const EntryIndex& idx, unsigned long H, const ThetaSpec& theta,
                                         const Rational& width, const PrecisionPolicy& policy = {});

struct ToyConfig {
    unsigned long S = 0, S1 = 0, T = 0, T1 = 0, H = 1;
    Rational alpha = 1;
    Rational beta = 1;

    unsigned long L() const { return (T + 1) * (2 * T1 + 1); }
    /// Lines "S n", "S1 n", "T n", "T1 n", "H n", "alpha p/q", "beta p/q".
    static ToyConfig parse(const std::string& text);
};

struct RowIndex {
    unsigned long sigma;
    unsigned long s;
};

struct ToyRankReport {
    unsigned long L = 0;
    std::size_t rows = 0;
    std::size_t rank = 0;
    bool entries_integral = false;
    std::vector<RowIndex> selected_rows;
    std::optional<Rational> minor;  // determinant of the selected L x L minor when rank = L
    std::vector<Rational> kernel_witness;
    RatMatrix matrix;
};

inline constexpr unsigned long kDefaultMatrixCap = 2000;

/// Rows (sigma, s) with 0 <= sigma <= S, 0 <= s <= S1 in lexicographic order;
/// columns (tau, t) with 0 <= tau <= T, |t| <= T1; entries q(beta, alpha).
ToyRankReport toy_rank_check(const ToyConfig& toy, unsigned long cap = kDefaultMatrixCap);

struct Lemma3Config {
    unsigned long L = 1;
    RealFn logE;
    Rational M = 0;
    Rational S = 0;
    Rational epsilon = 0;
};

/// -(L/2) log E + M + S log E + log(2L) + log E, after certifying eps < E^{-L}.
CertifiedReal lemma3_rhs(const Lemma3Config& cfg, long bits, const PrecisionPolicy& policy = {});

struct DecayReport {
    unsigned long L = 0;
    CertifiedReal log_det_over_L;  // upper end is a certified upper bound
    CertifiedReal M;               // certified upper bound for the entry logs
    CertifiedReal rhs;
    bool pass = false;
};

/// Square toy matrix (requires (S+1)(S1+1) = L) of gamma entries with rows
/// zeta = s, sigma; M bounds log max_{|z|<=E} |phi^{(sigma)}(z s)| for
/// phi(z) = Delta(z, tau, H) e^{theta t z}; checks log|det|/L <= rhs.
DecayReport determinant_decay_check(const ToyConfig& toy, const ThetaSpec& theta, const RealFn& logE,
                                    const PrecisionPolicy& policy = {});

struct VanishingOrderCase {
    std::vector<unsigned long> n;      // exponents, lambda in I
    std::vector<unsigned long> sigma;  // derivative orders, mu in J
    std::vector<Rational> zeta;
};

struct VanishingOrderReport {
    bool identically_zero = false;
    long computed_ord = 0;
    long lower_bound = 0;
    bool pass = false;
    RatPolynomial determinant;
};

VanishingOrderReport vanishing_order_check(const VanishingOrderCase& c);

}  // namespace tmeasure
