#include "tmeasure/interdet.hpp"

#include "tmeasure/constants.hpp"

#include <algorithm>
#include <sstream>

namespace tmeasure {

namespace {

Integer binomial(unsigned long n, unsigned long k) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

Integer factorial(unsigned long n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

CertifiedComplex scale(const CertifiedReal& c, const CertifiedComplex& z) { return {c * z.re(), c * z.im()}; }

CertifiedReal complex_width(const CertifiedComplex& z) {
    return CertifiedReal(std::max(z.re().width(), z.im().width()));
}

Verdict run_check(const RealFn& lhs, Relation rel, const RealFn& rhs, const PrecisionPolicy& policy, ParamCheck& out) {
    try {
        Comparison c = compare(lhs, rel, rhs, policy);
        out.lhs = c.lhs;
        out.rhs = c.rhs;
        out.verdict = c.holds ? Verdict::pass : Verdict::fail;
    } catch (const InconclusivePrecision&) {
        out.verdict = Verdict::inconclusive;
    }
    return out.verdict;
}

struct Floors {
    Integer S, S1, T, T1, H;
};

std::optional<Floors> floors_at(const ParamValues& v, unsigned long D) {
    Floors f;
    auto s = decided_floor(CertifiedReal(K("S.coef")) * v.U * v.V);
    auto s1 = decided_floor(CertifiedReal(K("S1.coef")) * CertifiedReal(static_cast<long>(D)) * v.W + CertifiedReal(K("half")));
    auto h = decided_floor(CertifiedReal(K("H.coef")) * v.W_num);
    auto t1 = decided_floor(CertifiedReal(K("T1.coef")) * v.U + CertifiedReal(K("half")));
    if (!s || !s1 || !h || !t1) return std::nullopt;
    f.S = *s;
    f.S1 = *s1;
    f.T1 = *t1;
    f.H = *h;
    return f;
}

}  // namespace

ParamValues evaluate_params(const ParamInputs& in, long bits) {
    if (in.D == 0) throw DomainError("D must be positive");
    ParamValues v;
    v.bits = bits;
    v.logA = in.logA(bits);
    v.logB = in.logB(bits);
    v.logE = in.logE(bits);
    if (!v.logE.positive()) throw DomainError("log E must be positive");
    if (!v.logA.positive()) throw DomainError("log A must be positive");
    v.E = exp(v.logE, bits);
    v.theta = in.theta(bits);
    v.abs_theta = abs(v.theta, bits);
    v.theta_plus = max(CertifiedReal(1L), v.abs_theta);
    v.log_e_theta_plus = v.logE + log_plus(v.abs_theta, bits);
    v.log_log_A = log(v.logA, bits);
    const CertifiedReal D(static_cast<long>(in.D));
    v.log_D = log(D, bits);
    const CertifiedReal log_D2 = log(CertifiedReal(static_cast<long>(in.D + 2)), bits);
    v.U_num = CertifiedReal(K("U.coef")) * D * log_D2 + v.logE;
    v.V_num = CertifiedReal(K("V.theta")) * v.E * v.abs_theta + D * v.logA + CertifiedReal(K("V.logE")) * v.logE;
    v.U = v.U_num / v.logE;
    v.V = v.V_num / v.logE;
    v.W_num = v.logB + v.log_log_A + CertifiedReal(K("W.logD")) * v.log_D + CertifiedReal(K("W.theta")) * v.log_e_theta_plus +
              CertifiedReal(K("W.const"));
    v.W = v.W_num / v.logE;
    return v;
}

bool BoundParams::checks_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const ParamCheck& c) { return c.verdict == Verdict::pass; });
}

BoundParams derive_params(const ParamInputs& in, const PrecisionPolicy& policy) {
    BoundParams p;
    p.inputs = in;
    const CertifiedReal D(static_cast<long>(in.D));
    auto found = escalate(
        [&](long bits) -> std::optional<std::pair<ParamValues, Floors>> {
            ParamValues v = evaluate_params(in, bits);
            auto f = floors_at(v, in.D);
            if (!f) return std::nullopt;
            auto t = decided_floor(CertifiedReal(K("T.coef")) * D * v.V * v.W);
            if (!t) return std::nullopt;
            f->T = *t;
            return std::make_pair(std::move(v), std::move(*f));
        },
        policy, "undecidable parameter floor");
    p.values = std::move(found.first);
    p.S = found.second.S;
    p.S1 = found.second.S1;
    p.T = found.second.T;
    p.T1 = found.second.T1;
    p.H = found.second.H;
    p.L = (p.T + 1) * (2 * p.T1 + 1);

    auto value = [&in](auto pick) { return [&in, pick](long bits) { return pick(evaluate_params(in, bits)); }; };
    ParamCheck u, v, w, l;
    u.label = "U >= 1";
    v.label = "V >= 6";
    w.label = "W >= 2";
    l.label = "L < 211 DUVW";
    run_check(exact(K("U.min")), Relation::le, value([](const ParamValues& x) { return x.U; }), policy, u);
    run_check(exact(K("V.min")), Relation::le, value([](const ParamValues& x) { return x.V; }), policy, v);
    run_check(exact(K("W.min")), Relation::le, value([](const ParamValues& x) { return x.W; }), policy, w);
    const Rational L(p.L);
    run_check(exact(L), Relation::lt,
              value([D](const ParamValues& x) { return CertifiedReal(K("main")) * D * x.U * x.V * x.W; }), policy, l);
    p.checks = {u, v, w, l};
    return p;
}

ThetaSpec ThetaSpec::rational(const Rational& q) {
    return {exact_complex(q), [q](long bits) { return CertifiedComplex(exp(CertifiedReal(q), bits)); },
            to_string(q)};
}

ThetaSpec ThetaSpec::log2() {
    return {[](long bits) { return CertifiedComplex(const_log2(bits)); }, exact_complex(2), "log2"};
}

ThetaSpec ThetaSpec::pi_i() {
    return {[](long bits) { return CertifiedComplex(CertifiedReal(0L), const_pi(bits)); }, exact_complex(-1),
            "pi*i"};
}

CertifiedComplex gamma_entry(const EntryIndex& idx, unsigned long H, const ThetaSpec& spec, long bits) {
    const DeltaParams dp = DeltaParams::make(idx.tau, H);
    const CertifiedComplex theta = spec.theta(bits);
    const CertifiedComplex t_theta = scale(CertifiedReal(idx.t), theta);
    CertifiedComplex sum(CertifiedReal(0L));
    for (unsigned long k = 0; k <= std::min(idx.tau, idx.sigma); ++k) {
        const Rational dk = delta_derivative_polynomial(dp, k).eval(Rational(idx.s));
        if (dk == 0) continue;
        const CertifiedReal c(Rational(binomial(idx.sigma, k)) * dk);
        sum += scale(c, pow(t_theta, idx.sigma - k));
    }
    return sum * exp(scale(CertifiedReal(idx.t * idx.s), theta), bits);
}

LaurentBiPoly a_entry_poly(const EntryIndex& idx, unsigned long H) {
    const DeltaParams dp = DeltaParams::make(idx.tau, H);
    const Integer d = d_sigma(H, idx.sigma).value;
    LaurentBiPoly q;
    for (unsigned long k = 0; k <= std::min(idx.tau, idx.sigma); ++k) {
        const Rational dk = delta_derivative_polynomial(dp, k).eval(Rational(idx.s));
        if (dk == 0) continue;
        Integer tp;
        mpz_pow_ui(tp.get_mpz_t(), Integer(idx.t).get_mpz_t(), idx.sigma - k);
        const Rational c = Rational(d * binomial(idx.sigma, k) * tp) * dk;
        q = q + LaurentBiPoly::monomial(c, static_cast<long>(idx.sigma - k), idx.t * idx.s);
    }
    if (!q.has_integer_coefficients())
        throw std::logic_error("non-integral entry polynomial at tau=" + std::to_string(idx.tau) +
                               " t=" + std::to_string(idx.t) + " sigma=" + std::to_string(idx.sigma) +
                               " s=" + std::to_string(idx.s));
    return q;
}

EntryConsistency entry_consistency_check(const EntryIndex& idx, unsigned long H, const ThetaSpec& theta,
                                         const Rational& width, const PrecisionPolicy& policy) {
    const LaurentBiPoly q = a_entry_poly(idx, H);
    const CertifiedReal d(d_sigma(H, idx.sigma).value);
    EntryConsistency out;
    try {
        out = escalate(
            [&](long bits) -> std::optional<EntryConsistency> {
                EntryConsistency e;
                e.polynomial_path = q.eval(theta.theta(bits), theta.exp_theta(bits));
                e.analytic_path = scale(d, gamma_entry(idx, H, theta, bits));
                if (complex_width(e.polynomial_path).lo() > width || complex_width(e.analytic_path).lo() > width)
                    return std::nullopt;
                e.verdict = e.polynomial_path.overlaps(e.analytic_path) ? Verdict::pass : Verdict::fail;
                return e;
            },
            policy, "entry consistency");
    } catch (const InconclusivePrecision&) {
        out.verdict = Verdict::inconclusive;
    }
    return out;
}

ToyConfig ToyConfig::parse(const std::string& text) {
    ToyConfig toy;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string key, value;
        if (!(ls >> key)) continue;
        if (!(ls >> value)) throw DomainError("missing value for " + key);
        auto integer = [&] {
            Rational q = parse_rational(value);
            if (q.get_den() != 1 || q < 0 || !q.get_num().fits_ulong_p()) throw DomainError("bad value for " + key);
            return q.get_num().get_ui();
        };
        if (key == "S") toy.S = integer();
        else if (key == "S1") toy.S1 = integer();
        else if (key == "T") toy.T = integer();
        else if (key == "T1") toy.T1 = integer();
        else if (key == "H") toy.H = integer();
        else if (key == "alpha") toy.alpha = parse_rational(value);
        else if (key == "beta") toy.beta = parse_rational(value);
        else throw DomainError("unknown key '" + key + "'");
    }
    if (toy.H == 0) throw DomainError("H must be positive");
    return toy;
}

ToyRankReport toy_rank_check(const ToyConfig& toy, unsigned long cap) {
    if (toy.alpha == 0) throw DomainError("alpha must be nonzero");
    ToyRankReport r;
    r.L = toy.L();
    if (r.L > cap) throw DomainError("L = " + std::to_string(r.L) + " exceeds the matrix cap " + std::to_string(cap));
    std::vector<RowIndex> rows;
    for (unsigned long sigma = 0; sigma <= toy.S; ++sigma)
        for (unsigned long s = 0; s <= toy.S1; ++s) rows.push_back({sigma, s});
    r.rows = rows.size();
    const long T1 = static_cast<long>(toy.T1);
    for (const auto& row : rows) {
        std::vector<Rational> entries;
        entries.reserve(r.L);
        for (unsigned long tau = 0; tau <= toy.T; ++tau)
            for (long t = -T1; t <= T1; ++t)
                entries.push_back(a_entry_poly({tau, t, row.sigma, static_cast<long>(row.s)}, toy.H)
                                      .eval(toy.beta, toy.alpha));
        r.matrix.push_back(std::move(entries));
    }
    r.entries_integral = true;
    r.rank = rank(r.matrix);
    if (r.rank == r.L) {
        auto chosen = greedy_independent_rows(r.matrix);
        RatMatrix minor;
        for (auto i : chosen) {
            r.selected_rows.push_back(rows[i]);
            minor.push_back(r.matrix[i]);
        }
        r.minor = determinant(minor);
    } else {
        r.kernel_witness = kernel_basis(r.matrix, r.L).front();
    }
    return r;
}

CertifiedReal lemma3_rhs(const Lemma3Config& cfg, long bits, const PrecisionPolicy& policy) {
    if (cfg.L == 0) throw DomainError("L must be positive");
    if (cfg.epsilon <= 0) throw DomainError("epsilon must be positive");
    const CertifiedReal L(static_cast<long>(cfg.L));
    auto c = compare([&](long b) { return log(CertifiedReal(cfg.epsilon), b); }, Relation::lt,
                     [&](long b) { return -L * cfg.logE(b); }, policy);
    if (!c.holds) throw DomainError("epsilon must be below E^-L");
    const CertifiedReal logE = cfg.logE(bits);
    return -(L / CertifiedReal(2L)) * logE + CertifiedReal(cfg.M) + CertifiedReal(cfg.S) * logE +
           log(CertifiedReal(2L) * L, bits) + logE;
}

DecayReport determinant_decay_check(const ToyConfig& toy, const ThetaSpec& theta, const RealFn& logE,
                                    const PrecisionPolicy& policy) {
    DecayReport rep;
    rep.L = toy.L();
    if ((toy.S + 1) * (toy.S1 + 1) != rep.L) throw DomainError("decay check needs (S+1)(S1+1) = L");
    if (rep.L > kDefaultMatrixCap) throw DomainError("L exceeds the matrix cap");
    std::vector<EntryIndex> cols;
    for (unsigned long tau = 0; tau <= toy.T; ++tau)
        for (long t = -static_cast<long>(toy.T1); t <= static_cast<long>(toy.T1); ++t) cols.push_back({tau, t, 0, 0});
    std::vector<RowIndex> rows;
    for (unsigned long sigma = 0; sigma <= toy.S; ++sigma)
        for (unsigned long s = 0; s <= toy.S1; ++s) rows.push_back({sigma, s});

    // Upper bound for log max_{|z| <= E} |phi^{(sigma)}(z s)|, phi(z) = Delta(z,tau,H) e^{theta t z}.
    auto entry_log_bound = [&](const RowIndex& row, const EntryIndex& col, long bits) -> std::optional<CertifiedReal> {
        const CertifiedReal R = exp(logE(bits), bits) * CertifiedReal(static_cast<long>(row.s));
        const CertifiedReal tt = CertifiedReal(std::labs(col.t)) * abs(theta.theta(bits), bits);
        const DeltaParams dp = DeltaParams::make(col.tau, toy.H);
        CertifiedReal sum(0L);
        for (unsigned long k = 0; k <= std::min(col.tau, row.sigma); ++k) {
            CertifiedReal bk(0L);
            CertifiedReal rp(1L);
            for (const auto& c : delta_derivative_polynomial(dp, k).ascending()) {
                bk = bk + CertifiedReal(Rational(abs(c))) * rp;
                rp = rp * R;
            }
            sum = sum + CertifiedReal(binomial(row.sigma, k)) * bk * pow(tt, row.sigma - k);
        }
        if (sum.hi() == 0) return std::nullopt;
        return log(CertifiedReal(sum.hi()), bits) + tt * R;
    };

    auto M_at = [&](long bits) {
        std::optional<CertifiedReal> m;
        for (const auto& row : rows)
            for (const auto& col : cols)
                if (auto b = entry_log_bound(row, col, bits)) m = m ? max(*m, *b) : *b;
        return m.value_or(CertifiedReal(0L));
    };

    auto log_det_upper = [&](long bits) {
        std::vector<std::vector<CertifiedComplex>> g;
        for (const auto& row : rows) {
            std::vector<CertifiedComplex> line;
            for (const auto& col : cols)
                line.push_back(gamma_entry({col.tau, col.t, row.sigma, static_cast<long>(row.s)}, toy.H, theta, bits));
            g.push_back(std::move(line));
        }
        Rational norm_hi;
        try {
            norm_hi = norm(determinant(g)).hi();
        } catch (const InconclusivePrecision&) {
            // Hadamard: |det|^2 <= prod_i sum_j |g_ij|^2.
            CertifiedReal h(1L);
            for (const auto& line : g) {
                CertifiedReal s(0L);
                for (const auto& z : line) s = s + norm(z);
                h = h * s;
            }
            norm_hi = h.hi();
        }
        if (norm_hi == 0) return CertifiedReal(Rational(-1000000));
        const CertifiedReal ub = log(CertifiedReal(norm_hi), bits) / CertifiedReal(2L);
        return CertifiedReal(ub.hi()) / CertifiedReal(static_cast<long>(rep.L));
    };

    const long bits0 = policy.start_bits;
    rep.M = M_at(bits0);
    const Rational M = rep.M.hi();
    const long L = static_cast<long>(rep.L);
    const CertifiedReal eps_bound = exp(-CertifiedReal(L) * logE(bits0), bits0);
    Lemma3Config cfg{rep.L, logE, M, Rational(static_cast<long>(toy.S)), eps_bound.lo() / 2};
    auto c = compare(log_det_upper, Relation::le, [&](long bits) { return lemma3_rhs(cfg, bits, policy); }, policy);
    rep.log_det_over_L = c.lhs;
    rep.rhs = c.rhs;
    rep.pass = c.holds;
    return rep;
}

VanishingOrderReport vanishing_order_check(const VanishingOrderCase& c) {
    const std::size_t k = c.n.size();
    if (c.sigma.size() != k || c.zeta.size() != k) throw DomainError("|I| must equal |J|");
    for (const auto& z : c.zeta)
        if (z == 0) throw DomainError("zeta must be nonzero");
    std::vector<std::vector<RatPolynomial>> m(k, std::vector<RatPolynomial>(k));
    for (std::size_t l = 0; l < k; ++l) {
        for (std::size_t mu = 0; mu < k; ++mu) {
            const unsigned long n = c.n[l];
            const unsigned long s = c.sigma[mu];
            if (s > n) continue;
            Rational zp = 1;
            for (unsigned long e = 0; e < n - s; ++e) zp *= c.zeta[mu];
            std::vector<Rational> coeffs(n - s + 1, Rational(0));
            coeffs.back() = Rational(binomial(n, s) * factorial(s)) * zp;
            m[l][mu] = RatPolynomial(std::move(coeffs));
        }
    }
    VanishingOrderReport r;
    r.determinant = determinant(m);
    long sum_sigma = 0;
    for (auto s : c.sigma) sum_sigma += static_cast<long>(s);
    r.lower_bound = static_cast<long>(k * (k - 1) / 2) - sum_sigma;
    r.identically_zero = r.determinant.is_zero();
    r.computed_ord = r.identically_zero ? -1 : r.determinant.order_at_zero();
    r.pass = r.identically_zero || r.computed_ord >= r.lower_bound;
    return r;
}

}  // namespace tmeasure
