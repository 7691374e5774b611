#include "tmeasure/bounds.hpp"

#include "tmeasure/constants.hpp"

#include <algorithm>
#include <map>
#include <memory>

namespace tmeasure {

namespace {

using R = CertifiedReal;

R c(std::string_view key) { return R(K(key)); }
R n(unsigned long v) { return R(Integer(v)); }
R z(const Integer& v) { return R(v); }

R log_of(unsigned long v, long bits) { return log(n(v), bits); }

class Chain {
public:
    Chain(ChainReport& report, const PrecisionPolicy& policy) : report_(report), policy_(policy) {}

    void add(std::string label, const RealFn& lhs, Relation rel, const RealFn& rhs, bool gating = true) {
        ChainItem item;
        item.label = std::move(label);
        item.strict = rel == Relation::lt;
        item.gating = gating;
        try {
            Comparison cmp = compare(lhs, rel, rhs, policy_);
            item.lhs = cmp.lhs;
            item.rhs = cmp.rhs;
            item.verdict = cmp.holds ? Verdict::pass : Verdict::fail;
        } catch (const InconclusivePrecision&) {
            item.verdict = Verdict::inconclusive;
        }
        report_.items.push_back(std::move(item));
    }

    void add_exact(std::string label, const Rational& lhs, Relation rel, const Rational& rhs) {
        add(std::move(label), exact(lhs), rel, exact(rhs));
    }

    void add_equal(std::string label, const Rational& lhs, const Rational& rhs) {
        ChainItem item;
        item.label = std::move(label);
        item.lhs = R(lhs);
        item.rhs = R(rhs);
        item.verdict = lhs == rhs ? Verdict::pass : Verdict::fail;
        report_.items.push_back(std::move(item));
    }

private:
    ChainReport& report_;
    PrecisionPolicy policy_;
};

// h(xi), or the upper bound d^-1 log L that every admissible xi satisfies.
RealFn h_or_variant(const TheoremInstance& inst) {
    if (inst.h_xi) return *inst.h_xi;
    const Rational L = inst.L;
    const unsigned long d = inst.d;
    return [L, d](long bits) { return log(R(L), bits) / n(d); };
}

std::string h_label(const TheoremInstance& inst) {
    return inst.h_xi ? " [h(xi) certified]" : " [h(xi) <= d^-1 log L]";
}

void require_instance(const TheoremInstance& inst) {
    if (inst.d == 0) throw DomainError("d must be positive");
    if (inst.L < 3) throw DomainError("L must be at least 3");
}

// Main estimate with the instantiation must not be weaker than the stated bound.
void add_end_to_end(Chain& chain, const ParamInputs& in, Target t, const TheoremInstance& inst) {
    MeasureQuery q{t, Form::algebraic, inst.d, inst.L};
    chain.add("main estimate at this instantiation >= stated bound", [q](long bits) { return measure_bound(q, bits); },
              Relation::le, [in](long bits) { return theorem1_log_bound(in, bits); }, false);
}

}  // namespace

CertifiedReal theorem1_log_bound(const ParamInputs& in, long bits) {
    const ParamValues v = evaluate_params(in, bits);
    return -(c("main") * n(in.D) * v.W_num * v.V_num * v.U_num) / square(v.logE);
}

std::optional<Target> parse_target(std::string_view name) {
    if (name == "pi") return Target::pi;
    if (name == "log2") return Target::log2;
    if (name == "e") return Target::e;
    return std::nullopt;
}

std::string_view target_name(Target t) {
    switch (t) {
        case Target::pi: return "pi";
        case Target::log2: return "log2";
        case Target::e: return "e";
    }
    return "?";
}

Constant target_constant(Target t) {
    switch (t) {
        case Target::pi: return Constant::pi;
        case Target::log2: return Constant::log2;
        case Target::e: return Constant::e;
    }
    return Constant::pi;
}

CertifiedReal measure_phi(Target t, unsigned long d, const Rational& L, long bits) {
    if (d == 0) throw DomainError("d must be positive");
    if (L < 3) throw DomainError("L must be at least 3");
    const R logL = log(R(L), bits);
    const R logd = log_of(d, bits);
    const R D = n(d);
    switch (t) {
        case Target::pi: return c("pi.alg") * (logL + D * logd) * (R(1L) + logd);
        case Target::log2: return c("log2.alg") * D * (logL + D * logd) / (R(1L) + logd);
        case Target::e: return c("e.alg") * D * (logL + D);
    }
    throw DomainError("unknown target");
}

CertifiedReal measure_bound(const MeasureQuery& q, long bits) {
    if (q.d == 0) throw DomainError("d must be positive");
    if (q.L < 3) throw DomainError("L must be at least 3");
    const R logL = log(R(q.L), bits);
    const R logd = log_of(q.d, bits);
    const R D = n(q.d);
    const bool alg = q.form == Form::algebraic;
    switch (q.target) {
        case Target::pi:
            return -(c(alg ? "pi.alg" : "pi.poly") * D * (logL + D * logd) * (R(1L) + logd));
        case Target::log2:
            return -(c(alg ? "log2.alg" : "log2.poly") * D * D * (logL + D * logd) / (R(1L) + logd));
        case Target::e:
            return -(c(alg ? "e.alg" : "e.poly") * D * D * (logL + D));
    }
    throw DomainError("unknown target");
}

void check_theorem5_hypothesis(const Theorem5Input& in, const PrecisionPolicy& policy) {
    if (in.D == 0) throw DomainError("D must be positive");
    const R D = n(in.D);
    const RealFn beta_term = [&](long bits) { return in.abs_beta(bits) * exp(in.logE(bits), bits) / D; };
    const RealFn top = in.logA_from_beta ? beta_term : in.logA;
    auto ge = [&](const RealFn& rhs, const char* what) {
        if (!compare(rhs, Relation::le, top, policy).holds)
            throw DomainError(std::string("hypothesis fails: log A >= ") + what);
    };
    ge(in.h_alpha, "h(alpha)");
    ge([&](long bits) { return in.logE(bits) / D; }, "log E / D");
    if (!in.logA_from_beta) ge(beta_term, "|beta| E / D");
    if (!compare(exact(1), Relation::le, in.logE, policy).holds) throw DomainError("hypothesis fails: E >= e");
}

CertifiedReal theorem5_log_bound(Theorem5Kind, const Theorem5Input& in, long bits) {
    const R D = n(in.D);
    const R logA = in.logA(bits);
    const R logE = in.logE(bits);
    const R logD = log(D, bits);
    const R first = in.h_beta(bits) + log_plus(logA, bits) + logD + logE;
    return -(c("t5") * D * D * logA * first * (D * logD + logE)) / square(logE);
}

CertifiedReal lemma1_transfer(const CertifiedReal& phi, unsigned long d_exponent, unsigned long N, const Integer& M,
                              long bits) {
    if (N == 0) throw DomainError("N must be positive");
    if (M < 1) throw DomainError("M must be positive");
    const R logs = log(R(4L) * z(M), bits) + log(n(N), bits) / R(2L);
    return -(n(d_exponent) * phi) - n(N) * logs;
}

bool ChainReport::pass() const {
    return std::all_of(items.begin(), items.end(),
                       [](const ChainItem& i) { return !i.gating || i.verdict == Verdict::pass; });
}

std::size_t ChainReport::failures() const {
    return static_cast<std::size_t>(std::count_if(items.begin(), items.end(), [](const ChainItem& i) {
        return i.gating && i.verdict != Verdict::pass;
    }));
}

ParamInputs preset_thm2(unsigned long d, RealFn h_xi) {
    ParamInputs in;
    in.D = 2 * d;
    in.logA = exact(Rational(1, static_cast<unsigned long>(2 * d)));
    in.logB = std::move(h_xi);
    in.logE = exact(2);
    in.theta = [](long bits) { return CertifiedComplex(R(0L), const_pi(bits)); };
    return in;
}

ParamInputs preset_thm3(unsigned long d, RealFn h_xi) {
    ParamInputs in;
    in.D = d;
    in.logA = exact(1);
    in.logB = std::move(h_xi);
    in.logE = [d](long bits) { return R(1L) + log_of(d, bits); };
    in.theta = [](long bits) { return CertifiedComplex(const_log2(bits)); };
    return in;
}

ParamInputs preset_thm4(unsigned long d, const Rational& L) {
    ParamInputs in;
    in.D = d;
    auto logA = [d, L](long bits) { return R(1L) + log(R(L), bits) / n(d); };
    in.logA = logA;
    in.logB = exact(0);
    in.logE = [d, logA](long bits) { return R(1L) + log_of(d, bits) + log(logA(bits), bits); };
    in.theta = exact_complex(1);
    return in;
}

Theorem5Input preset_thm5(unsigned long D) {
    Theorem5Input in;
    in.D = D;
    in.logA = [D](long bits) { return const_e(bits) / n(D); };
    in.h_alpha = exact(0);
    in.h_beta = exact(0);
    in.abs_beta = exact(1);
    in.logE = exact(1);
    in.logA_from_beta = true;
    return in;
}

ChainReport chain_check_thm2(const TheoremInstance& inst, const PrecisionPolicy& policy) {
    require_instance(inst);
    ChainReport r;
    r.name = "pi: d=" + std::to_string(inst.d) + " L=" + to_string(inst.L);
    Chain chain(r, policy);
    const unsigned long d = inst.d;
    const R D = n(d);
    const Rational L = inst.L;
    const RealFn h = h_or_variant(inst);
    const R logE(2L);

    chain.add("6.6 d log(2d+2) + log E < 11.2 d (1 + log d)",
              [=](long bits) { return c("pi.U") * D * log_of(2 * d + 2, bits) + logE; }, Relation::lt,
              [=](long bits) { return c("pi.U.rhs") * D * (R(1L) + log_of(d, bits)); });

    auto w_lhs = [=](const RealFn& hx) {
        return [=](long bits) {
            return D * (hx(bits) + c("pi.W.logd") * log_of(2 * d, bits) + c("pi.W.logpi") * log(const_pi(bits), bits) +
                        c("pi.W.const"));
        };
    };
    auto w_rhs = [=](long bits) { return c("pi.W.rhs") * (log(R(L), bits) + D * log_of(d, bits)); };
    chain.add("d (h(xi) + 3 log(2d) + 2 log pi + 14) <= 17 (log L + d log d)" + h_label(inst), w_lhs(h), Relation::le,
              w_rhs);
    if (inst.h_xi) {
        TheoremInstance variant{inst.d, inst.L, std::nullopt};
        chain.add("d (h(xi) + 3 log(2d) + 2 log pi + 14) <= 17 (log L + d log d)" + h_label(variant),
                  w_lhs(h_or_variant(variant)), Relation::le, w_rhs, false);
    }

    chain.add("1 + 2E|theta| + 6 log E <= 59.5",
              [=](long bits) {
                  const R E = exp(logE, bits);
                  return R(1L) + c("V.theta") * E * const_pi(bits) + c("V.logE") * logE;
              },
              Relation::le, exact(K("pi.V")));

    // D = 2d and (log E)^2 = 4 in the main estimate.
    chain.add_exact("211 * 2 * 17 * 59.5 * 11.2 / 4 <= 1.2e6",
                    K("main") * 2 * K("pi.W.rhs") * K("pi.V") * K("pi.U.rhs") / 4, Relation::le, K("pi.alg"));

    add_end_to_end(chain, preset_thm2(d, h), Target::pi, inst);
    return r;
}

ChainReport chain_check_thm3(const TheoremInstance& inst, const PrecisionPolicy& policy) {
    require_instance(inst);
    ChainReport r;
    r.name = "log2: d=" + std::to_string(inst.d) + " L=" + to_string(inst.L);
    Chain chain(r, policy);
    const unsigned long d = inst.d;
    const R D = n(d);
    const Rational L = inst.L;
    const RealFn h = h_or_variant(inst);
    auto logE = [d](long bits) { return R(1L) + log_of(d, bits); };

    auto w_lhs = [=](const RealFn& hx) {
        return [=](long bits) { return D * (hx(bits) + c("log2.W.logd") * log_of(d, bits) + c("log2.W.const")); };
    };
    auto w_rhs = [=](long bits) { return c("log2.W.rhs") * (log(R(L), bits) + D * log_of(d, bits)); };
    chain.add("d (h(xi) + 4 log d + 12) <= 13 (log L + d log d)" + h_label(inst), w_lhs(h), Relation::le, w_rhs);
    if (inst.h_xi) {
        TheoremInstance variant{inst.d, inst.L, std::nullopt};
        chain.add("d (h(xi) + 4 log d + 12) <= 13 (log L + d log d)" + h_label(variant), w_lhs(h_or_variant(variant)),
                  Relation::le, w_rhs, false);
    }

    chain.add("3.3 d log(d+2) + log(ed) < 5 d (1 + log d)",
              [=](long bits) { return c("U.coef") * D * log_of(d + 2, bits) + logE(bits); }, Relation::lt,
              [=](long bits) { return c("log2.U.rhs") * D * logE(bits); });

    chain.add("d + 2E|theta| + 6 log E <= 11 d",
              [=](long bits) {
                  const R E = const_e(bits) * D;
                  return D + c("V.theta") * E * const_log2(bits) + c("V.logE") * logE(bits);
              },
              Relation::le, [=](long) { return c("log2.V.rhs") * D; });

    chain.add_exact("211 * 13 * 11 * 5 <= 151000", K("main") * K("log2.W.rhs") * K("log2.V.rhs") * K("log2.U.rhs"),
                    Relation::le, K("log2.alg"));

    // Substituting A = e, E = ed, |theta|_+ = 1 into the W numerator gives 6 log d, not 4 log d.
    chain.add("loglog A + 4 log D + 2 log(E|theta|_+) + 10 <= 4 log d + 12 (W numerator at this instantiation)",
              [=](long bits) {
                  return c("W.logD") * log_of(d, bits) + c("W.theta") * logE(bits) + c("W.const");
              },
              Relation::le, [=](long bits) { return c("log2.W.logd") * log_of(d, bits) + c("log2.W.const"); },
              false);

    add_end_to_end(chain, preset_thm3(d, h), Target::log2, inst);
    return r;
}

ChainReport chain_check_thm4(const TheoremInstance& inst, const PrecisionPolicy& policy) {
    require_instance(inst);
    ChainReport r;
    r.name = "e: d=" + std::to_string(inst.d) + " L=" + to_string(inst.L);
    Chain chain(r, policy);
    const unsigned long d = inst.d;
    const R D = n(d);
    const Rational L = inst.L;
    const ParamInputs in = preset_thm4(d, L);
    auto logA = in.logA;
    auto logE = in.logE;

    chain.add("3 loglog A + 6 log d + 12 <= 9 log E",
              [=](long bits) {
                  return c("e.W.loglogA") * log(logA(bits), bits) + c("e.W.logd") * log_of(d, bits) + c("e.W.const");
              },
              Relation::le, [=](long bits) { return c("e.W.rhs") * logE(bits); });

    chain.add("3.3 d log(d+2) + log E <= (10/3) d log E",
              [=](long bits) { return c("U.coef") * D * log_of(d + 2, bits) + logE(bits); }, Relation::le,
              [=](long bits) { return c("e.U.rhs") * D * logE(bits); });

    chain.add("d log A + 2E|theta| + 6 log E <= 12 (d + log L)",
              [=](long bits) {
                  const R E = exp(logE(bits), bits);
                  return D * logA(bits) + c("V.theta") * E + c("V.logE") * logE(bits);
              },
              Relation::le, [=](long bits) { return c("e.V.rhs") * (D + log(R(L), bits)); });

    chain.add_exact("211 * 9 * 12 * (10/3) <= 76000", K("main") * K("e.W.rhs") * K("e.V.rhs") * K("e.U.rhs"),
                    Relation::le, K("e.alg"));

    add_end_to_end(chain, in, Target::e, inst);
    return r;
}

ChainReport chain_check_thm5(const Theorem5Input& in, const PrecisionPolicy& policy) {
    if (in.D == 0) throw DomainError("D must be positive");
    ChainReport r;
    r.name = "exp(beta) - alpha: D=" + std::to_string(in.D);
    Chain chain(r, policy);
    const unsigned long Dn = in.D;
    const R D = n(Dn);

    const RealFn beta_term = [=](long bits) { return in.abs_beta(bits) * exp(in.logE(bits), bits) / D; };
    if (in.logA_from_beta) {
        chain.add("h(alpha) <= |beta| E / D = log A", in.h_alpha, Relation::le, beta_term);
        chain.add("log E / D <= |beta| E / D = log A", [=](long bits) { return in.logE(bits) / D; }, Relation::le,
                  beta_term);
    } else {
        chain.add("h(alpha) <= log A", in.h_alpha, Relation::le, in.logA);
        chain.add("log E / D <= log A", [=](long bits) { return in.logE(bits) / D; }, Relation::le, in.logA);
        chain.add("|beta| E / D <= log A", beta_term, Relation::le, in.logA);
    }
    chain.add("E >= e", exact(1), Relation::le, in.logE);

    chain.add("h(beta) + loglog A + 4 log D + 2 log(E|beta|_+) + 10 <= 12 (h(beta) + log+ log A + log D + log E)",
              [=](long bits) {
                  const R logE = in.logE(bits);
                  return in.h_beta(bits) + log(in.logA(bits), bits) + c("W.logD") * log(D, bits) +
                         c("W.theta") * (logE + log_plus(in.abs_beta(bits), bits)) + c("W.const");
              },
              Relation::le,
              [=](long bits) {
                  return c("t5.W.rhs") *
                         (in.h_beta(bits) + log_plus(in.logA(bits), bits) + log(D, bits) + in.logE(bits));
              });

    chain.add("D log A + 2E|beta| + 6 log E <= 9 D log A",
              [=](long bits) {
                  const R logE = in.logE(bits);
                  return D * in.logA(bits) + c("V.theta") * exp(logE, bits) * in.abs_beta(bits) +
                         c("V.logE") * logE;
              },
              Relation::le, [=](long bits) { return c("t5.V.rhs") * D * in.logA(bits); });

    chain.add("9 * 12 (3.3 D log(D+2) + log E) <= 500 (D log D + log E)",
              [=](long bits) {
                  return c("t5.V.rhs") * c("t5.W.rhs") * (c("U.coef") * D * log_of(Dn + 2, bits) + in.logE(bits));
              },
              Relation::le, [=](long bits) { return c("t5.U.rhs") * (D * log(D, bits) + in.logE(bits)); });

    chain.add_exact("211 * 500 <= 105500", K("main") * K("t5.U.rhs"), Relation::le, K("t5"));

    ParamInputs main;
    main.D = Dn;
    main.logA = in.logA;
    main.logB = in.h_beta;
    main.logE = in.logE;
    main.theta = [abs_beta = in.abs_beta](long bits) { return CertifiedComplex(abs_beta(bits)); };
    chain.add("main estimate with theta = beta >= stated bound",
              [=](long bits) { return theorem5_log_bound(Theorem5Kind::exp_minus_alpha, in, bits); }, Relation::le,
              [main](long bits) { return theorem1_log_bound(main, bits); }, false);
    return r;
}

ChainReport chain_check_main_estimate(const BoundParams& p, const PrecisionPolicy& policy) {
    ChainReport r;
    r.name = "closing chain: D=" + std::to_string(p.D()) + " L=" + p.L.get_str();
    for (const auto& chk : p.checks) {
        ChainItem item;
        item.label = chk.label;
        item.verdict = chk.verdict;
        item.lhs = chk.lhs;
        item.rhs = chk.rhs;
        item.strict = chk.label.find('<') != std::string::npos && chk.label.find("<=") == std::string::npos;
        r.items.push_back(std::move(item));
    }
    Chain chain(r, policy);

    auto memo = std::make_shared<std::map<long, ParamValues>>();
    const ParamInputs in = p.inputs;
    auto at = [memo, in](long bits) -> const ParamValues& {
        auto it = memo->find(bits);
        if (it == memo->end()) it = memo->emplace(bits, evaluate_params(in, bits)).first;
        return it->second;
    };
    const unsigned long Dn = p.D();
    const R D = n(Dn);
    const R S = z(p.S), S1 = z(p.S1), T = z(p.T), T1 = z(p.T1), H = z(p.H), L = z(p.L);
    const R half(Rational(1, 2));
    auto DUVW = [at, D](long bits) {
        const auto& v = at(bits);
        return D * v.U * v.V * v.W;
    };
    auto DUVW_logE = [at, D](long bits) {
        const auto& v = at(bits);
        return D * v.U * v.V * v.W_num;
    };
    // D log A + 2E|theta| + 2
    auto v_block = [at, D](long bits) {
        const auto& v = at(bits);
        return D * v.logA + c("V.theta") * v.E * v.abs_theta + R(2L);
    };
    auto log1p_s1h = [=](long bits) { return log(R(1L) + S1 / H, bits); };

    // parameter sizes
    chain.add("T + 1 <= 20.2 DVW + 1", exact(Rational(p.T + 1)), Relation::le, [=](long bits) {
        const auto& v = at(bits);
        return c("close.T") * D * v.V * v.W + R(1L);
    });
    chain.add("20.2 DVW + 1 <= (20.2 + 1/12) DVW",
              [=](long bits) {
                  const auto& v = at(bits);
                  return c("close.T") * D * v.V * v.W + R(1L);
              },
              Relation::le,
              [=](long bits) {
                  const auto& v = at(bits);
                  return (c("close.T") + c("close.T.slack")) * D * v.V * v.W;
              });
    chain.add("T1 + 1/2 <= 5.2 U", exact(Rational(p.T1) + Rational(1, 2)), Relation::le,
              [=](long bits) { return c("close.T1") * at(bits).U; });

    // first block
    chain.add("S1 <= 12.25 DW", exact(Rational(p.S1)), Relation::le,
              [=](long bits) { return c("close.S1") * D * at(bits).W; });
    chain.add("D log A + 2E|theta| + 2 <= V log E", v_block, Relation::le, [=](long bits) { return at(bits).V_num; });
    chain.add("1/2 S1 (T1 + 1/2)(D log A + 2E|theta| + 2) <= 31.85 DUVW log E",
              [=](long bits) { return half * S1 * (T1 + half) * v_block(bits); }, Relation::le,
              [=](long bits) { return c("close.block1") * DUVW_logE(bits); });

    // second block
    chain.add("log(1 + S1/H) <= log(1 + 12.25 D / log E)", log1p_s1h, Relation::le,
              [=](long bits) { return log(R(1L) + c("close.S1") * D / at(bits).logE, bits); });
    // Compared through the arguments (log is increasing); equality occurs at D = 1, E = e.
    chain.add("log(1 + 12.25 D / log E) <= log 13.25 + log D",
              [=](long bits) { return R(1L) + c("close.S1") * D / at(bits).logE; }, Relation::le,
              [=](long) { return c("close.log13") * D; });
    chain.add("log 13.25 <= 2.6", [](long bits) { return log(c("close.log13"), bits); }, Relation::le,
              exact(K("close.log13.up")));
    auto block2_mid = [=](long bits) {
        const auto& v = at(bits);
        const R VW = v.V * v.W;
        return c("close.block2") * (D * D * VW * v.log_D + c("close.block2.mid") * D * D * VW + D * VW * v.logE);
    };
    auto block2_lhs = [=](long bits) {
        const auto& v = at(bits);
        return D * T * log1p_s1h(bits) + D * T + T * v.logE;
    };
    chain.add("DT log(1 + S1/H) + DT + T log E <= 20.2 (D^2 VW log D + 3.6 D^2 VW + DVW log E)", block2_lhs,
              Relation::le, block2_mid);
    chain.add("20.2 (D^2 VW log D + 3.6 D^2 VW + DVW log E) <= 20.2 DVW (log E + 3.3 D log(D+2))", block2_mid,
              Relation::le, [=](long bits) {
                  const auto& v = at(bits);
                  return c("close.block2") * D * v.V * v.W * (v.logE + c("U.coef") * D * log_of(Dn + 2, bits));
              });
    chain.add("DT log(1 + S1/H) + DT + T log E <= 20.2 DUVW log E", block2_lhs, Relation::le,
              [=](long bits) { return c("close.block2") * DUVW_logE(bits); });

    // size of U and V
    chain.add("U <= 1 + 3.3 D log(D+2)  (equivalently 1 <= log E)", exact(1), Relation::le,
              [=](long bits) { return at(bits).logE; });
    chain.add("1 + 3.3 D log(D+2) <= 4.7 D^(3/2)",
              [=](long bits) { return R(1L) + c("U.coef") * D * log_of(Dn + 2, bits); }, Relation::le,
              [=](long bits) { return c("close.U.up") * D * sqrt(D, bits); });
    chain.add("V <= 9.8 E|theta|_+ D log A", [=](long bits) { return at(bits).V; }, Relation::le, [=](long bits) {
        const auto& v = at(bits);
        return c("close.V.up") * v.E * v.theta_plus * D * v.logA;
    });

    // third block
    chain.add("S T1 <= 50 U^2 V", exact(Rational(p.S * p.T1)), Relation::le, [=](long bits) {
        const auto& v = at(bits);
        return c("close.ST1") * v.U * v.U * v.V;
    });
    chain.add("log(50 U^2 V E|theta|_+) <= loglog A + 4 log D + 2 log(E|theta|_+) + 10",
              [=](long bits) {
                  const auto& v = at(bits);
                  return log(c("close.ST1") * v.U * v.U * v.V, bits) + v.log_e_theta_plus;
              },
              Relation::le,
              [=](long bits) {
                  const auto& v = at(bits);
                  return v.log_log_A + c("W.logD") * v.log_D + c("W.theta") * v.log_e_theta_plus + c("W.const");
              });
    chain.add("DS (log B + log S + log(E|theta|_+ T1)) <= 10.5 DUVW log E",
              [=](long bits) {
                  const auto& v = at(bits);
                  return D * S * (v.logB + log(S, bits) + v.log_e_theta_plus + log(T1, bits));
              },
              Relation::le, [=](long bits) { return c("close.block3") * DUVW_logE(bits); });

    // log L
    chain.add("log L <= log(211 DUVW)", [=](long bits) { return log(L, bits); }, Relation::le,
              [=](long bits) { return log(c("main") * DUVW(bits), bits); });
    chain.add("log(211 DUVW) <= 10 + 3.5 log D + log(E|theta|_+) + loglog A + log W",
              [=](long bits) { return log(c("main") * DUVW(bits), bits); }, Relation::le,
              [=](long bits) {
                  const auto& v = at(bits);
                  return c("W.const") + c("close.logL.D") * v.log_D + v.log_e_theta_plus + v.log_log_A + log(v.W, bits);
              });
    chain.add("10 + 3.5 log D + log(E|theta|_+) + loglog A + log W <= W log E + log W",
              [=](long bits) {
                  const auto& v = at(bits);
                  return c("W.const") + c("close.logL.D") * v.log_D + v.log_e_theta_plus + v.log_log_A + log(v.W, bits);
              },
              Relation::le,
              [=](long bits) {
                  const auto& v = at(bits);
                  return v.W_num + log(v.W, bits);
              });
    chain.add("W log E + log W <= 1.4 W log E",
              [=](long bits) {
                  const auto& v = at(bits);
                  return v.W_num + log(v.W, bits);
              },
              Relation::le, [=](long bits) { return c("close.logL.W") * at(bits).W_num; });
    chain.add("1.4 W log E <= 0.24 UVW log E", [=](long bits) { return c("close.logL.W") * at(bits).W_num; },
              Relation::le, [=](long bits) {
                  const auto& v = at(bits);
                  return c("close.logL.UVW") * v.U * v.V * v.W_num;
              });

    // fourth block
    chain.add("DSH <= 15.75 DUVW log E", exact(Rational(Integer(Dn) * p.S * p.H)), Relation::le,
              [=](long bits) { return c("close.DSH") * DUVW_logE(bits); });
    chain.add("DH <= 1.5 DW log E", exact(Rational(Integer(Dn) * p.H)), Relation::le,
              [=](long bits) { return c("H.coef") * D * at(bits).W_num; });
    chain.add("1.5 DW log E <= 0.25 DUVW log E", [=](long bits) { return c("H.coef") * D * at(bits).W_num; },
              Relation::le, [=](long bits) { return c("close.DH") * DUVW_logE(bits); });
    chain.add("S log E <= 10.5 UV log E", [=](long bits) { return S * at(bits).logE; }, Relation::le,
              [=](long bits) {
                  const auto& v = at(bits);
                  return c("S.coef") * v.U * v.V * v.logE;
              });
    chain.add("10.5 UV log E <= 5.25 DUVW log E",
              [=](long bits) {
                  const auto& v = at(bits);
                  return c("S.coef") * v.U * v.V * v.logE;
              },
              Relation::le, [=](long bits) { return c("close.SlogE") * DUVW_logE(bits); });
    chain.add("log(2E) <= 2 log E", [=](long bits) { return log(R(2L), bits) + at(bits).logE; }, Relation::le,
              [=](long bits) { return R(2L) * at(bits).logE; });
    chain.add("2 log E <= (1/6) DUVW log E", [=](long bits) { return R(2L) * at(bits).logE; }, Relation::le,
              [=](long bits) { return c("close.log2E") * DUVW_logE(bits); });
    chain.add("D log L <= 0.24 DUVW log E", [=](long bits) { return D * log(L, bits); }, Relation::le,
              [=](long bits) { return c("close.logL.UVW") * DUVW_logE(bits); });
    chain.add_exact("0.25 + 0.24 <= 0.49", K("close.DH") + K("close.logL.UVW"), Relation::le, K("close.DH.logL"));
    chain.add_exact("15.75 * 107/103 + 5.25 + 0.49 + 1/6 < 22.28",
                    K("close.DSH") * K("lemma4.ratio") + K("close.SlogE") + K("close.DH.logL") + K("close.log2E"), Relation::lt,
                    K("close.block4"));
    chain.add("DH + (107/103) DSH + S log E + log(2E) + D log L < 22.28 DUVW log E",
              [=](long bits) {
                  const auto& v = at(bits);
                  return D * H + c("lemma4.ratio") * D * S * H + S * v.logE + log(R(2L), bits) + v.logE +
                         D * log(L, bits);
              },
              Relation::lt, [=](long bits) { return c("close.block4") * DUVW_logE(bits); });

    // closing
    chain.add_equal("31.85 + 20.2 + 10.5 + 22.28 = 84.83",
                    K("close.block1") + K("close.block2") + K("close.block3") + K("close.block4"), K("close.total"));
    chain.add("84.83 DUVW log E < (L/2) log E", [=](long bits) { return c("close.total") * DUVW_logE(bits); },
              Relation::lt, [=](long bits) { return L / R(2L) * at(bits).logE; });

    // rank argument
    chain.add("24 DW <= 2 S1 + 1", [=](long bits) { return c("close.S1.low") * D * at(bits).W; }, Relation::le,
              exact(Rational(2 * p.S1 + 1)));
    chain.add("2 T1 + 1 <= 10.4 U", exact(Rational(2 * p.T1 + 1)), Relation::le,
              [=](long bits) { return c("close.T1.up") * at(bits).U; });
    chain.add("10.5 UV <= S + 1",
              [=](long bits) {
                  const auto& v = at(bits);
                  return c("S.coef") * v.U * v.V;
              },
              Relation::le, exact(Rational(p.S + 1)));
    chain.add("T <= 20.2 DVW", exact(Rational(p.T)), Relation::le, [=](long bits) {
        const auto& v = at(bits);
        return c("close.T") * D * v.V * v.W;
    });
    chain.add_exact("(T + 2 S1 + 1)(2 T1 + 1) < (S + 1)(2 S1 + 1)", Rational((p.T + 2 * p.S1 + 1) * (2 * p.T1 + 1)),
                    Relation::lt, Rational((p.S + 1) * (2 * p.S1 + 1)));
    chain.add_exact("(104/105)(101/120 + 1/6) < 1", K("close.ratio.a") * (K("close.ratio.b") + Rational(1, 6)),
                    Relation::lt, Rational(1));
    return r;
}

}  // namespace tmeasure
