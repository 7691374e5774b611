#include "tmeasure/cli.hpp"

#include "tmeasure/report.hpp"
#include "tmeasure/samplers.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace tmeasure::cli {

namespace {

using report::Json;

struct Globals {
    std::string precision = "1e-20";
    long max_precision = default_max_bits();
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    unsigned long long cap = kDefaultSearchCap;
    std::string preset;
    std::string out;

    Rational width() const {
        Rational w = parse_rational(precision);
        if (w <= 0) throw DomainError("--precision must be positive");
        return w;
    }
    int digits() const {
        const double w = width().get_d();
        return std::clamp(static_cast<int>(std::ceil(-std::log10(w))) + 4, 8, 200);
    }
    PrecisionPolicy policy() const {
        if (max_precision < 64) throw DomainError("--max-precision must be at least 64 bits");
        PrecisionPolicy p;
        p.max_bits = max_precision;
        return p;
    }
};

class Run {
public:
    Run(std::string command, int digits) : digits_(digits) {
        doc_["command"] = std::move(command);
        doc_["input"] = nullptr;
        doc_["precision"] = nullptr;
        doc_["results"] = Json::object();
        doc_["checks"] = Json::array();
    }

    Json& doc() { return doc_; }
    Json& results() { return doc_["results"]; }
    int digits() const { return digits_; }

    void check(const std::string& label, Verdict v, const std::optional<CertifiedReal>& lhs = std::nullopt,
               const std::optional<CertifiedReal>& rhs = std::nullopt) {
        Json c;
        c["label"] = label;
        c["verdict"] = verdict_name(v);
        if (lhs && v != Verdict::inconclusive) c["lhs"] = report::interval(*lhs, digits_);
        if (rhs && v != Verdict::inconclusive) c["rhs"] = report::interval(*rhs, digits_);
        doc_["checks"].push_back(std::move(c));
        if (v == Verdict::fail) fail_ = true;
        if (v == Verdict::inconclusive) inconclusive_ = true;
    }
    void check(const std::string& label, bool pass) { check(label, pass ? Verdict::pass : Verdict::fail); }

    int code() const { return fail_ ? kFail : inconclusive_ ? kInconclusive : kPass; }

private:
    Json doc_;
    int digits_;
    bool fail_ = false;
    bool inconclusive_ = false;
};

std::string trim(std::string s) {
    const auto b = s.find_first_not_of(" \t");
    const auto e = s.find_last_not_of(" \t");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

template <class T, class F>
std::vector<T> split(const std::string& text, F&& parse_item) {
    std::vector<T> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(parse_item(item));
    }
    return out;
}

unsigned long parse_count(const std::string& s) {
    const Rational q = parse_rational(s);
    if (q.get_den() != 1 || q < 0 || !q.get_num().fits_ulong_p()) throw DomainError("expected a nonnegative integer: " + s);
    return q.get_num().get_ui();
}

// "1,2,5..8", or "all" for 1..10, 100, 10^4.
std::vector<unsigned long> parse_index_list(const std::string& text) {
    if (text == "all") {
        std::vector<unsigned long> v;
        for (unsigned long d = 1; d <= 10; ++d) v.push_back(d);
        v.push_back(100);
        v.push_back(10000);
        return v;
    }
    std::vector<unsigned long> out;
    for (const auto& part : split<std::string>(text, [](const std::string& s) { return s; })) {
        const auto dots = part.find("..");
        if (dots == std::string::npos) {
            out.push_back(parse_count(part));
            continue;
        }
        const unsigned long a = parse_count(part.substr(0, dots));
        const unsigned long b = parse_count(part.substr(dots + 2));
        for (unsigned long k = a; k <= b; ++k) out.push_back(k);
    }
    if (out.empty()) throw DomainError("empty index list");
    return out;
}

// Rational, "pi", "e", "log2", or "log(q)".
RealFn parse_real(const std::string& raw) {
    const std::string s = trim(raw);
    if (auto c = parse_constant(s)) return [k = *c](long bits) { return constant_value(k, bits); };
    if (s.rfind("log(", 0) == 0 && s.back() == ')') {
        const Rational q = parse_rational(s.substr(4, s.size() - 5));
        if (q <= 0) throw DomainError("log of a nonpositive number: " + s);
        return [q](long bits) { return log(CertifiedReal(q), bits); };
    }
    return exact(parse_rational(s));
}

// Rational, "log2", "pi*i", or "<q>i".
ThetaSpec parse_theta(const std::string& raw) {
    const std::string s = trim(raw);
    if (s == "log2") return ThetaSpec::log2();
    if (s == "pi*i" || s == "pi_i" || s == "i*pi") return ThetaSpec::pi_i();
    if (!s.empty() && s.back() == 'i') {
        const Rational q = parse_rational(s.substr(0, s.size() - 1));
        ThetaSpec t;
        t.theta = exact_complex(0, q);
        t.exp_theta = [q](long bits) {
            const CertifiedReal x(q);
            return CertifiedComplex(cos(x, bits), sin(x, bits));
        };
        t.name = s;
        return t;
    }
    return ThetaSpec::rational(parse_rational(s));
}

Target parse_target_or_throw(const std::string& s) {
    if (auto t = parse_target(s)) return *t;
    throw DomainError("unknown target '" + s + "' (pi, log2, e)");
}

Form parse_form(const std::string& s) {
    if (s == "poly" || s == "polynomial") return Form::polynomial;
    if (s == "alg" || s == "algebraic") return Form::algebraic;
    throw DomainError("unknown form '" + s + "' (poly, alg)");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Json rationals(const std::vector<Rational>& v) {
    Json a = Json::array();
    for (const auto& q : v) a.push_back(to_string(q));
    return a;
}

Json integers(const std::vector<unsigned long>& v) {
    Json a = Json::array();
    for (auto x : v) a.push_back(x);
    return a;
}

CertifiedReal refined(const RealFn& f, const Globals& g, const std::string& what) {
    return refine_to_width(f, g.width(), g.policy(), what);
}

// ---- commands ----

struct HeightOpts {
    std::string minpoly;
    std::string rational;
};

void run_height(Run& run, const Globals& g, const HeightOpts& o) {
    IntPolynomial p;
    if (!o.rational.empty()) p = AlgebraicNumber::rational(parse_rational(o.rational)).minpoly();
    else if (!o.minpoly.empty()) p = IntPolynomial::parse(o.minpoly).normalized();
    else throw DomainError("height needs --minpoly or --rational");
    if (p.degree() < 1) throw DomainError("minimal polynomial must have degree >= 1");
    if (!is_irreducible(p, g.policy())) throw DomainError("polynomial is reducible over Q: " + p.to_string());
    const CertifiedReal h = height_of_minpoly(p, g.width(), g.policy());
    auto& r = run.results();
    r["minpoly"] = report::polynomial(p);
    r["degree"] = p.degree();
    r["length"] = p.length().get_str();
    r["height"] = report::interval(h, run.digits());
    const HeightLengthCheck chk = check_height_length(p, g.policy());
    run.check("h(alpha) <= d^-1 log L(alpha)", chk.verdict, chk.height, chk.bound);
}

struct MeasureOpts {
    std::string target = "pi";
    std::string form = "poly";
    unsigned long d = 1;
    std::string L = "3";
    bool constants = false;
};

void run_measure(Run& run, const Globals& g, const MeasureOpts& o) {
    MeasureQuery q{parse_target_or_throw(o.target), parse_form(o.form), o.d, parse_rational(o.L)};
    const CertifiedReal b = refined([&](long bits) { return measure_bound(q, bits); }, g, "measure-bound");
    auto& r = run.results();
    r["target"] = o.target;
    r["form"] = q.form == Form::polynomial ? "polynomial" : "algebraic";
    r["d"] = q.d;
    r["L"] = to_string(q.L);
    r["log_bound"] = report::interval(b, run.digits());
    if (q.form == Form::algebraic)
        r["phi"] = report::interval(refined([&](long bits) { return measure_phi(q.target, q.d, q.L, bits); }, g, "phi"),
                                    run.digits());
    if (o.constants) r["constants"] = report::constants();
}

struct ParamOpts {
    unsigned long D = 0;
    std::string logA, logB, logE, theta;
    unsigned long d = 1;
    std::string h = "log(3)";
    std::string L = "10";
};

ParamInputs inputs_from(const Globals& g, const ParamOpts& o, unsigned long d) {
    if (g.preset == "thm2") return preset_thm2(d, parse_real(o.h));
    if (g.preset == "thm3") return preset_thm3(d, parse_real(o.h));
    if (g.preset == "thm4") return preset_thm4(d, parse_rational(o.L));
    if (g.preset == "thm5") {
        const Theorem5Input t = preset_thm5(d);
        ParamInputs in;
        in.D = t.D;
        in.logA = t.logA;
        in.logB = t.h_beta;
        in.logE = t.logE;
        in.theta = [abs_beta = t.abs_beta](long bits) { return CertifiedComplex(abs_beta(bits)); };
        return in;
    }
    if (!g.preset.empty()) throw DomainError("unknown preset '" + g.preset + "' (thm2, thm3, thm4, thm5)");
    if (o.D == 0 || o.logA.empty() || o.logB.empty() || o.logE.empty() || o.theta.empty())
        throw DomainError("give --preset or all of --D --logA --logB --logE --theta");
    ParamInputs in;
    in.D = o.D;
    in.logA = parse_real(o.logA);
    in.logB = parse_real(o.logB);
    in.logE = parse_real(o.logE);
    in.theta = parse_theta(o.theta).theta;
    return in;
}

void run_theorem1(Run& run, const Globals& g, const ParamOpts& o) {
    const ParamInputs in = inputs_from(g, o, g.preset == "thm5" ? std::max(o.D, 1UL) : o.d);
    const BoundParams p = derive_params(in, g.policy());
    auto& r = run.results();
    r["params"] = report::bound_params(p, run.digits());
    r["log_bound"] = report::interval(refined([&](long bits) { return theorem1_log_bound(in, bits); }, g, "theorem1"),
                                      run.digits());
    for (const auto& c : p.checks) run.check(c.label, c.verdict, c.lhs, c.rhs);
}

struct T5Opts {
    unsigned long D = 1;
    std::string logA, h_alpha = "0", h_beta = "0", abs_beta = "1", logE = "1";
    std::string kind = "exp";
};

Theorem5Input t5_input(const Globals& g, const T5Opts& o) {
    if (g.preset == "thm5") return preset_thm5(o.D);
    if (!g.preset.empty()) throw DomainError("theorem5 accepts only --preset thm5");
    if (o.logA.empty()) throw DomainError("theorem5 needs --logA or --preset thm5");
    Theorem5Input in;
    in.D = o.D;
    in.logA = parse_real(o.logA);
    in.h_alpha = parse_real(o.h_alpha);
    in.h_beta = parse_real(o.h_beta);
    in.abs_beta = parse_real(o.abs_beta);
    in.logE = parse_real(o.logE);
    return in;
}

void run_theorem5(Run& run, const Globals& g, const T5Opts& o) {
    if (o.D == 0) throw DomainError("D must be positive");
    const Theorem5Input in = t5_input(g, o);
    Theorem5Kind kind;
    if (o.kind == "exp") kind = Theorem5Kind::exp_minus_alpha;
    else if (o.kind == "log") kind = Theorem5Kind::beta_minus_log;
    else throw DomainError("--kind is exp or log");
    bool ok = true;
    try {
        check_theorem5_hypothesis(in, g.policy());
    } catch (const DomainError& e) {
        ok = false;
        run.results()["hypothesis_failure"] = e.what();
    }
    run.check("log A >= max(h(alpha), log E / D, |beta| E / D), E >= e", ok);
    auto& r = run.results();
    r["kind"] = o.kind == "exp" ? "|exp(beta) - alpha|" : "|beta - log alpha|";
    r["D"] = in.D;
    r["log_bound"] = report::interval(
        refined([&](long bits) { return theorem5_log_bound(kind, in, bits); }, g, "theorem5"), run.digits());
}

struct Lemma4Opts {
    unsigned long N_max = 20, H_max = 10, sigma_max = 10;
    long x_max = 30;
};

void run_lemma4(Run& run, const Globals& g, const Lemma4Opts& o) {
    unsigned long cases = 0, f_int = 0, f42 = 0, f43 = 0, inconclusive = 0;
    Json examples = Json::array();
    auto note = [&](const std::string& what, unsigned long N, unsigned long H, unsigned long s, long x) {
        if (examples.size() < 10) examples.push_back({{"failure", what}, {"N", N}, {"H", H}, {"sigma", s}, {"x", x}});
    };
    for (unsigned long N = 0; N <= o.N_max; ++N)
        for (unsigned long H = 1; H <= o.H_max; ++H) {
            const DeltaParams p = DeltaParams::make(N, H);
            for (unsigned long s = 0; s <= o.sigma_max; ++s)
                for (long x = -o.x_max; x <= o.x_max; ++x) {
                    ++cases;
                    try {
                        const Lemma4Report rep = lemma4_check(x, p, s, g.policy());
                        if (!rep.integrality) ++f_int, note("integrality", N, H, s, x);
                        if (!rep.denominator_bound) ++f42, note("log d_sigma bound", N, H, s, x);
                        if (!rep.derivative_sum_bound) ++f43, note("derivative sum bound", N, H, s, x);
                    } catch (const InconclusivePrecision&) {
                        ++inconclusive;
                        note("inconclusive", N, H, s, x);
                    }
                }
        }
    auto& r = run.results();
    r["grid"] = {{"N_max", o.N_max}, {"H_max", o.H_max}, {"sigma_max", o.sigma_max}, {"x_max", o.x_max}};
    r["cases"] = cases;
    r["integrality_failures"] = f_int;
    r["log_d_sigma_failures"] = f42;
    r["derivative_sum_failures"] = f43;
    r["inconclusive"] = inconclusive;
    r["examples"] = std::move(examples);
    run.check("d_sigma Delta^(u)(x) integral for u <= sigma", f_int == 0);
    run.check("log d_sigma < (107/103) sigma H", f42 == 0);
    run.check("sum_u C(sigma,u)|Delta^(u)(x)| < sigma^sigma e^(N+H) (1+|x|/H)^N", f43 == 0);
    if (inconclusive) run.check("all cases decided", Verdict::inconclusive);
}

struct ZeroOpts {
    std::string instance;
    unsigned long D0 = 1, D1 = 1, S = 3, M = 2;
    std::uint64_t seed = 1;
};

void run_zero(Run& run, const Globals&, const ZeroOpts& o) {
    ZeroEstimateInstance inst;
    if (!o.instance.empty()) {
        inst = ZeroEstimateInstance::parse(read_file(o.instance));
    } else {
        Rng rng(o.seed);
        inst = random_zero_estimate(o.D0, o.D1, o.S, o.M, rng);
    }
    inst.validate();
    const Lemma2Report rep = lemma2_check(inst);
    auto& r = run.results();
    Json pts = Json::array();
    for (const auto& [x, y] : inst.points) pts.push_back({to_string(x), to_string(y)});
    r["instance"] = {{"D0", inst.D0}, {"D1", inst.D1}, {"S", inst.S}, {"M", inst.M}, {"beta", to_string(inst.beta)},
                     {"points", pts}};
    r["size_condition"] = rep.size_condition;
    r["rows"] = rep.rows;
    r["columns"] = rep.columns;
    r["rank"] = rep.rank;
    r["kernel_dim"] = rep.kernel_dim;
    r["verdict"] = rep.verdict();
    if (!rep.kernel_witness.empty()) r["kernel_witness"] = rationals(rep.kernel_witness);
    run.check("no nonzero polynomial vanishes to order S at the M points", !rep.counterexample);
}

struct ToyOpts {
    std::string toy;
    unsigned long S = 2, S1 = 2, T = 1, T1 = 1, H = 2;
    std::string alpha = "2", beta = "1";
    unsigned long entries = 0;
    std::string theta = "1";
    std::uint64_t seed = 1;
};

ToyConfig toy_from(const ToyOpts& o) {
    if (!o.toy.empty()) return ToyConfig::parse(read_file(o.toy));
    ToyConfig t;
    t.S = o.S;
    t.S1 = o.S1;
    t.T = o.T;
    t.T1 = o.T1;
    t.H = o.H;
    t.alpha = parse_rational(o.alpha);
    t.beta = parse_rational(o.beta);
    if (t.H == 0) throw DomainError("H must be positive");
    return t;
}

void run_interp(Run& run, const Globals& g, const ToyOpts& o) {
    const ToyConfig toy = toy_from(o);
    const ToyRankReport rep = toy_rank_check(toy);
    auto& r = run.results();
    r["toy"] = {{"S", toy.S}, {"S1", toy.S1}, {"T", toy.T}, {"T1", toy.T1}, {"H", toy.H},
                {"alpha", to_string(toy.alpha)}, {"beta", to_string(toy.beta)}};
    r["L"] = rep.L;
    r["rows"] = rep.rows;
    r["rank"] = rep.rank;
    r["entries_integral"] = rep.entries_integral;
    Json sel = Json::array();
    for (const auto& ri : rep.selected_rows) sel.push_back({ri.sigma, ri.s});
    r["selected_rows"] = std::move(sel);
    if (rep.minor) r["minor"] = to_string(*rep.minor);
    if (!rep.kernel_witness.empty()) r["kernel_witness"] = rationals(rep.kernel_witness);
    run.check("every entry is an integer", rep.entries_integral);
    run.check("rank = L", rep.rank == rep.L);
    if (rep.minor) run.check("selected L x L minor is nonzero", *rep.minor != 0);

    if (o.entries > 0) {
        const ThetaSpec theta = parse_theta(o.theta);
        Rng rng(o.seed);
        unsigned long pass = 0, fail = 0, inconclusive = 0;
        Json bad = Json::array();
        for (unsigned long k = 0; k < o.entries; ++k) {
            const EntryIndex idx = random_entry_index(rng);
            const EntryConsistency ec = entry_consistency_check(idx, toy.H, theta, g.width(), g.policy());
            if (ec.verdict == Verdict::pass) ++pass;
            else {
                ec.verdict == Verdict::fail ? ++fail : ++inconclusive;
                if (bad.size() < 10) bad.push_back({{"tau", idx.tau}, {"t", idx.t}, {"sigma", idx.sigma}, {"s", idx.s}});
            }
        }
        r["entry_consistency"] = {{"theta", theta.name}, {"samples", o.entries}, {"pass", pass}, {"fail", fail},
                                  {"inconclusive", inconclusive}, {"examples", bad}};
        run.check("q(theta, e^theta) meets d_sigma gamma on every sampled index",
                  fail ? Verdict::fail : inconclusive ? Verdict::inconclusive : Verdict::pass);
    }
}

struct Lemma3Opts {
    unsigned long L = 6;
    std::string logE = "2", M = "1", S = "1", epsilon = "1e-10";
    bool decay = false;
    ToyOpts toy{"", 1, 2, 1, 1, 1, "2", "1", 0, "1", 1};
};

void run_lemma3(Run& run, const Globals& g, const Lemma3Opts& o) {
    auto& r = run.results();
    if (!o.decay) {
        Lemma3Config cfg;
        cfg.L = o.L;
        cfg.logE = parse_real(o.logE);
        cfg.M = parse_rational(o.M);
        cfg.S = parse_rational(o.S);
        cfg.epsilon = parse_rational(o.epsilon);
        const CertifiedReal rhs = refined([&](long bits) { return lemma3_rhs(cfg, bits, g.policy()); }, g, "lemma3");
        r["L"] = o.L;
        r["rhs_log_det_over_L"] = report::interval(rhs, run.digits());
        return;
    }
    const ToyConfig toy = toy_from(o.toy);
    const ThetaSpec theta = parse_theta(o.toy.theta);
    const DecayReport rep = determinant_decay_check(toy, theta, parse_real(o.logE), g.policy());
    r["L"] = rep.L;
    r["theta"] = theta.name;
    r["log_det_over_L"] = report::interval(rep.log_det_over_L, run.digits());
    r["M"] = report::interval(rep.M, run.digits());
    r["rhs"] = report::interval(rep.rhs, run.digits());
    run.check("log|det| / L <= -(L/2) log E + M + S log E + log(2L) + log E", rep.pass ? Verdict::pass : Verdict::fail,
              rep.log_det_over_L, rep.rhs);
}

struct VanishOpts {
    std::string n, sigma, zeta;
    unsigned long random = 0;
    unsigned long k = 0;
    std::uint64_t seed = 1;
};

void run_vanishing(Run& run, const Globals&, const VanishOpts& o) {
    std::vector<VanishingOrderCase> cases;
    if (o.random > 0) {
        Rng rng(o.seed);
        for (unsigned long i = 0; i < o.random; ++i) {
            const std::size_t k = o.k ? o.k : static_cast<std::size_t>(1 + i % 4);
            cases.push_back(random_vanishing_case(k, rng));
        }
    } else {
        if (o.n.empty() || o.sigma.empty() || o.zeta.empty())
            throw DomainError("give --n, --sigma and --zeta, or --random");
        VanishingOrderCase c;
        c.n = split<unsigned long>(o.n, parse_count);
        c.sigma = split<unsigned long>(o.sigma, parse_count);
        c.zeta = split<Rational>(o.zeta, [](const std::string& s) { return parse_rational(s); });
        cases.push_back(std::move(c));
    }
    Json arr = Json::array();
    std::size_t failures = 0;
    for (const auto& c : cases) {
        const VanishingOrderReport rep = vanishing_order_check(c);
        Json j;
        j["n"] = integers(c.n);
        j["sigma"] = integers(c.sigma);
        j["zeta"] = rationals(c.zeta);
        j["identically_zero"] = rep.identically_zero;
        if (!rep.identically_zero) j["order"] = rep.computed_ord;
        j["lower_bound"] = rep.lower_bound;
        j["pass"] = rep.pass;
        arr.push_back(std::move(j));
        if (!rep.pass) ++failures;
    }
    run.results()["cases"] = std::move(arr);
    run.check("ord_z det >= |I|(|I|-1)/2 - sum sigma on every case", failures == 0);
}

struct ChainOpts {
    int section = 0;
    std::string d = "1";
    std::string L = "10";
    std::string h;
    unsigned long packs = 0;
    std::uint64_t seed = 1;
    bool constants = false;
};

void add_chain(Run& run, Json& arr, const ChainReport& rep) {
    arr.push_back(report::chain(rep, run.digits()));
    Verdict v = Verdict::pass;
    for (const auto& item : rep.items) {
        if (!item.gating) continue;
        if (item.verdict == Verdict::fail) v = Verdict::fail;
        else if (item.verdict == Verdict::inconclusive && v == Verdict::pass) v = Verdict::inconclusive;
    }
    run.check(rep.name, v);
}

void run_chain(Run& run, const Globals& g, const ChainOpts& o) {
    Json arr = Json::array();
    const auto policy = g.policy();
    if (o.section == 6) {
        std::vector<BoundParams> packs;
        if (o.packs > 0) {
            Rng rng(o.seed);
            packs = random_param_packs(o.packs, rng, policy);
        } else {
            if (g.preset.empty()) throw DomainError("--section 6 needs --preset or --packs");
            ParamOpts po;
            if (!o.h.empty()) po.h = o.h;
            po.L = o.L;
            for (unsigned long d : parse_index_list(o.d)) packs.push_back(derive_params(inputs_from(g, po, d), policy));
        }
        Json params = Json::array();
        for (const auto& p : packs) {
            params.push_back(report::bound_params(p, run.digits()));
            add_chain(run, arr, chain_check_main_estimate(p, policy));
        }
        run.results()["params"] = std::move(params);
    } else if (o.section != 0) {
        throw DomainError("--section accepts only 6");
    } else {
        const Rational L = parse_rational(o.L);
        for (unsigned long d : parse_index_list(o.d)) {
            TheoremInstance inst{d, L, std::nullopt};
            if (!o.h.empty()) inst.h_xi = parse_real(o.h);
            if (g.preset == "thm2") add_chain(run, arr, chain_check_thm2(inst, policy));
            else if (g.preset == "thm3") add_chain(run, arr, chain_check_thm3(inst, policy));
            else if (g.preset == "thm4") add_chain(run, arr, chain_check_thm4(inst, policy));
            else if (g.preset == "thm5") add_chain(run, arr, chain_check_thm5(preset_thm5(d), policy));
            else throw DomainError("chain-verify needs --preset thm2|thm3|thm4|thm5 or --section 6");
        }
    }
    run.results()["chains"] = std::move(arr);
    if (o.constants) run.results()["constants"] = report::constants();
}

struct SearchOpts {
    std::string target = "pi";
    std::string form = "poly";
    unsigned long d = 1;
    unsigned long L = 10;
    bool sweep = false;
    std::string log;
};

void run_search(Run& run, const Globals& g, const SearchOpts& o) {
    SearchSpace base;
    base.workers = g.workers;
    base.cap = g.cap;
    base.policy = g.policy();
    if (!o.sweep) {
        SearchSpace s = base;
        s.target = parse_target_or_throw(o.target);
        s.d_max = o.d;
        s.L_max = o.L;
        const Form form = parse_form(o.form);
        const SearchResult res = form == Form::polynomial ? enumerate_min_poly_value(s) : enumerate_min_alg_approx(s);
        MeasureQuery q{s.target, form, std::max(o.d, 1UL), Rational(static_cast<long>(std::max(o.L, 3UL)))};
        const BoundCheck chk = verify_against_bound(res, q, base.policy);
        run.results()["search"] = report::search_result(res, run.digits());
        run.results()["bound_check"] = report::bound_check(chk, run.digits());
        run.check("log(min) >= stated lower bound", chk.verdict, chk.log_value, chk.bound);
        return;
    }
    if (o.log.empty()) throw DomainError("--sweep needs --log <path>");
    std::vector<Target> targets;
    if (o.target == "all") targets = {Target::pi, Target::log2, Target::e};
    else targets = {parse_target_or_throw(o.target)};
    std::vector<Form> forms;
    if (o.form == "both") forms = {Form::polynomial, Form::algebraic};
    else forms = {parse_form(o.form)};
    std::vector<SweepCell> cells;
    for (Target t : targets)
        for (Form f : forms)
            for (unsigned long d = 1; d <= o.d; ++d)
                for (unsigned long L = 1; L <= o.L; ++L) cells.push_back({t, f, d, L});
    const std::size_t ran = run_sweep(cells, o.log, base);
    std::map<std::string, Json> records;
    {
        std::ifstream in(o.log);
        std::string line;
        while (std::getline(in, line)) {
            auto j = Json::parse(line, nullptr, false);
            if (!j.is_discarded() && j.contains("cell")) records[j["cell"].get<std::string>()] = j;
        }
    }
    Json arr = Json::array();
    for (const auto& cell : cells) {
        auto it = records.find(cell.key());
        if (it == records.end()) {
            run.check(cell.key(), Verdict::inconclusive);
            continue;
        }
        const std::string v = it->second["check"]["verdict"].get<std::string>();
        run.check(cell.key(), v == "pass" ? Verdict::pass : v == "fail" ? Verdict::fail : Verdict::inconclusive);
        arr.push_back(it->second);
    }
    run.results()["cells_run"] = ran;
    run.results()["cells"] = std::move(arr);
}

struct LiouvilleOpts {
    std::string f;
    std::string minpoly;
    std::string rational;
    std::size_t root = 0;
};

void run_liouville(Run& run, const Globals& g, const LiouvilleOpts& o) {
    if (o.f.empty()) throw DomainError("liouville needs --f");
    const IntPolynomial f = IntPolynomial::parse(o.f);
    AlgebraicNumber alpha = !o.rational.empty() ? AlgebraicNumber::rational(parse_rational(o.rational))
                            : !o.minpoly.empty()
                                ? AlgebraicNumber::from_minpoly(IntPolynomial::parse(o.minpoly).normalized(), o.root,
                                                                g.policy())
                                : throw DomainError("liouville needs --minpoly or --rational");
    const LiouvilleCheck chk = liouville_check(f, alpha, g.policy());
    auto& r = run.results();
    r["f"] = report::polynomial(f);
    r["alpha_minpoly"] = report::polynomial(alpha.minpoly());
    r["alpha"] = report::interval(alpha.which_root().root, run.digits());
    if (chk.verdict != Verdict::inconclusive) {
        r["log_abs_f_alpha"] = report::interval(chk.log_value, run.digits());
        r["bound"] = report::interval(chk.bound, run.digits());
    }
    run.check("log|f(alpha)| >= -(D'-1) log L(f) - D' N h(alpha)", chk.verdict, chk.log_value, chk.bound);
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Certified evaluation and verification of explicit transcendence measures.", "tmeasure"};
    app.fallthrough();
    app.require_subcommand(1);
    app.set_config("--config", "", "key = value file mirroring the flags");

    Globals g;
    app.add_option("--precision", g.precision, "target width of reported intervals (e.g. 1e-30)");
    app.add_option("--max-precision", g.max_precision, "precision ceiling in bits")
        ->envname("TMEASURE_MAX_PRECISION");
    app.add_option("--workers", g.workers, "worker threads for search")->check(CLI::PositiveNumber);
    app.add_option("--cap", g.cap, "largest search space accepted");
    app.add_option("--preset", g.preset, "thm2 | thm3 | thm4 | thm5");
    app.add_option("--out", g.out, "write the JSON report here instead of stdout");

    HeightOpts ho;
    auto* height = app.add_subcommand("height", "absolute logarithmic Weil height of an algebraic number");
    height->add_option("--minpoly", ho.minpoly, "coefficients, leading first (1,0,-2 for x^2-2)");
    height->add_option("--rational", ho.rational, "rational number p/q");

    MeasureOpts mo;
    auto* measure = app.add_subcommand("measure-bound", "stated lower bound on the log scale");
    measure->add_option("--target", mo.target, "pi | log2 | e");
    measure->add_option("--form", mo.form, "poly | alg");
    measure->add_option("--d", mo.d, "degree bound")->check(CLI::PositiveNumber);
    measure->add_option("--L", mo.L, "length bound (>= 3)");
    measure->add_flag("--constants", mo.constants, "include the constants table");

    ParamOpts po;
    auto* t1 = app.add_subcommand("theorem1", "parameter derivation and the main estimate");
    t1->add_option("--D", po.D);
    t1->add_option("--logA", po.logA);
    t1->add_option("--logB", po.logB);
    t1->add_option("--logE", po.logE);
    t1->add_option("--theta", po.theta, "rational, log2, pi*i or <q>i");
    t1->add_option("--d", po.d, "degree for presets")->check(CLI::PositiveNumber);
    t1->add_option("--h-xi", po.h, "h(xi) for thm2/thm3 presets");
    t1->add_option("--L", po.L, "length for the thm4 preset");

    T5Opts t5o;
    auto* t5 = app.add_subcommand("theorem5", "bounds for |exp(beta) - alpha| and |beta - log alpha|");
    t5->add_option("--D", t5o.D);
    t5->add_option("--logA", t5o.logA);
    t5->add_option("--h-alpha", t5o.h_alpha);
    t5->add_option("--h-beta", t5o.h_beta);
    t5->add_option("--abs-beta", t5o.abs_beta);
    t5->add_option("--logE", t5o.logE);
    t5->add_option("--kind", t5o.kind, "exp | log");

    Lemma4Opts l4o;
    auto* l4 = app.add_subcommand("lemma4-verify", "integrality and size of binomial polynomial derivatives");
    l4->add_option("--N-max", l4o.N_max);
    l4->add_option("--H-max", l4o.H_max);
    l4->add_option("--sigma-max", l4o.sigma_max);
    l4->add_option("--x-max", l4o.x_max);

    ZeroOpts zo;
    auto* zero = app.add_subcommand("zero-estimate", "exact kernel of the vanishing conditions");
    zero->add_option("--instance", zo.instance, "instance file");
    zero->add_option("--D0", zo.D0);
    zero->add_option("--D1", zo.D1);
    zero->add_option("--S", zo.S);
    zero->add_option("--M", zo.M);
    zero->add_option("--seed", zo.seed);

    ToyOpts to;
    auto* interp = app.add_subcommand("interp-demo", "toy interpolation matrix: integrality, rank, minor");
    interp->add_option("--toy", to.toy, "toy configuration file");
    interp->add_option("--S", to.S);
    interp->add_option("--S1", to.S1);
    interp->add_option("--T", to.T);
    interp->add_option("--T1", to.T1);
    interp->add_option("--H", to.H);
    interp->add_option("--alpha", to.alpha);
    interp->add_option("--beta", to.beta);
    interp->add_option("--entries", to.entries, "sampled entry consistency checks");
    interp->add_option("--theta", to.theta, "1, log2, 1/2, ...");
    interp->add_option("--seed", to.seed);

    Lemma3Opts l3o;
    auto* l3 = app.add_subcommand("lemma3-bound", "analytic upper bound for log|det| / L");
    l3->add_option("--L", l3o.L);
    l3->add_option("--logE", l3o.logE);
    l3->add_option("--M", l3o.M);
    l3->add_option("--S", l3o.S);
    l3->add_option("--epsilon", l3o.epsilon);
    l3->add_flag("--decay", l3o.decay, "check a toy gamma determinant against the bound");
    l3->add_option("--toy", l3o.toy.toy);
    l3->add_option("--toy-S", l3o.toy.S);
    l3->add_option("--toy-S1", l3o.toy.S1);
    l3->add_option("--toy-T", l3o.toy.T);
    l3->add_option("--toy-T1", l3o.toy.T1);
    l3->add_option("--toy-H", l3o.toy.H);
    l3->add_option("--theta", l3o.toy.theta);

    VanishOpts vo;
    auto* van = app.add_subcommand("vanishing-order", "order at z = 0 of det((zeta z)^n derivatives)");
    van->add_option("--n", vo.n, "exponents");
    van->add_option("--sigma", vo.sigma, "derivative orders");
    van->add_option("--zeta", vo.zeta, "points");
    van->add_option("--random", vo.random, "number of random cases");
    van->add_option("--k", vo.k, "size of random cases (default cycles 1..4)");
    van->add_option("--seed", vo.seed);

    ChainOpts co;
    auto* chain = app.add_subcommand("chain-verify", "certified inequality chains");
    chain->add_option("--section", co.section, "6 for the closing chain of the main estimate");
    chain->add_option("--d", co.d, "degrees (or D): list, a..b, or all");
    chain->add_option("--L", co.L);
    chain->add_option("--h-xi", co.h, "h(xi): rational or log(q)");
    chain->add_option("--packs", co.packs, "random parameter packs for --section 6");
    chain->add_option("--seed", co.seed);
    chain->add_flag("--constants", co.constants, "include the constants table");

    SearchOpts so;
    auto* search = app.add_subcommand("search", "exhaustive search over integer polynomials");
    search->add_option("--target", so.target, "pi | log2 | e (all with --sweep)");
    search->add_option("--form", so.form, "poly | alg (both with --sweep)");
    search->add_option("--d", so.d);
    search->add_option("--L", so.L);
    search->add_flag("--sweep", so.sweep, "every d' <= d, L' <= L, resumable through --log");
    search->add_option("--log", so.log, "JSON-lines run log");

    LiouvilleOpts lo;
    auto* liou = app.add_subcommand("liouville", "Liouville lower bound at an algebraic point");
    liou->add_option("--f", lo.f, "coefficients of f, leading first");
    liou->add_option("--minpoly", lo.minpoly);
    liou->add_option("--rational", lo.rational);
    liou->add_option("--root", lo.root, "root index (by real part, then imaginary part)");

    std::vector<const char*> argv{"tmeasure"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kPass : kUsage;
    }

    CLI::App* sub = app.get_subcommands().front();
    Run run(sub->get_name(), 20);
    int code = kPass;
    const auto start = std::chrono::steady_clock::now();
    try {
        run = Run(sub->get_name(), g.digits());
        run.doc()["input"] = args;
        run.doc()["precision"] = {{"width", g.precision}, {"start_bits", g.policy().start_bits},
                                  {"max_bits", g.policy().max_bits}};
        const std::string name = sub->get_name();
        if (name == "height") run_height(run, g, ho);
        else if (name == "measure-bound") run_measure(run, g, mo);
        else if (name == "theorem1") run_theorem1(run, g, po);
        else if (name == "theorem5") run_theorem5(run, g, t5o);
        else if (name == "lemma4-verify") run_lemma4(run, g, l4o);
        else if (name == "zero-estimate") run_zero(run, g, zo);
        else if (name == "interp-demo") run_interp(run, g, to);
        else if (name == "lemma3-bound") run_lemma3(run, g, l3o);
        else if (name == "vanishing-order") run_vanishing(run, g, vo);
        else if (name == "chain-verify") run_chain(run, g, co);
        else if (name == "search") run_search(run, g, so);
        else if (name == "liouville") run_liouville(run, g, lo);
        code = run.code();
    } catch (const InconclusivePrecision& e) {
        run.doc()["error"] = {{"kind", "inconclusive"}, {"message", e.what()}};
        code = kInconclusive;
    } catch (const SearchCapExceeded& e) {
        err << "tmeasure: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "tmeasure: " << e.what() << '\n';
        return kUsage;
    } catch (const std::logic_error& e) {
        run.doc()["error"] = {{"kind", "internal"}, {"message", e.what()}};
        code = kFail;
    }
    const auto elapsed = std::chrono::steady_clock::now() - start;
    run.doc()["timing_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    run.doc()["status"] = code == kPass ? "pass" : code == kFail ? "fail" : "inconclusive";

    const std::string text = run.doc().dump(2);
    if (g.out.empty()) {
        out << text << '\n';
    } else {
        std::ofstream file(g.out);
        if (!file) {
            err << "tmeasure: cannot write '" << g.out << "'\n";
            return kUsage;
        }
        file << text << '\n';
    }
    return code;
}

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return dispatch(args, std::cout, std::cerr);
}

}  // namespace tmeasure::cli
