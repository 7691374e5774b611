#include "tmeasure/binomial.hpp"

#include "tmeasure/constants.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>

namespace tmeasure {

namespace {

// All derivatives Delta, Delta', ..., Delta^{(N)} for one (N, H).
struct DerivativeChain {
    std::vector<RatPolynomial> polys;
};

class DeltaCache {
public:
    const DerivativeChain& get(const DeltaParams& p) {
        const auto key = std::make_pair(p.N, p.H);
        {
            std::shared_lock lock(mutex_);
            if (auto it = chains_.find(key); it != chains_.end()) return *it->second;
        }
        auto chain = build(p);
        std::unique_lock lock(mutex_);
        auto [it, inserted] = chains_.emplace(key, std::move(chain));
        return *it->second;
    }

private:
    static RatPolynomial rising(unsigned long count) {
        // z(z+1)...(z+count-1) / count!
        RatPolynomial acc = RatPolynomial::constant(1);
        Integer fact = 1;
        for (unsigned long j = 0; j < count; ++j) {
            acc = acc * RatPolynomial::linear_root(Rational(static_cast<long>(j)));
            fact *= j + 1;
        }
        return Rational(Integer(1), fact) * acc;
    }

    static std::unique_ptr<DerivativeChain> build(const DeltaParams& p) {
        auto chain = std::make_unique<DerivativeChain>();
        RatPolynomial delta = RatPolynomial::constant(1);
        if (p.N > 0) {
            RatPolynomial block = rising(p.H);
            for (unsigned long i = 0; i < p.q; ++i) delta = delta * block;
            delta = delta * rising(p.r);
        }
        chain->polys.push_back(delta);
        for (unsigned long u = 1; u <= p.N; ++u) chain->polys.push_back(chain->polys.back().derivative());
        return chain;
    }

    std::shared_mutex mutex_;
    std::map<std::pair<unsigned long, unsigned long>, std::unique_ptr<DerivativeChain>> chains_;
};

DeltaCache& cache() {
    static DeltaCache instance;
    return instance;
}

const RatPolynomial& zero_polynomial() {
    static const RatPolynomial zero;
    return zero;
}

Integer binomial(unsigned long n, unsigned long k) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

}  // namespace

DeltaParams DeltaParams::make(unsigned long N, unsigned long H) {
    if (H == 0) throw DomainError("H must be positive");
    DeltaParams p;
    p.N = N;
    p.H = H;
    if (N > 0) {
        p.q = (N + H - 1) / H - 1;
        p.r = N - p.q * H;
    }
    return p;
}

Integer nu(unsigned long k) {
    if (k == 0) throw DomainError("nu(k) needs k >= 1");
    Integer l = 1;
    for (unsigned long m = 2; m <= k; ++m) mpz_lcm_ui(l.get_mpz_t(), l.get_mpz_t(), m);
    return l;
}

DenominatorPower d_sigma(unsigned long H, unsigned long sigma) {
    Integer value;
    mpz_pow_ui(value.get_mpz_t(), nu(H).get_mpz_t(), sigma);
    return {H, sigma, value};
}

const RatPolynomial& delta_polynomial(const DeltaParams& p) { return cache().get(p).polys.front(); }

const RatPolynomial& delta_derivative_polynomial(const DeltaParams& p, unsigned long u) {
    const auto& chain = cache().get(p);
    return u < chain.polys.size() ? chain.polys[u] : zero_polynomial();
}

Rational delta_eval(const Rational& x, const DeltaParams& p) {
    if (p.N == 0) return 1;
    auto block = [&x](unsigned long count) {
        Rational v = 1;
        for (unsigned long j = 0; j < count; ++j) v *= x + static_cast<long>(j);
        Integer fact;
        mpz_fac_ui(fact.get_mpz_t(), count);
        return Rational(v / fact);
    };
    Rational full = block(p.H);
    Rational out = 1;
    for (unsigned long i = 0; i < p.q; ++i) out *= full;
    return out * block(p.r);
}

std::vector<Rational> delta_derivatives(const Rational& x, const DeltaParams& p, unsigned long sigma) {
    std::vector<Rational> out;
    out.reserve(sigma + 1);
    for (unsigned long u = 0; u <= sigma; ++u) out.push_back(delta_derivative_polynomial(p, u).eval(x));
    return out;
}

Lemma4Report lemma4_check(long x, const DeltaParams& p, unsigned long sigma, const PrecisionPolicy& policy) {
    Lemma4Report report;
    const Integer d = d_sigma(p.H, sigma).value;
    const auto derivs = delta_derivatives(Rational(x), p, sigma);

    report.integrality = true;
    for (const auto& v : derivs) {
        Rational cleared = v * d;
        if (cleared.get_den() != 1) {
            report.integrality = false;
            report.cleared.clear();
            break;
        }
        report.cleared.push_back(cleared.get_num());
    }

    // log d_sigma < (107/103) sigma H; both sides vanish at sigma = 0.
    const Integer nu_h = nu(p.H);
    const Rational limit = K("lemma4.ratio") * Rational(Integer(sigma * p.H));
    if (sigma == 0) {
        report.denominator_bound = true;
        report.log_d_sigma = CertifiedReal(0L);
        report.denominator_limit = CertifiedReal(0L);
    } else {
        auto c = compare([&](long bits) { return CertifiedReal(static_cast<long>(sigma)) * log(CertifiedReal(nu_h), bits); },
                         Relation::lt, exact(limit), policy);
        report.denominator_bound = c.holds;
        report.log_d_sigma = c.lhs;
        report.denominator_limit = c.rhs;
    }

    Rational lhs = 0;
    for (unsigned long u = 0; u <= sigma; ++u) lhs += Rational(binomial(sigma, u)) * abs(derivs[u]);
    report.derivative_sum = lhs;
    const Integer sigma_pow = sigma == 0 ? Integer(1) : [&] {
        Integer s;
        mpz_ui_pow_ui(s.get_mpz_t(), sigma, sigma);
        return s;
    }();
    Rational ratio(Integer(std::labs(x)), Integer(p.H));
    ratio.canonicalize();
    const Rational base = 1 + ratio;
    auto rhs = [&](long bits) {
        return CertifiedReal(sigma_pow) * exp(CertifiedReal(static_cast<long>(p.N + p.H)), bits) *
               pow(CertifiedReal(base), p.N);
    };
    auto c = compare(exact(lhs), Relation::lt, rhs, policy);
    report.derivative_sum_bound = c.holds;
    report.derivative_sum_limit = c.rhs;
    return report;
}

}  // namespace tmeasure
