#include "tmeasure/samplers.hpp"

#include <algorithm>
#include <set>

namespace tmeasure {

namespace {

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

Rational nonzero_rational(Rng& rng, long num, long den) {
    long p = 0;
    while (p == 0) p = uniform(rng, -num, num);
    Rational q(p, uniform(rng, 1, den));
    q.canonicalize();
    return q;
}

}  // namespace

Rational random_rational(Rng& rng, const Rational& lo, const Rational& hi, unsigned long den) {
    Rational span = (hi - lo) * den;
    Integer steps = span.get_num() / span.get_den();
    Integer k = 0;
    if (steps > 0) k = uniform(rng, 0, steps.get_si());
    Rational step(k, den);
    step.canonicalize();
    Rational q = lo + step;
    q.canonicalize();
    return q;
}

std::vector<BoundParams> random_param_packs(std::size_t count, Rng& rng, const PrecisionPolicy& policy) {
    std::vector<BoundParams> out;
    while (out.size() < count) {
        ParamInputs in;
        in.D = static_cast<unsigned long>(uniform(rng, 1, 6));
        const Rational logE = random_rational(rng, 1, 4);
        const Rational logA = random_rational(rng, Rational(1, static_cast<long>(in.D)), 3);
        const Rational logB = random_rational(rng, 0, 5);
        const Rational mod = random_rational(rng, Rational(1, 4), 8);
        const long shape = uniform(rng, 0, 2);
        in.logE = exact(logE);
        in.logA = exact(logA);
        in.logB = exact(logB);
        in.theta = shape == 0 ? exact_complex(mod) : shape == 1 ? exact_complex(-mod) : exact_complex(0, mod);
        try {
            BoundParams p = derive_params(in, policy);
            if (p.checks_pass()) out.push_back(std::move(p));
        } catch (const InconclusivePrecision&) {
        }
    }
    return out;
}

ZeroEstimateInstance random_zero_estimate(unsigned long D0, unsigned long D1, unsigned long S, unsigned long M,
                                          Rng& rng) {
    ZeroEstimateInstance inst;
    inst.D0 = D0;
    inst.D1 = D1;
    inst.S = S;
    inst.M = M;
    inst.beta = nonzero_rational(rng, 9, 5);
    std::set<Rational> xs;
    while (inst.points.size() < M) {
        Rational xi = Rational(uniform(rng, -20, 20), uniform(rng, 1, 4));
        xi.canonicalize();
        if (!xs.insert(xi).second) continue;
        inst.points.emplace_back(xi, nonzero_rational(rng, 9, 5));
    }
    return inst;
}

VanishingOrderCase random_vanishing_case(std::size_t k, Rng& rng) {
    VanishingOrderCase c;
    std::set<unsigned long> ns;
    while (ns.size() < k) ns.insert(static_cast<unsigned long>(uniform(rng, 0, static_cast<long>(2 * k + 3))));
    c.n.assign(ns.begin(), ns.end());
    std::shuffle(c.n.begin(), c.n.end(), rng);
    for (std::size_t i = 0; i < k; ++i) {
        c.sigma.push_back(static_cast<unsigned long>(uniform(rng, 0, 3)));
        c.zeta.push_back(nonzero_rational(rng, 7, 4));
    }
    return c;
}

EntryIndex random_entry_index(Rng& rng, unsigned long max_tau, long max_t, unsigned long max_sigma, long max_s) {
    EntryIndex idx;
    idx.tau = static_cast<unsigned long>(uniform(rng, 0, static_cast<long>(max_tau)));
    idx.t = uniform(rng, -max_t, max_t);
    idx.sigma = static_cast<unsigned long>(uniform(rng, 0, static_cast<long>(max_sigma)));
    idx.s = uniform(rng, 0, max_s);
    return idx;
}

IntPolynomial random_polynomial(Rng& rng, unsigned deg, long c) {
    std::vector<Integer> a(deg + 1);
    for (auto& x : a) x = uniform(rng, -c, c);
    while (a[0] == 0) a[0] = uniform(rng, -c, c);
    while (a[deg] == 0) a[deg] = uniform(rng, -c, c);
    return IntPolynomial(std::move(a));
}

IntPolynomial random_irreducible(Rng& rng, unsigned max_deg, long c, const PrecisionPolicy& policy) {
    for (;;) {
        const unsigned deg = static_cast<unsigned>(uniform(rng, 1, max_deg));
        IntPolynomial p = random_polynomial(rng, deg, c).primitive_part().normalized();
        if (is_irreducible(p, policy)) return p;
    }
}

}  // namespace tmeasure
