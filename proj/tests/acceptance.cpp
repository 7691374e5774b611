// Acceptance run: one PASS/FAIL line per criterion.

#include "tmeasure/binomial.hpp"
#include "tmeasure/bounds.hpp"
#include "tmeasure/heights.hpp"
#include "tmeasure/interdet.hpp"
#include "tmeasure/samplers.hpp"
#include "tmeasure/search.hpp"
#include "tmeasure/zeroest.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <random>
#include <iostream>
#include <sstream>
#include <string>

using namespace tmeasure;

namespace {

// Tolerances and limits.
const Rational kHeightWidth = parse_rational("1e-30");
const Rational kDeskTol(1, 1000000);                                  // 1e-6
const Rational kEntryWidth = parse_rational("1e-20");
const Rational kTightMargin = parse_rational("0.07");
constexpr double kLimitLemma4 = 120;
constexpr double kLimitZero = 300;
constexpr double kLimitToy = 60;
constexpr double kLimitSweep = 600;

struct Line {
    bool pass = true;
    std::ostringstream detail;
    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail << " [failed: " << what << "]";
        }
    }
};

int failures = 0;

void criterion(int n, const char* title, const std::function<void(Line&)>& body, double limit_s = 0) {
    Line line;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(line);
    } catch (const std::exception& e) {
        line.pass = false;
        line.detail << " [exception: " << e.what() << "]";
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limit_s > 0 && secs >= limit_s) line.require(false, "runtime limit " + std::to_string(limit_s) + " s");
    if (!line.pass) ++failures;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.1f s", secs);
    std::cout << "criterion " << (n < 10 ? " " : "") << n << ": " << (line.pass ? "PASS" : "FAIL") << "  " << title
              << " |" << line.detail.str() << " (" << timing << ")" << std::endl;
}

std::string dec(const Rational& q, int digits = 8) { return to_decimal(q, digits, false); }

bool close_to(const CertifiedReal& x, const Rational& ref, const Rational& tol) {
    return x.width() <= tol && x.lo() >= ref - tol && x.hi() <= ref + tol;
}

void binomial_grid(Line& line, bool bounds) {
    unsigned long cases = 0, bad_int = 0, bad_den = 0, bad_sum = 0;
    for (unsigned long N = 0; N <= 20; ++N)
        for (unsigned long H = 1; H <= 10; ++H) {
            const DeltaParams p = DeltaParams::make(N, H);
            for (unsigned long sigma = 0; sigma <= 10; ++sigma)
                for (long x = -30; x <= 30; ++x) {
                    ++cases;
                    const Lemma4Report r = lemma4_check(x, p, sigma);
                    bad_int += r.integrality ? 0 : 1;
                    bad_den += r.denominator_bound ? 0 : 1;
                    bad_sum += r.derivative_sum_bound ? 0 : 1;
                }
        }
    line.detail << " cases=" << cases;
    if (bounds) {
        line.detail << " denominator-failures=" << bad_den << " derivative-sum-failures=" << bad_sum
                    << "; sigma=0 rows hold with both sides of the denominator estimate equal to 0";
        line.require(bad_den == 0 && bad_sum == 0, "size estimates");
    } else {
        line.detail << " integrality-failures=" << bad_int;
        line.require(bad_int == 0, "integrality");
    }
}

}  // namespace

int main() {
    std::cout << "tmeasure acceptance run" << std::endl;

    criterion(1, "d_sigma * Delta^(u)(x,N,H) integral, N<=20 H<=10 sigma<=10 |x|<=30",
              [](Line& l) { binomial_grid(l, false); }, kLimitLemma4);

    criterion(2, "log d_sigma and derivative-sum estimates on the same grid",
              [](Line& l) { binomial_grid(l, true); });

    criterion(3, "zero estimate: empty kernel under SM > (D0+M)(D1+1); witnesses below (D0+1)(D1+1)", [](Line& l) {
        Rng rng(2024);
        unsigned long tuples = 0, instances = 0, counterexamples = 0;
        for (unsigned long D0 = 0; D0 <= 5; ++D0)
            for (unsigned long D1 = 0; D1 <= 5; ++D1)
                for (unsigned long S = 1; S <= 5; ++S)
                    for (unsigned long M = 1; M <= 5; ++M) {
                        if (S * M <= (D0 + M) * (D1 + 1)) continue;
                        ++tuples;
                        for (int k = 0; k < 50; ++k) {
                            ++instances;
                            const auto rep = lemma2_check(random_zero_estimate(D0, D1, S, M, rng));
                            if (rep.kernel_dim != 0) ++counterexamples;
                        }
                    }
        unsigned long witnesses = 0, checked = 0;
        for (unsigned long D0 = 1; D0 <= 5 && checked < 12; ++D0)
            for (unsigned long D1 = 1; D1 <= 5 && checked < 12; ++D1)
                for (unsigned long S = 1; S <= 5 && checked < 12; ++S)
                    for (unsigned long M = 1; M <= 5 && checked < 12; ++M) {
                        if (S * M >= (D0 + 1) * (D1 + 1)) continue;
                        ++checked;
                        const auto inst = random_zero_estimate(D0, D1, S, M, rng);
                        const auto rep = lemma2_check(inst);
                        bool vanishes = rep.kernel_dim > 0 && rep.kernel_witness.size() == rep.columns;
                        if (vanishes) {
                            const RatMatrix m = constraint_matrix(inst);
                            for (const auto& row : m) {
                                Rational s = 0;
                                for (std::size_t c = 0; c < row.size(); ++c) s += row[c] * rep.kernel_witness[c];
                                vanishes = vanishes && s == 0;
                            }
                        }
                        witnesses += vanishes ? 1 : 0;
                    }
        l.detail << " tuples=" << tuples << " instances=" << instances << " counterexamples=" << counterexamples
                 << " violating-instances=" << checked << " nonzero-kernel-witnesses=" << witnesses;
        l.require(counterexamples == 0, "kernel must be trivial");
        l.require(witnesses >= 5 && witnesses == checked, "at least 5 witnesses");
    }, kLimitZero);

    criterion(4, "heights to width 1e-30; h <= d^-1 log L on 500 random irreducibles", [](Line& l) {
        const CertifiedReal log2 = const_log2(256), log3 = log(CertifiedReal(3L), 256);
        struct Case {
            const char* name;
            AlgebraicNumber alpha;
            CertifiedReal expected;
        };
        const Case cases[] = {
            {"h(2)", AlgebraicNumber::rational(2), log2},
            {"h(i)", AlgebraicNumber::from_minpoly(IntPolynomial::parse("1,0,1")), CertifiedReal(0L)},
            {"h(sqrt2)", AlgebraicNumber::from_minpoly(IntPolynomial::parse("1,0,-2"), 1), log2 / CertifiedReal(2L)},
            {"h(3/2)", AlgebraicNumber::rational(Rational(3, 2)), log3},
        };
        for (const auto& c : cases) {
            const CertifiedReal h = height(c.alpha, kHeightWidth);
            const bool ok = h.width() <= kHeightWidth && h.overlaps(c.expected);
            l.detail << " " << c.name << "=" << dec(h.mid(), 32);
            l.require(ok, c.name);
        }
        Rng rng(7);
        unsigned long fails = 0;
        for (int k = 0; k < 500; ++k) {
            const IntPolynomial p = random_irreducible(rng, 5, 50);
            if (check_height_length(p).verdict != Verdict::pass) ++fails;
        }
        l.detail << " random-failures=" << fails << "/500";
        l.require(fails == 0, "height-length inequality");
    });

    criterion(5, "Liouville lower bound on 200 nonvanishing (f, alpha) pairs", [](Line& l) {
        Rng rng(5);
        std::uniform_int_distribution<int> deg(1, 4);
        unsigned long pairs = 0, fails = 0, skipped = 0;
        while (pairs < 200) {
            const IntPolynomial mp = random_irreducible(rng, 4, 12);
            const auto n_roots = static_cast<std::size_t>(mp.degree());
            const auto idx = std::uniform_int_distribution<std::size_t>(0, n_roots - 1)(rng);
            const AlgebraicNumber alpha = AlgebraicNumber::from_minpoly(mp, idx);
            const IntPolynomial f = random_polynomial(rng, static_cast<unsigned>(deg(rng)), 15);
            if (divides(mp, f)) {
                ++skipped;
                continue;
            }
            ++pairs;
            if (liouville_check(f, alpha).verdict != Verdict::pass) ++fails;
        }
        l.detail << " pairs=" << pairs << " failures=" << fails << " vanishing-skipped=" << skipped;
        l.require(fails == 0, "Liouville");
    });

    criterion(6, "inequality chains for pi, log2, e, exp/log at d in 1..10,100,1e4; main estimate on 12 packs",
              [](Line& l) {
                  const unsigned long ds[] = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 100, 10000};
                  unsigned long chains = 0, bad = 0, items = 0;
                  std::string tight;
                  std::optional<Rational> margin_lo;
                  auto take = [&](const ChainReport& r) {
                      ++chains;
                      for (const auto& it : r.items) items += it.gating ? 1 : 0;
                      if (!r.pass()) {
                          ++bad;
                          l.detail << " [" << r.name << " failed]";
                      }
                      for (const auto& it : r.items)
                          if (it.label.rfind("1 + 2E|theta| + 6 log E <= 59.5", 0) == 0 && tight.empty()) {
                              margin_lo = it.rhs.lo() - it.lhs.hi();
                              tight = dec(*margin_lo, 6) + ".." + dec(it.rhs.hi() - it.lhs.lo(), 6);
                          }
                  };
                  for (unsigned long d : ds) {
                      take(chain_check_thm2({d, 4, std::nullopt}));
                      take(chain_check_thm3({d, 3, std::nullopt}));
                      take(chain_check_thm4({d, 3, std::nullopt}));
                      take(chain_check_thm5(preset_thm5(d)));
                  }
                  Rng rng(6);
                  for (const auto& p : random_param_packs(12, rng, {})) take(chain_check_main_estimate(p));
                  l.detail << " chains=" << chains << " gating-items=" << items << " failing-chains=" << bad
                           << " margin(59.5)=" << tight;
                  l.require(bad == 0, "chains");
                  l.require(!tight.empty(), "59.5 item present");
                  if (margin_lo && *margin_lo >= kTightMargin)
                      l.detail << " (margin is not below 0.07)";
              });

    criterion(7, "toy interpolation matrix T=1 T1=1 S=2 S1=2 H=2 alpha=2 beta=1: rank 6, nonzero minor", [](Line& l) {
        ToyConfig toy;
        toy.S = 2;
        toy.S1 = 2;
        toy.T = 1;
        toy.T1 = 1;
        toy.H = 2;
        toy.alpha = 2;
        toy.beta = 1;
        const auto rep = toy_rank_check(toy);
        l.detail << " rows=" << rep.rows << " L=" << rep.L << " rank=" << rep.rank
                 << " integral=" << (rep.entries_integral ? "yes" : "no");
        if (rep.minor) l.detail << " minor=" << to_string(*rep.minor);
        l.require(rep.rows == 9 && rep.L == 6 && rep.rank == 6, "rank 6");
        l.require(rep.minor && *rep.minor != 0, "nonzero minor");
        l.require(rep.entries_integral, "integral entries");
    }, kLimitToy);

    criterion(8, "entry consistency q(theta, e^theta) in d_sigma * gamma, theta in {1, log2, 1/2}, 100 indices", [](Line& l) {
        Rng rng(8);
        unsigned long checked = 0, fails = 0;
        for (const ThetaSpec& th : {ThetaSpec::rational(1), ThetaSpec::log2(), ThetaSpec::rational(Rational(1, 2))}) {
            for (int k = 0; k < 100; ++k) {
                const EntryIndex idx = random_entry_index(rng, 3, 3, 4, 4);
                ++checked;
                if (entry_consistency_check(idx, 3, th, kEntryWidth).verdict != Verdict::pass) ++fails;
            }
        }
        l.detail << " checked=" << checked << " failures=" << fails;
        l.require(fails == 0, "consistency");
    });

    criterion(9, "order of vanishing of the derivative determinant on 40 random cases", [](Line& l) {
        Rng rng(9);
        unsigned long fails = 0, zero = 0;
        for (int k = 0; k < 40; ++k) {
            const auto rep = vanishing_order_check(random_vanishing_case(2 + k % 5, rng));
            fails += rep.pass ? 0 : 1;
            zero += rep.identically_zero ? 1 : 0;
        }
        l.detail << " cases=40 identically-zero=" << zero << " failures=" << fails;
        l.require(fails == 0, "order bound");
    });

    criterion(10, "exhaustive minima d<=2 L<=8 against the polynomial bounds; desk numbers to 1e-6", [](Line& l) {
        unsigned long cells = 0, fails = 0;
        for (Target t : {Target::pi, Target::log2, Target::e})
            for (unsigned long d = 1; d <= 2; ++d)
                for (unsigned long L = 1; L <= 8; ++L) {
                    SearchSpace s;
                    s.target = t;
                    s.d_max = d;
                    s.L_max = L;
                    s.workers = 4;
                    const auto r = enumerate_min_poly_value(s);
                    const auto c = verify_against_bound(r, {t, Form::polynomial, d, Rational(static_cast<long>(std::max(L, 3UL)))});
                    ++cells;
                    if (c.verdict != Verdict::pass) ++fails;
                }
        l.detail << " cells=" << cells << " failures=" << fails << ";";
        l.require(fails == 0, "sweep");
        struct Desk {
            Target t;
            const char* ref;
            const char* poly;
        };
        for (const Desk& k : {Desk{Target::pi, "0.141593", "1,-3"}, Desk{Target::log2, "0.0794415", "3,-2"},
                              Desk{Target::e, "0.281718", "1,-3"}}) {
            SearchSpace s;
            s.target = k.t;
            s.d_max = 1;
            s.L_max = 10;
            const auto r = enumerate_min_poly_value(s);
            const CertifiedReal v = refine_to_width([&](long bits) { return witness_value(r, bits); }, kDeskTol / 10);
            const auto c = verify_against_bound(r, {k.t, Form::polynomial, 1, 10});
            const bool ok = close_to(v, parse_rational(k.ref), kDeskTol) && r.best_poly == IntPolynomial::parse(k.poly) &&
                            c.verdict == Verdict::pass;
            l.detail << " " << target_name(k.t) << ": " << r.best_poly.to_string() << " -> " << dec(v.mid(), 9);
            l.require(ok, std::string("desk value ") + std::string(target_name(k.t)));
        }
    }, kLimitSweep);

    criterion(11, "d=2 L=8 search witnesses identical at 1, 4, 8 workers", [](Line& l) {
        unsigned long mismatches = 0;
        for (Target t : {Target::pi, Target::log2, Target::e})
            for (Form f : {Form::polynomial, Form::algebraic}) {
                std::vector<SearchResult> rs;
                for (unsigned w : {1u, 4u, 8u}) {
                    SearchSpace s;
                    s.target = t;
                    s.d_max = 2;
                    s.L_max = 8;
                    s.workers = w;
                    rs.push_back(f == Form::polynomial ? enumerate_min_poly_value(s) : enumerate_min_alg_approx(s));
                }
                for (const auto& r : rs)
                    if (r.best_poly != rs[0].best_poly || r.best_value.lo() != rs[0].best_value.lo() ||
                        r.best_value.hi() != rs[0].best_value.hi())
                        ++mismatches;
            }
        l.detail << " configurations=6 mismatches=" << mismatches;
        l.require(mismatches == 0, "determinism");
    });

    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
    return failures == 0 ? 0 : 1;
}
