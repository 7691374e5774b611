#include "tmeasure/search.hpp"

#include "tmeasure/heights.hpp"
#include "tmeasure/report.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <limits>
#include <mutex>
#include <set>
#include <thread>

namespace tmeasure {

SearchCapExceeded::SearchCapExceeded(Integer size, unsigned long long cap)
    : std::runtime_error("search space has " + size.get_str() + " candidates, above the cap " + std::to_string(cap)),
      size_(std::move(size)) {}

namespace {

std::string ambiguous_message(const std::vector<IntPolynomial>& polys) {
    std::string s = "minimum not separated at the precision ceiling among:";
    for (const auto& p : polys) s += " [" + p.to_string() + "]";
    return s;
}

using Coeffs = std::vector<long>;  // leading-first, length d_max + 1

IntPolynomial to_poly(const Coeffs& c) {
    std::vector<Integer> v(c.begin(), c.end());
    return IntPolynomial::from_leading_first(v);
}

FastInterval horner(const Coeffs& c, const FastInterval& x) {
    FastInterval acc = FastInterval::point(0);
    for (long a : c) acc = acc * x + FastInterval::point(static_cast<double>(a));
    return acc;
}

FastInterval horner_derivative(const Coeffs& c, const FastInterval& x) {
    FastInterval acc = FastInterval::point(0);
    const std::size_t d = c.size() - 1;
    for (std::size_t k = 0; k < d; ++k)
        acc = acc * x + FastInterval::point(static_cast<double>(c[k]) * static_cast<double>(d - k));
    return acc;
}

double up(double v) { return std::nextafter(v, std::numeric_limits<double>::infinity()); }

// Enumerates coordinates [pos, n) with the remaining budget; the first nonzero
// coordinate of the whole vector is positive.
template <class F>
void complete(Coeffs& c, std::size_t pos, long budget, bool seen_nonzero, F&& f) {
    if (pos == c.size()) {
        if (seen_nonzero) f(c);
        return;
    }
    const long lo = seen_nonzero ? -budget : 0;
    for (long v = lo; v <= budget; ++v) {
        c[pos] = v;
        complete(c, pos + 1, budget - std::labs(v), seen_nonzero || v != 0, f);
    }
    c[pos] = 0;
}

struct Prefix {
    Coeffs head;
    long budget;
    bool seen_nonzero;
};

std::vector<Prefix> prefixes(std::size_t n, long L) {
    const std::size_t k = std::min<std::size_t>(2, n);
    std::vector<Prefix> out;
    Coeffs c(k, 0);
    auto rec = [&](auto&& self, std::size_t pos, long budget, bool seen) -> void {
        if (pos == k) {
            out.push_back({c, budget, seen});
            return;
        }
        for (long v = seen ? -budget : 0; v <= budget; ++v) {
            c[pos] = v;
            self(self, pos + 1, budget - std::labs(v), seen || v != 0);
        }
    };
    rec(rec, 0, L, false);
    return out;
}

// Runs `visit(task_index, coeffs)` over the whole space, partitioned by
// coefficient prefix across workers. Returns the enumerated count.
template <class Visit>
Integer parallel_enumerate(const SearchSpace& space, Visit&& visit) {
    const std::size_t n = space.d_max + 1;
    const long L = static_cast<long>(space.L_max);
    const auto tasks = prefixes(n, L);
    std::vector<unsigned long long> counts(tasks.size(), 0);
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;

    auto worker = [&] {
        try {
            for (std::size_t t = next++; t < tasks.size(); t = next++) {
                const Prefix& pre = tasks[t];
                Coeffs c(n, 0);
                std::copy(pre.head.begin(), pre.head.end(), c.begin());
                unsigned long long count = 0;
                complete(c, pre.head.size(), pre.budget, pre.seen_nonzero, [&](const Coeffs& v) {
                    ++count;
                    visit(t, v);
                });
                counts[t] = count;
            }
        } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
        }
    };
    const unsigned w = std::max(1u, space.workers);
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < w; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);

    Integer total = 0;
    for (auto c : counts) total += static_cast<unsigned long>(c);
    return total;
}

void check_space(const SearchSpace& space) {
    if (space.L_max == 0) throw DomainError("L_max must be positive");
    if (space.L_max > 1'000'000) throw DomainError("L_max too large");
    const Integer size = space_size(space);
    if (size > Integer(std::to_string(space.cap))) throw SearchCapExceeded(size, space.cap);
}

FastInterval fast_theta(Target t) { return FastInterval::from(constant_value(target_constant(t), 64)); }

void atomic_min(std::atomic<double>& a, double v) {
    double cur = a.load(std::memory_order_relaxed);
    while (v < cur && !a.compare_exchange_weak(cur, v, std::memory_order_relaxed)) {
    }
}

// Survivors of all tasks, merged in task order (deterministic) and sorted lexicographically.
std::vector<Coeffs> merge(std::vector<std::vector<std::pair<Coeffs, FastInterval>>>& per_task, double threshold) {
    std::vector<Coeffs> out;
    for (auto& bucket : per_task)
        for (auto& [c, v] : bucket)
            if (v.lo <= threshold) out.push_back(std::move(c));
    std::sort(out.begin(), out.end());
    return out;
}

struct RootPick {
    CertifiedReal distance;
    RootEnclosure root;
    bool decided = true;     // every candidate root's realness decided
    bool separated = true;   // the best root is apart from the other real candidates
};

// Closest real root of p to theta at width 2^-bits; nullopt if p has no real root.
std::optional<RootPick> closest_real_root(const IntPolynomial& p, const CertifiedReal& theta, long bits,
                                          const PrecisionPolicy& policy) {
    const auto roots = sorted_roots(p, dyadic(-bits), policy);
    std::vector<std::pair<CertifiedReal, std::size_t>> cands;
    bool decided = true;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        const Realness r = realness(roots, i);
        if (r == Realness::nonreal) continue;
        if (r == Realness::undecided) decided = false;
        cands.emplace_back(abs(theta - roots[i].root.re()), i);
    }
    if (cands.empty()) return std::nullopt;
    std::size_t best = 0;
    for (std::size_t k = 1; k < cands.size(); ++k)
        if (cands[k].first.hi() < cands[best].first.hi()) best = k;
    RootPick pick;
    pick.distance = cands[best].first;
    pick.root = roots[cands[best].second];
    pick.decided = decided && realness(roots, cands[best].second) == Realness::real;
    for (std::size_t k = 0; k < cands.size(); ++k)
        if (k != best && !(pick.distance.hi() < cands[k].first.lo())) pick.separated = false;
    if (!pick.decided) {
        // An undecided best root is reported through its real part but cannot win yet.
        pick.distance = CertifiedReal(Rational(0), pick.distance.hi(), pick.distance.bits());
    }
    return pick;
}

long next_bits(long bits, const PrecisionPolicy& policy) { return std::min(bits * 2, policy.max_bits); }

}  // namespace

SearchAmbiguous::SearchAmbiguous(std::vector<IntPolynomial> ambiguous)
    : InconclusivePrecision(ambiguous_message(ambiguous)), ambiguous_(std::move(ambiguous)) {}

Integer lattice_count(unsigned long n, unsigned long L) {
    Integer sum = 0;
    for (unsigned long k = 0; k <= std::min(n, L); ++k) {
        Integer a, b;
        mpz_bin_uiui(a.get_mpz_t(), n, k);
        mpz_bin_uiui(b.get_mpz_t(), L, k);
        Integer two = 1;
        two <<= k;
        sum += two * a * b;
    }
    return (sum - 1) / 2;
}

Integer space_size(const SearchSpace& space) { return lattice_count(space.d_max + 1, space.L_max); }

void for_each_polynomial(unsigned long d_max, unsigned long L_max, const std::function<void(const IntPolynomial&)>& f) {
    Coeffs c(d_max + 1, 0);
    complete(c, 0, static_cast<long>(L_max), false, [&](const Coeffs& v) { f(to_poly(v)); });
}

bool lex_less(const IntPolynomial& a, const IntPolynomial& b) {
    const std::size_t n = static_cast<std::size_t>(std::max(a.degree(), b.degree()) + 1);
    for (std::size_t i = n; i-- > 0;) {
        const Integer ca = static_cast<int>(i) <= a.degree() ? a.coeff(static_cast<unsigned>(i)) : Integer(0);
        const Integer cb = static_cast<int>(i) <= b.degree() ? b.coeff(static_cast<unsigned>(i)) : Integer(0);
        if (ca != cb) return ca < cb;
    }
    return false;
}

SearchResult enumerate_min_poly_value(const SearchSpace& space) {
    check_space(space);
    const FastInterval theta = fast_theta(space.target);
    const auto n_tasks = prefixes(space.d_max + 1, static_cast<long>(space.L_max)).size();
    std::vector<std::vector<std::pair<Coeffs, FastInterval>>> survivors(n_tasks);
    std::atomic<double> best_hi{std::numeric_limits<double>::infinity()};

    SearchResult r;
    r.target = space.target;
    r.form = Form::polynomial;
    r.d_max = space.d_max;
    r.L_max = space.L_max;
    r.enumerated = parallel_enumerate(space, [&](std::size_t task, const Coeffs& c) {
        const FastInterval v = horner(c, theta).abs();
        if (v.lo > best_hi.load(std::memory_order_relaxed)) return;
        atomic_min(best_hi, v.hi);
        survivors[task].emplace_back(c, v);
    });

    std::vector<Coeffs> cands = merge(survivors, best_hi.load());
    r.screened_survivors = cands.size();
    std::vector<IntPolynomial> polys;
    for (const auto& c : cands) polys.push_back(to_poly(c));

    const Constant k = target_constant(space.target);
    for (long bits = space.policy.start_bits;; bits = next_bits(bits, space.policy)) {
        const CertifiedReal t = constant_value(k, bits);
        std::vector<CertifiedReal> vals;
        for (const auto& p : polys) vals.push_back(abs(p.eval(t)));
        std::size_t best = 0;
        for (std::size_t i = 1; i < vals.size(); ++i)
            if (vals[i].hi() < vals[best].hi()) best = i;
        std::vector<IntPolynomial> next;
        std::vector<CertifiedReal> next_vals;
        for (std::size_t i = 0; i < vals.size(); ++i)
            if (vals[i].lo() <= vals[best].hi()) {
                next.push_back(polys[i]);
                next_vals.push_back(vals[i]);
            }
        if (next.size() == 1 && next_vals[0].positive()) {
            r.best_poly = next[0];
            r.best_value = next_vals[0];
            r.bits = bits;
            return r;
        }
        if (bits >= space.policy.max_bits) throw SearchAmbiguous(next);
        polys = std::move(next);
    }
}

SearchResult enumerate_min_alg_approx(const SearchSpace& space) {
    if (space.d_max == 0) throw DomainError("algebraic approximation needs d_max >= 1");
    check_space(space);
    const FastInterval theta = fast_theta(space.target);

    // Seed the radius with the best rational p/q in the space.
    double radius = std::numeric_limits<double>::infinity();
    const long L = static_cast<long>(space.L_max);
    for (long q = 1; q <= L; ++q)
        for (long p = -(L - q); p <= L - q; ++p) {
            const FastInterval v = (FastInterval::point(static_cast<double>(q)) * theta +
                                    FastInterval::point(static_cast<double>(p)))
                                       .abs();
            radius = std::min(radius, up(v.hi / static_cast<double>(q)));
        }
    const FastInterval disk{theta.lo - radius, theta.hi + radius};

    const auto n_tasks = prefixes(space.d_max + 1, L).size();
    std::vector<std::vector<std::pair<Coeffs, FastInterval>>> survivors(n_tasks);
    SearchResult r;
    r.target = space.target;
    r.form = Form::algebraic;
    r.d_max = space.d_max;
    r.L_max = space.L_max;
    r.enumerated = parallel_enumerate(space, [&](std::size_t task, const Coeffs& c) {
        // A root within `radius` of theta forces |P(theta)| <= radius * max |P'| on the disk.
        const auto lead = std::find_if(c.begin(), c.end(), [](long a) { return a != 0; });
        if (lead == c.end() - 1) return;  // constant
        const FastInterval v = horner(c, theta).abs();
        const FastInterval dv = horner_derivative(c, disk).abs();
        const double limit = (FastInterval::point(radius) * dv).hi;
        if (v.lo > limit) return;
        survivors[task].emplace_back(c, FastInterval{0, 0});
    });
    std::vector<Coeffs> cands = merge(survivors, 0);
    r.screened_survivors = cands.size();

    std::vector<IntPolynomial> polys;
    for (const auto& c : cands) {
        IntPolynomial p = to_poly(c);
        if (p.content() != 1) continue;
        if (!is_irreducible(p, space.policy)) continue;
        polys.push_back(std::move(p));
    }
    if (polys.empty()) throw DomainError("no irreducible polynomial with a real root in the space");

    const Constant k = target_constant(space.target);
    for (long bits = space.policy.start_bits;; bits = next_bits(bits, space.policy)) {
        const CertifiedReal t = constant_value(k, bits);
        std::vector<IntPolynomial> live;
        std::vector<RootPick> picks;
        for (const auto& p : polys) {
            try {
                if (auto pick = closest_real_root(p, t, bits, space.policy)) {
                    live.push_back(p);
                    picks.push_back(std::move(*pick));
                }
            } catch (const InconclusivePrecision&) {
                if (bits >= space.policy.max_bits) throw;
                live.push_back(p);
                picks.push_back({CertifiedReal(Rational(0), Rational(radius * 4 + 1), bits), {}, false, false});
            }
        }
        if (live.empty()) throw DomainError("no irreducible polynomial with a real root in the space");
        std::size_t best = 0;
        for (std::size_t i = 1; i < picks.size(); ++i)
            if (picks[i].distance.hi() < picks[best].distance.hi()) best = i;
        std::vector<IntPolynomial> next;
        std::vector<RootPick> next_picks;
        for (std::size_t i = 0; i < picks.size(); ++i)
            if (picks[i].distance.lo() <= picks[best].distance.hi()) {
                next.push_back(live[i]);
                next_picks.push_back(picks[i]);
            }
        if (next.size() == 1 && next_picks[0].decided && next_picks[0].separated &&
            next_picks[0].distance.positive()) {
            r.best_poly = next[0];
            r.best_value = next_picks[0].distance;
            r.witness_root = next_picks[0].root;
            r.bits = bits;
            return r;
        }
        if (bits >= space.policy.max_bits) throw SearchAmbiguous(next);
        polys = std::move(next);
    }
}

CertifiedReal witness_value(const SearchResult& r, long bits) {
    const CertifiedReal t = constant_value(target_constant(r.target), bits);
    if (r.form == Form::polynomial) return abs(r.best_poly.eval(t));
    if (!r.witness_root) throw DomainError("search result has no witness root");
    const auto roots = sorted_roots(r.best_poly, dyadic(-bits));
    for (std::size_t i = 0; i < roots.size(); ++i)
        if (realness(roots, i) != Realness::nonreal && roots[i].root.overlaps(r.witness_root->root))
            return abs(t - roots[i].root.re());
    throw InconclusivePrecision("witness root not re-identified");
}

BoundCheck verify_against_bound(const SearchResult& r, const MeasureQuery& q, const PrecisionPolicy& policy,
                                const std::optional<RealFn>& bound_override) {
    if (q.target != r.target || q.form != r.form) throw DomainError("query does not match the search");
    if (q.d < r.d_max || q.L < Rational(static_cast<long>(r.L_max)))
        throw DomainError("query does not cover the search space");
    BoundCheck c;
    c.query = q;
    RealFn bound = bound_override ? *bound_override : RealFn([q](long bits) { return measure_bound(q, bits); });
    RealFn value = [&r](long bits) { return log(witness_value(r, bits), bits); };
    try {
        const Comparison cmp = compare(bound, Relation::le, value, policy);
        c.bound = cmp.lhs;
        c.log_value = cmp.rhs;
        c.margin = cmp.rhs - cmp.lhs;
        c.verdict = cmp.holds ? Verdict::pass : Verdict::fail;
    } catch (const InconclusivePrecision&) {
        c.verdict = Verdict::inconclusive;
    }
    return c;
}

std::string SweepCell::key() const {
    return std::string(target_name(target)) + (form == Form::polynomial ? "/poly" : "/alg") + "/d=" +
           std::to_string(d) + "/L=" + std::to_string(L);
}

std::size_t run_sweep(const std::vector<SweepCell>& cells, const std::string& log_path, const SearchSpace& base) {
    std::set<std::string> done;
    {
        std::ifstream in(log_path);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            auto j = report::Json::parse(line, nullptr, false);
            if (j.is_discarded() || !j.contains("cell")) continue;
            done.insert(j["cell"].get<std::string>());
        }
    }
    std::ofstream out(log_path, std::ios::app);
    if (!out) throw DomainError("cannot open run log '" + log_path + "'");
    std::size_t ran = 0;
    for (const auto& cell : cells) {
        if (done.count(cell.key())) continue;
        SearchSpace s = base;
        s.target = cell.target;
        s.d_max = cell.d;
        s.L_max = cell.L;
        const SearchResult res =
            cell.form == Form::polynomial ? enumerate_min_poly_value(s) : enumerate_min_alg_approx(s);
        // The stated bounds need L >= 3; smaller spaces are covered by the L = 3 bound.
        MeasureQuery q{cell.target, cell.form, cell.d, Rational(static_cast<long>(std::max(cell.L, 3UL)))};
        const BoundCheck check = verify_against_bound(res, q, base.policy);
        report::Json rec;
        rec["cell"] = cell.key();
        rec["result"] = report::search_result(res);
        rec["check"] = report::bound_check(check);
        out << rec.dump() << '\n';
        out.flush();
        done.insert(cell.key());
        ++ran;
    }
    return ran;
}

}  // namespace tmeasure
