#include "tmeasure/zeroest.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace tmeasure {

namespace {

Rational rpow(const Rational& x, long n) {
    if (n < 0) {
        if (x == 0) throw DomainError("negative power of zero");
        return 1 / rpow(x, -n);
    }
    Rational r = 1;
    Rational b = x;
    for (unsigned long e = static_cast<unsigned long>(n); e; e >>= 1) {
        if (e & 1) r *= b;
        if (e > 1) b *= b;
    }
    return r;
}

CertifiedComplex cpow(const CertifiedComplex& z, long n) {
    if (n >= 0) return pow(z, static_cast<unsigned long>(n));
    return CertifiedComplex(CertifiedReal(1L)) / pow(z, static_cast<unsigned long>(-n));
}

}  // namespace

LaurentBiPoly LaurentBiPoly::monomial(const Rational& c, long i, long j) {
    if (i < 0) throw DomainError("negative power of X");
    LaurentBiPoly p;
    p.add({i, j}, c);
    return p;
}

void LaurentBiPoly::add(const Key& k, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (inserted) return;
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

Rational LaurentBiPoly::coeff(long i, long j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? Rational(0) : it->second;
}

long LaurentBiPoly::deg_x() const {
    long d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, k.first);
    return d;
}

long LaurentBiPoly::max_j() const {
    if (terms_.empty()) throw DomainError("max_j of the zero polynomial");
    long m = terms_.begin()->first.second;
    for (const auto& [k, c] : terms_) m = std::max(m, k.second);
    return m;
}

long LaurentBiPoly::min_j() const {
    if (terms_.empty()) throw DomainError("min_j of the zero polynomial");
    long m = terms_.begin()->first.second;
    for (const auto& [k, c] : terms_) m = std::min(m, k.second);
    return m;
}

bool LaurentBiPoly::has_integer_coefficients() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.get_den() == 1; });
}

LaurentBiPoly LaurentBiPoly::d_dx() const {
    LaurentBiPoly out;
    for (const auto& [k, c] : terms_)
        if (k.first > 0) out.add({k.first - 1, k.second}, c * k.first);
    return out;
}

LaurentBiPoly LaurentBiPoly::y_d_dy() const {
    LaurentBiPoly out;
    for (const auto& [k, c] : terms_) out.add(k, c * k.second);
    return out;
}

Rational LaurentBiPoly::eval(const Rational& x, const Rational& y) const {
    Rational s = 0;
    for (const auto& [k, c] : terms_) s += c * rpow(x, k.first) * rpow(y, k.second);
    return s;
}

CertifiedComplex LaurentBiPoly::eval(const CertifiedComplex& x, const CertifiedComplex& y) const {
    CertifiedComplex s(CertifiedReal(0L));
    for (const auto& [k, c] : terms_) s += CertifiedComplex(CertifiedReal(c)) * cpow(x, k.first) * cpow(y, k.second);
    return s;
}

std::string LaurentBiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << tmeasure::to_string(c);
        if (k.first) os << "*X^" << k.first;
        if (k.second) os << "*Y^" << k.second;
    }
    return os.str();
}

LaurentBiPoly operator+(const LaurentBiPoly& a, const LaurentBiPoly& b) {
    LaurentBiPoly out = a;
    for (const auto& [k, c] : b.terms_) out.add(k, c);
    return out;
}

LaurentBiPoly operator-(const LaurentBiPoly& a, const LaurentBiPoly& b) {
    LaurentBiPoly out = a;
    for (const auto& [k, c] : b.terms_) out.add(k, -c);
    return out;
}

LaurentBiPoly operator*(const LaurentBiPoly& a, const LaurentBiPoly& b) {
    LaurentBiPoly out;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) out.add({ka.first + kb.first, ka.second + kb.second}, ca * cb);
    return out;
}

LaurentBiPoly operator*(const Rational& c, const LaurentBiPoly& p) {
    LaurentBiPoly out;
    for (const auto& [k, v] : p.terms_) out.add(k, c * v);
    return out;
}

LaurentBiPoly delta_apply(const LaurentBiPoly& p, const Rational& beta, unsigned long order) {
    LaurentBiPoly cur = p;
    for (unsigned long k = 0; k < order && !cur.is_zero(); ++k) cur = cur.d_dx() + beta * cur.y_d_dy();
    return cur;
}

void ZeroEstimateInstance::validate() const {
    if (beta == 0) throw DomainError("beta must be nonzero");
    if (S == 0 || M == 0) throw DomainError("S and M must be positive");
    if (points.size() != M) throw DomainError("expected M points");
    std::set<Rational> seen;
    for (const auto& [xi, eta] : points) {
        if (eta == 0) throw DomainError("eta must be nonzero");
        if (!seen.insert(xi).second) throw DomainError("xi values must be distinct");
    }
}

bool ZeroEstimateInstance::size_condition() const { return S * M > (D0 + M) * (D1 + 1); }

ZeroEstimateInstance ZeroEstimateInstance::parse(const std::string& text) {
    ZeroEstimateInstance inst;
    bool have_m = false;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key)) continue;
        auto integer = [&] {
            long v;
            if (!(ls >> v) || v < 0) throw DomainError("bad value for " + key);
            return static_cast<unsigned long>(v);
        };
        auto fraction = [&] {
            std::string v;
            if (!(ls >> v)) throw DomainError("missing value for " + key);
            return parse_rational(v);
        };
        if (key == "D0") inst.D0 = integer();
        else if (key == "D1") inst.D1 = integer();
        else if (key == "S") inst.S = integer();
        else if (key == "M") { inst.M = integer(); have_m = true; }
        else if (key == "beta") inst.beta = fraction();
        else if (key == "point") {
            Rational xi = fraction();
            Rational eta = fraction();
            inst.points.emplace_back(xi, eta);
        } else throw DomainError("unknown key '" + key + "'");
    }
    if (!have_m) inst.M = inst.points.size();
    return inst;
}

RatMatrix constraint_matrix(const ZeroEstimateInstance& inst) {
    inst.validate();
    // delta^sigma (X^i Y^j) = sum_k C(sigma,k) i!/(i-k)! X^{i-k} (beta j)^{sigma-k} Y^j
    RatMatrix m;
    m.reserve(inst.S * inst.M);
    for (const auto& [xi, eta] : inst.points) {
        for (unsigned long sigma = 0; sigma < inst.S; ++sigma) {
            std::vector<Rational> row;
            row.reserve((inst.D0 + 1) * (inst.D1 + 1));
            for (unsigned long i = 0; i <= inst.D0; ++i) {
                for (unsigned long j = 0; j <= inst.D1; ++j) {
                    const Rational bj = inst.beta * static_cast<long>(j);
                    Rational acc = 0;
                    Integer binom = 1;    // C(sigma, k)
                    Integer falling = 1;  // i!/(i-k)!
                    for (unsigned long k = 0; k <= std::min(sigma, i); ++k) {
                        if (k > 0) {
                            binom = binom * (sigma - k + 1) / k;
                            falling *= i - k + 1;
                        }
                        acc += Rational(binom * falling) * rpow(xi, static_cast<long>(i - k)) *
                               rpow(bj, static_cast<long>(sigma - k));
                    }
                    row.push_back(acc * rpow(eta, static_cast<long>(j)));
                }
            }
            m.push_back(std::move(row));
        }
    }
    return m;
}

Lemma2Report lemma2_check(const ZeroEstimateInstance& inst) {
    Lemma2Report r;
    r.size_condition = inst.size_condition();
    RatMatrix m = constraint_matrix(inst);
    r.rows = m.size();
    r.columns = (inst.D0 + 1) * (inst.D1 + 1);
    r.rank = rank(m);
    r.kernel_dim = r.columns - r.rank;
    r.counterexample = r.size_condition && r.kernel_dim > 0;
    if (r.kernel_dim > 0) r.kernel_witness = kernel_basis(m, r.columns).front();
    return r;
}

}  // namespace tmeasure
