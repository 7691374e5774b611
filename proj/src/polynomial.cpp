#include "tmeasure/polynomial.hpp"

#include <sstream>

namespace tmeasure {

namespace {

const Integer kZeroInt = 0;
const Rational kZeroRat = 0;

}  // namespace

IntPolynomial::IntPolynomial(std::vector<Integer> ascending) : coeffs_(std::move(ascending)) { trim(); }

IntPolynomial IntPolynomial::from_leading_first(std::span<const Integer> coeffs) {
    return IntPolynomial(std::vector<Integer>(coeffs.rbegin(), coeffs.rend()));
}

IntPolynomial IntPolynomial::from_leading_first(std::initializer_list<long> coeffs) {
    std::vector<Integer> v;
    for (long c : coeffs) v.emplace_back(c);
    return from_leading_first(v);
}

IntPolynomial IntPolynomial::parse(std::string_view text) {
    std::vector<Integer> coeffs;
    std::string item;
    std::stringstream ss{std::string(text)};
    while (std::getline(ss, item, ',')) {
        Rational r = parse_rational(item);
        if (r.get_den() != 1) throw DomainError("polynomial coefficient '" + item + "' is not an integer");
        coeffs.push_back(r.get_num());
    }
    if (coeffs.empty()) throw DomainError("empty polynomial");
    return from_leading_first(coeffs);
}

IntPolynomial IntPolynomial::monomial(const Integer& c, unsigned degree) {
    std::vector<Integer> v(degree + 1);
    v[degree] = c;
    return IntPolynomial(std::move(v));
}

const Integer& IntPolynomial::coeff(unsigned k) const { return k < coeffs_.size() ? coeffs_[k] : kZeroInt; }

const Integer& IntPolynomial::leading() const {
    if (coeffs_.empty()) throw DomainError("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

std::vector<Integer> IntPolynomial::leading_first() const { return {coeffs_.rbegin(), coeffs_.rend()}; }

std::string IntPolynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        if (!out.empty()) out += ',';
        out += it->get_str();
    }
    return out;
}

Integer IntPolynomial::length() const {
    Integer sum = 0;
    for (const auto& c : coeffs_) sum += abs(c);
    return sum;
}

Integer IntPolynomial::content() const {
    Integer g = 0;
    for (const auto& c : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
    if (is_zero()) return *this;
    Integer g = content();
    std::vector<Integer> v(coeffs_.size());
    for (std::size_t i = 0; i < v.size(); ++i) mpz_divexact(v[i].get_mpz_t(), coeffs_[i].get_mpz_t(), g.get_mpz_t());
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::normalized() const {
    IntPolynomial p = primitive_part();
    if (!p.is_zero() && p.leading() < 0) p = -p;
    return p;
}

IntPolynomial IntPolynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Integer> v(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) v[k - 1] = coeffs_[k] * static_cast<unsigned long>(k);
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::reversed() const { return IntPolynomial(std::vector<Integer>(coeffs_.rbegin(), coeffs_.rend())); }

Rational IntPolynomial::eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

CertifiedReal IntPolynomial::eval(const CertifiedReal& x) const {
    CertifiedReal acc(0L);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + CertifiedReal(*it);
    return acc;
}

CertifiedComplex IntPolynomial::eval(const CertifiedComplex& x) const {
    CertifiedComplex acc(CertifiedReal(0L));
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + CertifiedComplex(CertifiedReal(*it));
    return acc;
}

FastInterval IntPolynomial::eval(const FastInterval& x) const {
    FastInterval acc = FastInterval::point(0.0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + FastInterval::from(CertifiedReal(*it));
    return acc;
}

RatPolynomial IntPolynomial::to_rational() const {
    return RatPolynomial(std::vector<Rational>(coeffs_.begin(), coeffs_.end()));
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<Integer> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
    return IntPolynomial(std::move(v));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) { return a + (-b); }

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator-() const {
    IntPolynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RatPolynomial::RatPolynomial(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) { trim(); }

RatPolynomial RatPolynomial::constant(const Rational& c) { return RatPolynomial({c}); }

RatPolynomial RatPolynomial::linear_root(const Rational& a) { return RatPolynomial({a, Rational(1)}); }

const Rational& RatPolynomial::coeff(unsigned k) const { return k < coeffs_.size() ? coeffs_[k] : kZeroRat; }

const Rational& RatPolynomial::leading() const {
    if (coeffs_.empty()) throw DomainError("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

int RatPolynomial::order_at_zero() const {
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        if (coeffs_[k] != 0) return static_cast<int>(k);
    return -1;
}

RatPolynomial RatPolynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> v(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) v[k - 1] = coeffs_[k] * static_cast<long>(k);
    return RatPolynomial(std::move(v));
}

Rational RatPolynomial::eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

CertifiedComplex RatPolynomial::eval(const CertifiedComplex& x) const {
    CertifiedComplex acc(CertifiedReal(0L));
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + CertifiedComplex(CertifiedReal(*it));
    return acc;
}

RatPolynomial RatPolynomial::monic() const {
    if (is_zero()) return *this;
    Rational lc = leading();
    std::vector<Rational> v(coeffs_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeffs_[i] / lc;
    return RatPolynomial(std::move(v));
}

IntPolynomial RatPolynomial::to_integer() const {
    Integer l = 1;
    for (const auto& c : coeffs_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> v(coeffs_.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        Rational scaled = coeffs_[i] * l;
        v[i] = scaled.get_num();
    }
    return IntPolynomial(std::move(v)).primitive_part();
}

RatPolynomial operator+(const RatPolynomial& a, const RatPolynomial& b) {
    std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
    return RatPolynomial(std::move(v));
}

RatPolynomial operator-(const RatPolynomial& a, const RatPolynomial& b) { return a + Rational(-1) * b; }

RatPolynomial operator*(const RatPolynomial& a, const RatPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return RatPolynomial(std::move(v));
}

RatPolynomial operator*(const Rational& c, const RatPolynomial& p) {
    std::vector<Rational> v(p.coeffs_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = c * p.coeffs_[i];
    return RatPolynomial(std::move(v));
}

void RatPolynomial::divmod(const RatPolynomial& a, const RatPolynomial& b, RatPolynomial& q, RatPolynomial& r) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    std::vector<Rational> rem = a.coeffs_;
    int db = b.degree();
    std::vector<Rational> quo(std::max(0, a.degree() - db + 1));
    const Rational& lc = b.leading();
    for (int k = a.degree(); k >= db; --k) {
        if (rem[k] == 0) continue;
        Rational f = rem[k] / lc;
        quo[k - db] = f;
        for (int j = 0; j <= db; ++j) rem[k - db + j] -= f * b.coeffs_[j];
    }
    q = RatPolynomial(std::move(quo));
    r = RatPolynomial(std::move(rem));
}

RatPolynomial RatPolynomial::gcd(RatPolynomial a, RatPolynomial b) {
    while (!b.is_zero()) {
        RatPolynomial q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

void RatPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

bool divides(const IntPolynomial& divisor, const IntPolynomial& p) {
    RatPolynomial q, r;
    RatPolynomial::divmod(p.to_rational(), divisor.to_rational(), q, r);
    return r.is_zero();
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
    return RatPolynomial::gcd(a.to_rational(), b.to_rational()).to_integer().normalized();
}

std::vector<IntPolynomial> squarefree_decomposition(const IntPolynomial& p) {
    if (p.degree() < 1) throw DomainError("squarefree decomposition needs degree >= 1");
    RatPolynomial a = p.to_rational();
    RatPolynomial da = a.derivative();
    RatPolynomial c = RatPolynomial::gcd(a, da);
    RatPolynomial q, r;
    RatPolynomial w, y;
    RatPolynomial::divmod(a, c, w, r);
    RatPolynomial::divmod(da, c, y, r);
    RatPolynomial z = y - w.derivative();
    std::vector<IntPolynomial> factors;
    while (w.degree() > 0) {
        RatPolynomial g = RatPolynomial::gcd(w, z);
        factors.push_back(g.to_integer().normalized());
        RatPolynomial::divmod(w, g, q, r);
        w = q;
        RatPolynomial::divmod(z, g, y, r);
        z = y - w.derivative();
    }
    return factors;
}

IntPolynomial squarefree_part(const IntPolynomial& p) {
    IntPolynomial out = IntPolynomial::monomial(1, 0);
    for (const auto& f : squarefree_decomposition(p)) out = out * f;
    return out.normalized();
}

}  // namespace tmeasure
