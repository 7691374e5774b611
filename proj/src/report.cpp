#include "tmeasure/report.hpp"

#include "tmeasure/constants.hpp"

namespace tmeasure::report {

Json interval(const CertifiedReal& x, int digits) {
    Json j;
    j["lo"] = to_decimal(x.lo(), digits, false);
    j["hi"] = to_decimal(x.hi(), digits, true);
    j["bits"] = x.bits();
    j["exact"] = x.is_exact();
    return j;
}

Json interval(const CertifiedComplex& z, int digits) {
    Json j;
    j["re"] = interval(z.re(), digits);
    j["im"] = interval(z.im(), digits);
    return j;
}

Json chain(const ChainReport& r, int digits) {
    Json j;
    j["name"] = r.name;
    j["pass"] = r.pass();
    j["failures"] = r.failures();
    Json items = Json::array();
    for (const auto& item : r.items) {
        Json i;
        i["label"] = item.label;
        i["verdict"] = verdict_name(item.verdict);
        i["strict"] = item.strict;
        i["gating"] = item.gating;
        if (item.verdict != Verdict::inconclusive) {
            i["lhs"] = interval(item.lhs, digits);
            i["rhs"] = interval(item.rhs, digits);
        }
        items.push_back(std::move(i));
    }
    j["items"] = std::move(items);
    return j;
}

Json param_check(const ParamCheck& c, int digits) {
    Json j;
    j["label"] = c.label;
    j["verdict"] = verdict_name(c.verdict);
    j["lhs"] = interval(c.lhs, digits);
    j["rhs"] = interval(c.rhs, digits);
    return j;
}

Json bound_params(const BoundParams& p, int digits) {
    Json j;
    j["D"] = p.D();
    j["U"] = interval(p.values.U, digits);
    j["V"] = interval(p.values.V, digits);
    j["W"] = interval(p.values.W, digits);
    j["log_E"] = interval(p.values.logE, digits);
    j["S"] = p.S.get_str();
    j["S1"] = p.S1.get_str();
    j["T"] = p.T.get_str();
    j["T1"] = p.T1.get_str();
    j["H"] = p.H.get_str();
    j["L"] = p.L.get_str();
    Json checks = Json::array();
    for (const auto& c : p.checks) checks.push_back(param_check(c, digits));
    j["checks"] = std::move(checks);
    j["checks_pass"] = p.checks_pass();
    return j;
}

Json polynomial(const IntPolynomial& p) {
    Json j;
    Json coeffs = Json::array();
    for (const auto& c : p.leading_first()) coeffs.push_back(c.get_str());
    j["coefficients"] = std::move(coeffs);
    j["text"] = p.to_string();
    return j;
}

Json search_result(const SearchResult& r, int digits) {
    Json j;
    j["target"] = target_name(r.target);
    j["form"] = r.form == Form::polynomial ? "polynomial" : "algebraic";
    j["d_max"] = r.d_max;
    j["L_max"] = r.L_max;
    j["enumerated"] = r.enumerated.get_str();
    j["survivors"] = r.screened_survivors;
    j["best_poly"] = polynomial(r.best_poly);
    j["best_value"] = interval(r.best_value, digits);
    if (r.witness_root) j["witness_root"] = interval(r.witness_root->root, digits);
    j["separation_bits"] = r.bits;
    return j;
}

Json bound_check(const BoundCheck& c, int digits) {
    Json j;
    j["target"] = target_name(c.query.target);
    j["form"] = c.query.form == Form::polynomial ? "polynomial" : "algebraic";
    j["d"] = c.query.d;
    j["L"] = to_string(c.query.L);
    j["verdict"] = verdict_name(c.verdict);
    if (c.verdict != Verdict::inconclusive) {
        j["log_value"] = interval(c.log_value, digits);
        j["bound"] = interval(c.bound, digits);
        j["margin"] = interval(c.margin, digits);
    }
    return j;
}

Json constants() {
    Json arr = Json::array();
    for (const auto& e : constants_table()) {
        Json j;
        j["key"] = std::string(e.key);
        j["value"] = std::string(e.value);
        j["role"] = std::string(e.role);
        arr.push_back(std::move(j));
    }
    return arr;
}

}  // namespace tmeasure::report
