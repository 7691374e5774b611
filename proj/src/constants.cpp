#include "tmeasure/constants.hpp"

#include <map>
#include <string>

namespace tmeasure {

const std::vector<ConstantEntry>& constants_table() {
    static const std::vector<ConstantEntry> table = {
        // main estimate and parameter choices
        {"main", "211", "main exponent: -211 D (...)(...)(...) (log E)^-2"},
        {"U.coef", "3.3", "U = (3.3 D log(D+2) + log E) / log E"},
        {"V.theta", "2", "V = (2E|theta| + D log A + 6 log E) / log E"},
        {"V.logE", "6", "log E coefficient in V"},
        {"W.logD", "4", "W numerator: log B + loglog A + 4 log D + 2 log(E|theta|+) + 10"},
        {"W.theta", "2", "log(E|theta|+) coefficient in W"},
        {"W.const", "10", "constant term in W"},
        {"S.coef", "10.5", "S = [10.5 UV]"},
        {"S1.coef", "12", "S1 = [12 DW + 0.5]"},
        {"T.coef", "20.2", "T = [20.2 DVW]"},
        {"T1.coef", "4.2", "T1 = [4.2 U + 0.5]"},
        {"H.coef", "1.5", "H = [1.5 W log E]"},
        {"half", "0.5", "rounding offset in S1 and T1"},
        {"U.min", "1", "U >= 1"},
        {"V.min", "6", "V >= 6"},
        {"W.min", "2", "W >= 2"},
        {"lemma4.ratio", "107/103", "log d_sigma < (107/103) sigma H"},

        // pi
        {"pi.alg", "1.2e6", "|pi - xi| >= exp(-1.2e6 d (log L + d log d)(1 + log d))"},
        {"pi.poly", "2e6", "|P(pi)| >= exp(-2e6 d (log L + d log d)(1 + log d))"},
        {"pi.U", "6.6", "6.6 d log(2d+2) + log E < 11.2 d (1 + log d)"},
        {"pi.U.rhs", "11.2", "right side of the U-type estimate for pi"},
        {"pi.W.logd", "3", "d (h + 3 log(2d) + 2 log pi + 14) <= 17 (log L + d log d)"},
        {"pi.W.logpi", "2", "log pi coefficient"},
        {"pi.W.const", "14", "constant term"},
        {"pi.W.rhs", "17", "right side coefficient"},
        {"pi.V", "59.5", "1 + 2E|theta| + 6 log E <= 59.5"},

        // log 2
        {"log2.alg", "151000", "|log 2 - xi| >= exp(-151000 d^2 (log L + d log d)(1 + log d)^-1)"},
        {"log2.poly", "2.6e5", "|P(log 2)| >= exp(-2.6e5 d^2 (log L + d log d)(1 + log d)^-1)"},
        {"log2.W.logd", "4", "d (h + 4 log d + 12) <= 13 (log L + d log d)"},
        {"log2.W.const", "12", "constant term"},
        {"log2.W.rhs", "13", "right side coefficient"},
        {"log2.U.rhs", "5", "3.3 d log(d+2) + log(ed) < 5 d (1 + log d)"},
        {"log2.V.rhs", "11", "d + 2E|theta| + 6 log E <= 11 d"},

        // e
        {"e.alg", "76000", "|e - xi| >= exp(-76000 d^2 (log L + d))"},
        {"e.poly", "1.3e5", "|P(e)| >= exp(-1.3e5 d^2 (log L + d))"},
        {"e.W.loglogA", "3", "3 loglog A + 6 log d + 12 <= 9 log E"},
        {"e.W.logd", "6", "log d coefficient"},
        {"e.W.const", "12", "constant term"},
        {"e.W.rhs", "9", "right side coefficient"},
        {"e.U.rhs", "10/3", "3.3 d log(d+2) + log E <= (10/3) d log E"},
        {"e.V.rhs", "12", "d log A + 2E|theta| + 6 log E <= 12 (d + log L)"},

        // exp(beta) - alpha and beta - log alpha
        {"t5", "105500", "-105500 D^2 log A (...)(D log D + log E)(log E)^-2"},
        {"t5.W.rhs", "12", "W numerator <= 12 (h + log+ log A + log D + log E)"},
        {"t5.V.rhs", "9", "D log A + 2E|beta| + 6 log E <= 9 D log A"},
        {"t5.U.rhs", "500", "9 * 12 (3.3 D log(D+2) + log E) <= 500 (D log D + log E)"},

        // closing chain of the main estimate
        {"close.T", "20.2", "T + 1 <= 20.2 DVW + 1"},
        {"close.T.slack", "1/12", "20.2 DVW + 1 <= (20.2 + 1/12) DVW"},
        {"close.T1", "5.2", "T1 + 1/2 <= 5.2 U"},
        {"close.S1", "12.25", "S1 <= 12.25 DW"},
        {"close.block1", "31.85", "1/2 S1 (T1 + 1/2)(D log A + 2E|theta| + 2) <= 31.85 DUVW log E"},
        {"close.log13", "13.25", "log(1 + S1/H) <= log(1 + 12.25 D / log E) <= log 13.25 + log D"},
        {"close.log13.up", "2.6", "log 13.25 <= 2.6"},
        {"close.block2.mid", "3.6", "20.2 (D^2 VW log D + 3.6 D^2 VW + DVW log E)"},
        {"close.block2", "20.2", "... <= 20.2 DUVW log E"},
        {"close.U.up", "4.7", "U <= 1 + 3.3 D log(D+2) <= 4.7 D^(3/2)"},
        {"close.V.up", "9.8", "V <= 9.8 E|theta|+ D log A"},
        {"close.ST1", "50", "S T1 <= 50 U^2 V"},
        {"close.block3", "10.5", "DS (log B + log S + log(E|theta|+ T1)) <= 10.5 DUVW log E"},
        {"close.logL.D", "3.5", "log(211 DUVW) <= 10 + 3.5 log D + log(E|theta|+) + loglog A + log W"},
        {"close.logL.W", "1.4", "W log E + log W <= 1.4 W log E"},
        {"close.logL.UVW", "0.24", "1.4 W log E <= 0.24 UVW log E"},
        {"close.DSH", "15.75", "DSH <= 15.75 DUVW log E"},
        {"close.DH", "0.25", "1.5 DW log E <= 0.25 DUVW log E"},
        {"close.SlogE", "5.25", "10.5 UV log E <= 5.25 DUVW log E"},
        {"close.log2E", "1/6", "2 log E <= (1/6) DUVW log E"},
        {"close.DH.logL", "0.49", "0.25 + 0.24"},
        {"close.block4", "22.28", "DH + (107/103) DSH + S log E + log(2E) + D log L < 22.28 DUVW log E"},
        {"close.total", "84.83", "31.85 + 20.2 + 10.5 + 22.28"},
        {"close.S1.low", "24", "2 S1 + 1 >= 24 DW"},
        {"close.T1.up", "10.4", "2 T1 + 1 <= 10.4 U"},
        {"close.ratio.a", "104/105", "(104/105)(101/120 + 1/6) < 1"},
        {"close.ratio.b", "101/120", "20.2/24"},
    };
    return table;
}

const Rational& K(std::string_view key) {
    static const std::map<std::string, Rational, std::less<>> values = [] {
        std::map<std::string, Rational, std::less<>> m;
        for (const auto& e : constants_table()) m.emplace(std::string(e.key), parse_rational(e.value));
        return m;
    }();
    auto it = values.find(key);
    if (it == values.end()) throw DomainError("unknown constant '" + std::string(key) + "'");
    return it->second;
}

}  // namespace tmeasure
