#pragma once

// JSON serialization of certified values and module reports. Intervals are
// written as decimal endpoint pairs rounded outward, with the working
// precision alongside.

#include "tmeasure/bounds.hpp"
#include "tmeasure/search.hpp"

#include <json.hpp>

namespace tmeasure::report {

using Json = nlohmann::ordered_json;

inline constexpr int kDefaultDigits = 20;

/// {"lo": "...", "hi": "...", "bits": n, "exact": bool}
Json interval(const CertifiedReal& x, int digits = kDefaultDigits);
Json interval(const CertifiedComplex& z, int digits = kDefaultDigits);

Json chain(const ChainReport& r, int digits = kDefaultDigits);
Json param_check(const ParamCheck& c, int digits = kDefaultDigits);
Json bound_params(const BoundParams& p, int digits = kDefaultDigits);
Json search_result(const SearchResult& r, int digits = kDefaultDigits);
Json bound_check(const BoundCheck& c, int digits = kDefaultDigits);
Json constants();

/// Polynomial as leading-first coefficient list plus its printed form.
Json polynomial(const IntPolynomial& p);

}  // namespace tmeasure::report
