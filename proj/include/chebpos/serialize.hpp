#pragma once

#include <string>

#include <json.hpp>

#include "chebpos/census.hpp"
#include "chebpos/chebyshev.hpp"
#include "chebpos/laurent.hpp"
#include "chebpos/verify.hpp"

namespace chebpos {

using Json = nlohmann::ordered_json;

/// {"dimension": d, "terms": [{"exp": [...], "num": "...", "den": "..."}, ...]}
/// with terms in graded-lex order.
Json to_json(const LaurentPoly& p);
/// Inverse of to_json. Throws std::invalid_argument on schema violations.
LaurentPoly laurent_from_json(const Json& j);

/// Array of coefficient strings, index = exponent.
Json to_json(const DensePoly& p);

/// [{"e": [...], "count": "..."}, ...] in graded-lex order.
Json to_json(const CensusMap& census);

/// {"property", "params", "pass", "counterexample", "checks", "notes"}.
Json to_json(const VerifyReport& report);
Json to_json(const std::optional<Counterexample>& cx);

/// Header e_1..e_r,count then one row per class.
std::string census_csv(const CensusMap& census, std::size_t rank);

/// Header e_1..e_d,coeff then one row per term.
std::string laurent_csv(const LaurentPoly& p);

} // namespace chebpos
