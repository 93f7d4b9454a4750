#pragma once

#include <string>

#include "json.hpp"
#include "ssav/htclassify.hpp"

namespace ssav {

/// Fields p, n, q, sign, g, case, param, variant, weil_coeffs, e, char_coeffs.
/// q and every coefficient are decimal strings; coefficients ascend.
nlohmann::json to_json(const IsogenyClassRecord& rec);

/// Inverse of to_json. Throws BadArguments on a malformed object.
IsogenyClassRecord record_from_json(const nlohmann::json& j);

/// "p,n,q,g,case,param,variant,e,weil_coeffs,char_coeffs"
std::string csv_header();
/// Coefficient lists are joined with ';'.
std::string to_csv_row(const IsogenyClassRecord& rec);

/// Human-readable one-liner, e.g. "g=2 RealOdd t=1 sign=- e=2 (X^2 - 3)^2".
std::string to_text_line(const IsogenyClassRecord& rec);

}  // namespace ssav
