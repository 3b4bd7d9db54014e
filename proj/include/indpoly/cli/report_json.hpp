#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "indpoly/bounds.hpp"

namespace indpoly::cli {

using Json = nlohmann::ordered_json;

/// Layout:
///   {graph: {name, n, m, delta, delta_min, omega, phi, claw_free, triangle_free},
///    polynomial: ["1", "27", ...],
///    roots: [{re, im, multiplicity}] | null, residual, lambda1: {re, im, real, conjugate_pair} | null,
///    bounds: [{name, source, technique, value, exact, applicable, conditional, note,
///              params: {...}, sound: bool | null}]}
/// Coefficients are decimal strings. Infinite numbers are written as "inf".
Json to_json(const BoundReport& r);
/// Inverse of to_json. ParseError on malformed input.
BoundReport report_from_json(const Json& j);

/// to_json(r).dump(2) plus a trailing newline.
std::string emit(const BoundReport& r);
BoundReport parse_report(const std::string& text);

}  // namespace indpoly::cli
