#pragma once

#include <string>

#include <json.hpp>

#include "setforge/family.hpp"
#include "setforge/intervals.hpp"
#include "setforge/partition.hpp"

// JSON wire formats. Emission is canonical (fixed key order, sorted
// members, rationals in lowest terms), so emit(parse(s)) == s for any
// canonical s. Parsers accept unsorted input and canonicalize; every
// validation failure is an input_error naming the offending field.
namespace setforge {

/// {"universe": u, "sets": [[1,2],[3]]}, members in canonical mask order,
/// elements ascending and 1-based.
nlohmann::ordered_json family_to_json(const Family& f);
Family family_from_json(const nlohmann::json& j, bool allow_empty = false);

/// Same shape as a family, but blocks ordered by least element.
nlohmann::ordered_json partition_to_json(const Partition& p);
Partition partition_from_json(const nlohmann::json& j);

/// {"points": ["1/2"], "intervals": [{"lo": "-inf", "hi": "3/4"}]}.
/// Endpoints are "p/q" in lowest terms or "-inf" / "+inf".
nlohmann::ordered_json interval_set_to_json(const IntervalSet& s);
IntervalSet interval_set_from_json(const nlohmann::json& j);

/// Always "p/q", lowest terms, denominator positive ("3" emits as "3/1").
std::string rational_to_string(const rational& q);

/// Accepts "p", "p/q", and decimal "p.d" forms, with optional sign.
rational rational_from_string(const std::string& text);

std::string ext_real_to_string(const ExtReal& x);
ExtReal ext_real_from_string(const std::string& text);

}  // namespace setforge
