#pragma once

#include <json.hpp>
#include <string>

#include "strang/arquiver.hpp"
#include "strang/polynomial.hpp"
#include "strang/suites.hpp"

namespace strang {

using Json = nlohmann::ordered_json;

Json to_json(const Field& f);
Json to_json(const AlgebraSpec& s);
/// Arrow matrices as row lists keyed by arrow name; shapes follow from "dims".
Json to_json(const Representation& r);
Json to_json(const Word& w);
Json to_json(const Recognition& r);
Json to_json(const ARComponentGraph& g);
Json to_json(const CheckReport& r);
Json to_json(const IntPoly& p);

/// Throws Error("bad-json") on missing or inconsistent fields.
Field field_from_json(const Json& j);
AlgebraSpec spec_from_json(const Json& j);
Representation representation_from_json(const Json& j);
Word word_from_json(const Json& j, const AlgebraSpec& spec);
CheckReport report_from_json(const Json& j);

std::string to_string(RepKind k);
RepKind rep_kind_from_string(const std::string& s);

/// Fixed-width table: status, id, anchor, observed, expected.
std::string report_text(const CheckReport& r);

}  // namespace strang
