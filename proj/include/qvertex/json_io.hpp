#pragma once

#include <json.hpp>

#include "qvertex/multiseries.hpp"
#include "qvertex/partition.hpp"
#include "qvertex/qrational.hpp"
#include "qvertex/report.hpp"

namespace qv {

using Json = nlohmann::ordered_json;

/// "num/den" with den > 0 (den is written even when it is 1).
std::string rational_string(const Rational& c);
Rational parse_rational(const std::string& s);

/// [[exponent, "num/den"], ...] in increasing exponent order.
Json to_json(const LaurentPoly& p);
/// {"num": ..., "den": ...} in canonical form.
Json to_json(const QRational& r);
/// {"vars": [...], "trunc": [...], "terms": [[exponents, QRational], ...]}.
Json to_json(const MultiSeries& s);
Json to_json(const Partition& p);
Json to_json(const Report& r);

LaurentPoly laurent_from_json(const Json& j);
QRational qrational_from_json(const Json& j);
/// Accepts a JSON array such as [3,1]; throws ParseError otherwise.
Partition partition_from_json(const Json& j);
/// Parses partition text: JSON array "[3,1]" or comma list "3,1" ("" is empty).
Partition parse_partition(const std::string& text);

}  // namespace qv
