#include "qvertex/json_io.hpp"

#include "qvertex/errors.hpp"

namespace qv {

std::string rational_string(const Rational& c) {
  Rational r = c;
  r.canonicalize();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(const std::string& s) {
  Rational c;
  if (s.empty() || c.set_str(s, 10) != 0) throw ParseError("bad rational '" + s + "'");
  if (c.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
  c.canonicalize();
  return c;
}

Json to_json(const LaurentPoly& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) out.push_back(Json::array({e, rational_string(c)}));
  return out;
}

Json to_json(const QRational& r) {
  auto [n, d] = r.canonical();
  Json out;
  out["num"] = to_json(n);
  out["den"] = to_json(d);
  return out;
}

Json to_json(const MultiSeries& s) {
  Json out;
  const auto& ctx = *s.context();
  out["vars"] = ctx.variables();
  Json trunc = Json::array();
  for (const auto& c : ctx.constraints()) {
    Json t;
    t["weights"] = c.weights;
    t["cap"] = c.cap;
    trunc.push_back(std::move(t));
  }
  out["trunc"] = std::move(trunc);
  Json terms = Json::array();
  for (const auto& [e, c] : s.terms()) terms.push_back(Json::array({e, to_json(c)}));
  out["terms"] = std::move(terms);
  return out;
}

Json to_json(const Partition& p) { return Json(p.parts()); }

Json to_json(const Report& r) {
  Json out;
  out["suite"] = r.name;
  out["passed"] = r.passed();
  out["checks"] = r.checks;
  out["failures"] = r.failures;
  return out;
}

LaurentPoly laurent_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("Laurent polynomial must be a JSON array");
  std::vector<std::pair<int, Rational>> terms;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer())
      throw ParseError("Laurent term must be [exponent, coefficient]");
    Rational c = t[1].is_string() ? parse_rational(t[1].get<std::string>())
                 : t[1].is_number_integer() ? Rational(t[1].get<long>())
                                            : throw ParseError("bad Laurent coefficient");
    terms.emplace_back(t[0].get<int>(), c);
  }
  return LaurentPoly::from_terms(terms);
}

QRational qrational_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    throw ParseError("rational function must have num and den");
  return QRational::ratio(laurent_from_json(j["num"]), laurent_from_json(j["den"]));
}

Partition partition_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("partition must be a JSON array");
  std::vector<int> parts;
  for (const auto& p : j) {
    if (!p.is_number_integer()) throw ParseError("partition parts must be integers");
    parts.push_back(p.get<int>());
  }
  try {
    return Partition(parts);
  } catch (const InvariantError& e) {
    throw ParseError(e.what());
  }
}

Partition parse_partition(const std::string& text) {
  std::string s = text;
  if (s.find('[') == std::string::npos) s = "[" + s + "]";
  Json j = Json::parse(s, nullptr, false);
  if (j.is_discarded()) throw ParseError("cannot parse partition '" + text + "'");
  return partition_from_json(j);
}

}  // namespace qv
