#include "lefschetz/scenario_json.hpp"

#include "lefschetz/char_json.hpp"
#include "lefschetz/error.hpp"

namespace lefschetz {

using nlohmann::json;

OperatorKind parse_operator_kind(const std::string& text) {
  if (text == "generic") return OperatorKind::Generic;
  if (text == "dolbeault") return OperatorKind::Dolbeault;
  if (text == "deRham") return OperatorKind::DeRham;
  throw Error(ErrorCode::ParseError, "unknown operator '" + text + "'");
}

FixedPointScenario scenario_from_json(const json& j) {
  const std::size_t rank = header_rank(j);
  reject_unknown_keys(j, {"rank", "operator", "lattice_denominator", "points"}, "scenario");
  const long long d = header_denominator(j);
  if (!j.contains("operator") || !j.at("operator").is_string())
    throw Error(ErrorCode::ParseError, "scenario: missing 'operator'");
  const OperatorKind kind = parse_operator_kind(j.at("operator").get<std::string>());
  if (!j.contains("points") || !j.at("points").is_array())
    throw Error(ErrorCode::ParseError, "scenario: 'points' must be a list");

  std::vector<FixedPointDatum> points;
  const auto& arr = j.at("points");
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const auto& pj = arr[i];
    std::string here = "points[" + std::to_string(i) + "]";
    if (!pj.is_object()) throw Error(ErrorCode::ParseError, here + ": expected an object");
    reject_unknown_keys(pj, {"name", "tangent_weights", "bundle", "plus", "minus"}, here);
    FixedPointDatum p;
    p.name = pj.contains("name") && pj.at("name").is_string() ? pj.at("name").get<std::string>() : "p" + std::to_string(i);
    if (!pj.contains("tangent_weights") || !pj.at("tangent_weights").is_array())
      throw Error(ErrorCode::ParseError, here + ": 'tangent_weights' must be a list");
    const auto& tw = pj.at("tangent_weights");
    for (std::size_t k = 0; k < tw.size(); ++k)
      p.tangent_weights.push_back(
          weight_from_json(tw[k], rank, d, here + ".tangent_weights[" + std::to_string(k) + "]"));
    auto read = [&](const char* key) -> std::optional<LaurentPolynomial> {
      if (!pj.contains(key)) return std::nullopt;
      return terms_from_json(pj.at(key), rank, d, here + "." + key);
    };
    p.plus = read("plus");
    p.minus = read("minus");
    p.bundle = read("bundle");
    points.push_back(std::move(p));
  }
  return FixedPointScenario(rank, kind, std::move(points));
}

json to_json(const FixedPointScenario& s) {
  long long d = 1;
  for (const auto& p : s.points()) {
    for (const auto& w : p.tangent_weights) d = lcm_ll(d, w.denominator());
    for (const auto* c : {&p.plus, &p.minus, &p.bundle})
      if (*c) d = lcm_ll(d, (*c)->lattice_denominator());
  }
  json points = json::array();
  for (const auto& p : s.points()) {
    json pj{{"name", p.name}, {"tangent_weights", json::array()}};
    for (const auto& w : p.tangent_weights) pj["tangent_weights"].push_back(w.scaled_to(d));
    if (p.plus) pj["plus"] = terms_to_json(*p.plus, d);
    if (p.minus) pj["minus"] = terms_to_json(*p.minus, d);
    if (p.bundle) pj["bundle"] = terms_to_json(*p.bundle, d);
    points.push_back(std::move(pj));
  }
  json out{{"rank", s.rank()}, {"operator", std::string(to_string(s.kind()))}, {"points", std::move(points)}};
  if (d != 1) out["lattice_denominator"] = d;
  return out;
}

}  // namespace lefschetz
