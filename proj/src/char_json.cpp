#include "lefschetz/char_json.hpp"

#include "lefschetz/error.hpp"

namespace lefschetz {

using nlohmann::json;

void reject_unknown_keys(const json& j, std::initializer_list<const char*> allowed, const std::string& where) {
  for (const auto& [key, value] : j.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) throw Error(ErrorCode::ParseError, where + ": unknown field '" + key + "'");
  }
}

namespace {

Integer parse_coefficient(const json& c, const std::string& where) {
  try {
    if (c.is_string()) return Integer(c.get<std::string>());
    if (c.is_number_integer()) return Integer(c.get<long long>());
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::ParseError, where + ": coefficient must be a decimal string");
}

}  // namespace

long long header_denominator(const json& j) {
  if (!j.contains("lattice_denominator")) return 1;
  const auto d = j.at("lattice_denominator");
  if (!d.is_number_integer() || d.get<long long>() < 1)
    throw Error(ErrorCode::ParseError, "lattice_denominator must be a positive integer");
  return d.get<long long>();
}

std::size_t header_rank(const json& j) {
  if (!j.is_object() || !j.contains("rank") || !j.at("rank").is_number_integer() || j.at("rank").get<long long>() < 0)
    throw Error(ErrorCode::ParseError, "missing or invalid 'rank'");
  return j.at("rank").get<std::size_t>();
}

Weight weight_from_json(const json& j, std::size_t rank, long long lattice_denominator, const std::string& where) {
  if (!j.is_array() || j.size() != rank)
    throw Error(ErrorCode::ParseError, where + ": expected an integer vector of length " + std::to_string(rank));
  std::vector<long long> v;
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw Error(ErrorCode::ParseError, where + ": exponent entries must be integers");
    v.push_back(e.get<long long>());
  }
  return Weight(std::move(v), lattice_denominator);
}

LaurentPolynomial terms_from_json(const json& terms, std::size_t rank, long long lattice_denominator,
                                  const std::string& where) {
  if (!terms.is_array()) throw Error(ErrorCode::ParseError, where + ": expected a term list");
  LaurentPolynomial p(rank);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& t = terms[i];
    const std::string here = where + "[" + std::to_string(i) + "]";
    if (!t.is_object() || !t.contains("coeff") || !t.contains("exp"))
      throw Error(ErrorCode::ParseError, here + ": term needs 'coeff' and 'exp'");
    reject_unknown_keys(t, {"coeff", "exp"}, here);
    p += LaurentPolynomial::monomial(weight_from_json(t.at("exp"), rank, lattice_denominator, here + ".exp"),
                                     parse_coefficient(t.at("coeff"), here + ".coeff"));
  }
  return p;
}

json terms_to_json(const LaurentPolynomial& p, long long lattice_denominator) {
  json out = json::array();
  for (const auto& [e, c] : p.refined_terms(lattice_denominator))
    out.push_back({{"coeff", c.str()}, {"exp", e}});
  return out;
}

json to_json(const LaurentPolynomial& p) {
  return {{"rank", p.rank()},
          {"lattice_denominator", p.lattice_denominator()},
          {"numerator", terms_to_json(p, p.lattice_denominator())},
          {"denominator", json::array()}};
}

json to_json(const CharacterFraction& x) {
  const long long d = x.lattice_denominator();
  json den = json::array();
  for (const auto& f : x.denominator()) den.push_back({{"exp", f.weight().scaled_to(d)}});
  return {{"rank", x.rank()},
          {"lattice_denominator", d},
          {"numerator", terms_to_json(x.numerator(), d)},
          {"denominator", den}};
}

CharacterFraction fraction_from_json(const json& j) {
  const std::size_t rank = header_rank(j);
  reject_unknown_keys(j, {"rank", "lattice_denominator", "numerator", "denominator"}, "fraction");
  const long long d = header_denominator(j);
  if (!j.contains("numerator")) throw Error(ErrorCode::ParseError, "fraction: missing 'numerator'");
  LaurentPolynomial num = terms_from_json(j.at("numerator"), rank, d, "numerator");
  std::vector<Weight> den;
  if (j.contains("denominator")) {
    const auto& arr = j.at("denominator");
    if (!arr.is_array()) throw Error(ErrorCode::ParseError, "denominator: expected a list");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string here = "denominator[" + std::to_string(i) + "]";
      if (!arr[i].is_object() || !arr[i].contains("exp")) throw Error(ErrorCode::ParseError, here + ": needs 'exp'");
      reject_unknown_keys(arr[i], {"exp"}, here);
      Weight w = weight_from_json(arr[i].at("exp"), rank, d, here + ".exp");
      if (w.is_zero()) throw Error(ErrorCode::ParseError, here + ": zero weight in denominator");
      den.push_back(std::move(w));
    }
  }
  return CharacterFraction::over_binomials(num, den);
}

LaurentPolynomial polynomial_from_json(const json& j) {
  auto x = fraction_from_json(j);
  if (!x.is_polynomial()) throw Error(ErrorCode::ParseError, "expected a polynomial (empty denominator)");
  return x.numerator();
}

}  // namespace lefschetz
