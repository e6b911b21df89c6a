#pragma once

#include <nlohmann/json.hpp>

#include "lefschetz/fraction.hpp"

namespace lefschetz {

// Wire format shared by every command that emits symbolic output:
//   {"rank": n, "lattice_denominator": D,
//    "numerator":   [{"coeff": "<decimal>", "exp": [...]}, ...],
//    "denominator": [{"exp": [...]}, ...]}
// Exponents are integers relative to D; coefficients are decimal strings.

nlohmann::json to_json(const LaurentPolynomial& p);
nlohmann::json to_json(const CharacterFraction& x);

/// Accepts either form; a missing "denominator" means a polynomial.
CharacterFraction fraction_from_json(const nlohmann::json& j);
LaurentPolynomial polynomial_from_json(const nlohmann::json& j);

/// Parses a bare term list [{"coeff": "...", "exp": [...]}, ...] of the
/// given rank, with exponents relative to lattice_denominator.
LaurentPolynomial terms_from_json(const nlohmann::json& terms, std::size_t rank, long long lattice_denominator,
                                  const std::string& where);
nlohmann::json terms_to_json(const LaurentPolynomial& p, long long lattice_denominator);

/// Reads an integer weight vector of length rank, relative to D.
Weight weight_from_json(const nlohmann::json& j, std::size_t rank, long long lattice_denominator,
                        const std::string& where);

// Helpers shared by the other JSON readers.
void reject_unknown_keys(const nlohmann::json& j, std::initializer_list<const char*> allowed, const std::string& where);
/// "lattice_denominator" if present, else 1.
long long header_denominator(const nlohmann::json& j);
std::size_t header_rank(const nlohmann::json& j);

}  // namespace lefschetz
