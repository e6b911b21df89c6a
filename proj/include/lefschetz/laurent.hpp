#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lefschetz/weight.hpp"

namespace lefschetz {

using Integer = boost::multiprecision::cpp_int;

/// Exact character of a torus representation: a finite sum of c * t^w with
/// arbitrary-precision integer coefficients c and exponents w in (1/D)Z^n.
///
/// Canonical form: no zero coefficients, and D is the smallest lattice
/// denominator that holds every exponent (D = 1 for the zero polynomial).
/// Structural equality is therefore value equality.
class LaurentPolynomial {
 public:
  /// Exponent coordinates, as integers relative to lattice_denominator().
  using Exponent = std::vector<long long>;
  using TermMap = std::map<Exponent, Integer>;

  LaurentPolynomial() = default;
  explicit LaurentPolynomial(std::size_t rank) : rank_(rank) {}
  LaurentPolynomial(std::size_t rank, long long lattice_denominator, TermMap terms);

  static LaurentPolynomial constant(std::size_t rank, const Integer& c);
  static LaurentPolynomial monomial(const Weight& w, const Integer& c = 1);
  /// The binomial 1 - t^w.
  static LaurentPolynomial one_minus(const Weight& w);

  std::size_t rank() const noexcept { return rank_; }
  long long lattice_denominator() const noexcept { return denominator_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t num_terms() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;

  Integer coefficient(const Weight& w) const;
  /// Terms as (weight, coefficient), in ascending exponent order.
  std::vector<std::pair<Weight, Integer>> weighted_terms() const;
  /// Value at the identity element (every t_i = 1).
  Integer coefficient_sum() const;

  /// The term map re-expressed over a refined denominator D (a multiple of
  /// lattice_denominator()).
  TermMap refined_terms(long long lattice_denominator) const;

  LaurentPolynomial operator-() const;
  LaurentPolynomial& operator+=(const LaurentPolynomial& other);
  LaurentPolynomial& operator-=(const LaurentPolynomial& other);
  LaurentPolynomial& operator*=(const LaurentPolynomial& other);

  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator*(const Integer& c, const LaurentPolynomial& p);

  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a.rank_ == b.rank_ && a.denominator_ == b.denominator_ && a.terms_ == b.terms_;
  }

  /// Multiplication by the monomial t^w.
  LaurentPolynomial shifted(const Weight& w) const;
  /// The substitution t -> t^{-1}.
  LaurentPolynomial inverted() const;
  /// Applies an exponent map term by term (e.g. a Weyl group action).
  LaurentPolynomial map_weights(const std::function<Weight(const Weight&)>& f) const;

  /// Human-readable form, terms in descending exponent order, e.g.
  /// "t^1 + 1 + t^-1" in rank one or "t1^2*t2^-1 - 3" in higher rank.
  std::string to_string() const;

 private:
  void canonicalize();
  void require_rank(const LaurentPolynomial& other) const;

  std::size_t rank_ = 0;
  long long denominator_ = 1;
  TermMap terms_;
};

/// Exact quotient p / (1 - t^alpha) in the Laurent ring, or nullopt if the
/// binomial does not divide p. alpha must be nonzero.
std::optional<LaurentPolynomial> try_divide_by_one_minus(const LaurentPolynomial& p, const Weight& alpha);

std::string format_monomial(const Weight& w);

}  // namespace lefschetz
