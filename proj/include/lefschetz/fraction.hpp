#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lefschetz/laurent.hpp"
#include "lefschetz/weight.hpp"

namespace lefschetz {

/// The binomial 1 - t^w with w normalized: nonzero, first nonzero entry
/// positive. Factors in this form compare structurally, so multisets of them
/// can be matched and cancelled exactly.
class BinomialFactor {
 public:
  /// Throws unless w is already normalized.
  explicit BinomialFactor(Weight w);

  /// Rewrites 1 - t^alpha as unit * (1 - t^beta) with beta normalized.
  /// The unit is 1 or the monomial -t^alpha.
  struct Normalized;
  static Normalized normalize(const Weight& alpha);

  const Weight& weight() const noexcept { return weight_; }
  std::size_t rank() const noexcept { return weight_.rank(); }
  LaurentPolynomial expanded() const { return LaurentPolynomial::one_minus(weight_); }
  std::string to_string() const;

  friend bool operator==(const BinomialFactor&, const BinomialFactor&) = default;
  friend auto operator<=>(const BinomialFactor&, const BinomialFactor&) = default;

 private:
  Weight weight_;
};

struct BinomialFactor::Normalized {
  BinomialFactor factor;
  LaurentPolynomial unit;
};

/// Exact quotient p / (1 - t^f); throws NotDivisible.
LaurentPolynomial poly_exact_divide(const LaurentPolynomial& p, const BinomialFactor& f);

/// numerator / prod (1 - t^beta) over a sorted multiset of normalized
/// binomials. Every isolated-fixed-point contribution has this shape.
class CharacterFraction {
 public:
  CharacterFraction() = default;
  explicit CharacterFraction(LaurentPolynomial numerator);
  CharacterFraction(LaurentPolynomial numerator, std::vector<BinomialFactor> denominator);

  /// numerator / prod_j (1 - t^{weights[j]}) for arbitrary nonzero weights;
  /// the normalization units are folded into the numerator.
  static CharacterFraction over_binomials(const LaurentPolynomial& numerator, std::span<const Weight> weights);

  std::size_t rank() const noexcept { return numerator_.rank(); }
  const LaurentPolynomial& numerator() const noexcept { return numerator_; }
  const std::vector<BinomialFactor>& denominator() const noexcept { return denominator_; }
  bool is_polynomial() const noexcept { return denominator_.empty(); }
  bool is_zero() const noexcept { return numerator_.is_zero(); }

  LaurentPolynomial expanded_denominator() const;
  /// Smallest D such that numerator and every factor exponent lie in (1/D)Z^n.
  long long lattice_denominator() const;

  /// The substitution t -> t^{-1}, renormalized.
  CharacterFraction inverted() const;

  CharacterFraction operator-() const { return CharacterFraction(-numerator_, denominator_); }

  std::string to_string() const;

 private:
  LaurentPolynomial numerator_;
  std::vector<BinomialFactor> denominator_;
};

LaurentPolynomial product_of(std::span<const BinomialFactor> factors, std::size_t rank);

CharacterFraction frac_simplify(const CharacterFraction& x);
CharacterFraction frac_add(const CharacterFraction& a, const CharacterFraction& b);
CharacterFraction frac_mul(const CharacterFraction& a, const CharacterFraction& b);
bool frac_equal(const CharacterFraction& a, const CharacterFraction& b);

inline CharacterFraction operator+(const CharacterFraction& a, const CharacterFraction& b) { return frac_add(a, b); }
inline CharacterFraction operator-(const CharacterFraction& a, const CharacterFraction& b) { return frac_add(a, -b); }
inline CharacterFraction operator*(const CharacterFraction& a, const CharacterFraction& b) { return frac_mul(a, b); }

}  // namespace lefschetz
