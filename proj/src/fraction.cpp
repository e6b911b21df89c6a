#include "lefschetz/fraction.hpp"

#include <algorithm>
#include <sstream>

#include "lefschetz/error.hpp"

namespace lefschetz {

namespace {

// Max-multiplicity union of two sorted multisets, plus the complements
// (union - a) and (union - b).
struct MultisetLcm {
  std::vector<BinomialFactor> common, missing_from_a, missing_from_b;
};

MultisetLcm lcm_of(const std::vector<BinomialFactor>& a, const std::vector<BinomialFactor>& b) {
  MultisetLcm out;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && *i < *j)) {
      out.common.push_back(*i);
      out.missing_from_b.push_back(*i);
      ++i;
    } else if (i == a.end() || *j < *i) {
      out.common.push_back(*j);
      out.missing_from_a.push_back(*j);
      ++j;
    } else {
      out.common.push_back(*i);
      ++i;
      ++j;
    }
  }
  return out;
}

void require_same_rank(const CharacterFraction& a, const CharacterFraction& b) {
  if (a.rank() != b.rank())
    throw Error(ErrorCode::RankMismatch,
                "fraction ranks " + std::to_string(a.rank()) + " and " + std::to_string(b.rank()));
}

}  // namespace

BinomialFactor::BinomialFactor(Weight w) : weight_(std::move(w)) {
  if (weight_.is_zero()) throw Error(ErrorCode::ZeroWeight, "binomial factor with zero weight");
  if (weight_.leading_sign() < 0)
    throw Error(ErrorCode::ZeroWeight, "binomial factor weight " + weight_.to_string() + " is not normalized");
}

BinomialFactor::Normalized BinomialFactor::normalize(const Weight& alpha) {
  if (alpha.is_zero()) throw Error(ErrorCode::ZeroWeight, "binomial 1 - t^0 vanishes identically");
  if (alpha.leading_sign() > 0)
    return {BinomialFactor(alpha), LaurentPolynomial::constant(alpha.rank(), 1)};
  // 1 - t^alpha = (-t^alpha)(1 - t^{-alpha})
  return {BinomialFactor(-alpha), LaurentPolynomial::monomial(alpha, -1)};
}

std::string BinomialFactor::to_string() const { return "(1 - " + format_monomial(weight_) + ")"; }

LaurentPolynomial poly_exact_divide(const LaurentPolynomial& p, const BinomialFactor& f) {
  auto q = try_divide_by_one_minus(p, f.weight());
  if (!q) throw Error(ErrorCode::NotDivisible, f.to_string() + " does not divide " + p.to_string());
  return std::move(*q);
}

CharacterFraction::CharacterFraction(LaurentPolynomial numerator) : numerator_(std::move(numerator)) {}

CharacterFraction::CharacterFraction(LaurentPolynomial numerator, std::vector<BinomialFactor> denominator)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
  for (const auto& f : denominator_)
    if (f.rank() != numerator_.rank())
      throw Error(ErrorCode::RankMismatch, "denominator factor " + f.to_string() + " has the wrong rank");
  if (numerator_.is_zero())
    denominator_.clear();
  else
    std::sort(denominator_.begin(), denominator_.end());
}

CharacterFraction CharacterFraction::over_binomials(const LaurentPolynomial& numerator,
                                                    std::span<const Weight> weights) {
  LaurentPolynomial num = numerator;
  std::vector<BinomialFactor> den;
  den.reserve(weights.size());
  for (const auto& w : weights) {
    if (w.rank() != numerator.rank())
      throw Error(ErrorCode::RankMismatch, "weight " + w.to_string() + " has the wrong rank");
    auto n = BinomialFactor::normalize(w);
    // 1/unit is 1 or -t^{-alpha}
    if (!n.unit.is_constant()) num = num.shifted(-w) * LaurentPolynomial::constant(w.rank(), -1);
    den.push_back(std::move(n.factor));
  }
  return CharacterFraction(std::move(num), std::move(den));
}

LaurentPolynomial product_of(std::span<const BinomialFactor> factors, std::size_t rank) {
  LaurentPolynomial p = LaurentPolynomial::constant(rank, 1);
  for (const auto& f : factors) p = p * f.expanded();
  return p;
}

LaurentPolynomial CharacterFraction::expanded_denominator() const { return product_of(denominator_, rank()); }

long long CharacterFraction::lattice_denominator() const {
  long long d = numerator_.lattice_denominator();
  for (const auto& f : denominator_) d = lcm_ll(d, f.weight().denominator());
  return d;
}

CharacterFraction CharacterFraction::inverted() const {
  // 1 - t^{-w} = (-t^{-w})(1 - t^w), so each factor survives and the
  // numerator picks up (-t^{w}).
  LaurentPolynomial num = numerator_.inverted();
  for (const auto& f : denominator_) num = -num.shifted(f.weight());
  return CharacterFraction(std::move(num), denominator_);
}

std::string CharacterFraction::to_string() const {
  if (denominator_.empty()) return numerator_.to_string();
  std::ostringstream os;
  os << '(' << numerator_.to_string() << ") / (";
  for (std::size_t i = 0; i < denominator_.size();) {
    std::size_t j = i;
    while (j < denominator_.size() && denominator_[j] == denominator_[i]) ++j;
    if (i) os << '*';
    os << denominator_[i].to_string();
    if (j - i > 1) os << '^' << (j - i);
    i = j;
  }
  os << ')';
  return os.str();
}

CharacterFraction frac_simplify(const CharacterFraction& x) {
  LaurentPolynomial num = x.numerator();
  std::vector<BinomialFactor> kept;
  for (const auto& f : x.denominator()) {
    if (auto q = try_divide_by_one_minus(num, f.weight()))
      num = std::move(*q);
    else
      kept.push_back(f);
  }
  return CharacterFraction(std::move(num), std::move(kept));
}

CharacterFraction frac_add(const CharacterFraction& a, const CharacterFraction& b) {
  require_same_rank(a, b);
  if (a.is_zero()) return frac_simplify(b);
  if (b.is_zero()) return frac_simplify(a);
  auto l = lcm_of(a.denominator(), b.denominator());
  LaurentPolynomial num = a.numerator() * product_of(l.missing_from_a, a.rank()) +
                          b.numerator() * product_of(l.missing_from_b, b.rank());
  return frac_simplify(CharacterFraction(std::move(num), std::move(l.common)));
}

CharacterFraction frac_mul(const CharacterFraction& a, const CharacterFraction& b) {
  require_same_rank(a, b);
  std::vector<BinomialFactor> den(a.denominator());
  den.insert(den.end(), b.denominator().begin(), b.denominator().end());
  return frac_simplify(CharacterFraction(a.numerator() * b.numerator(), std::move(den)));
}

bool frac_equal(const CharacterFraction& a, const CharacterFraction& b) {
  require_same_rank(a, b);
  // Cross-multiplying over the least common multiset is equivalent to the
  // full cross product and keeps the expanded polynomials small.
  const auto l = lcm_of(a.denominator(), b.denominator());
  return a.numerator() * product_of(l.missing_from_a, a.rank()) ==
         b.numerator() * product_of(l.missing_from_b, b.rank());
}

}  // namespace lefschetz
