#pragma once

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lefschetz/fraction.hpp"
#include "lefschetz/torus.hpp"

namespace lefschetz {

enum class OperatorKind { Generic, Dolbeault, DeRham };

std::string_view to_string(OperatorKind kind);

/// Local data at one isolated fixed point m.
///
/// tangent_weights are the complex weights of T_m M (one per complex
/// dimension). Generic points carry the virtual characters of E^+_m and
/// E^-_m; Dolbeault points carry the character of the twisting fibre F_m;
/// de Rham points carry neither.
struct FixedPointDatum {
  std::string name;
  std::vector<Weight> tangent_weights;
  std::optional<LaurentPolynomial> plus;
  std::optional<LaurentPolynomial> minus;
  std::optional<LaurentPolynomial> bundle;

  friend bool operator==(const FixedPointDatum&, const FixedPointDatum&) = default;
};

/// A torus action with isolated fixed points together with the operator
/// data the fixed point formula consumes. Validated on construction.
class FixedPointScenario {
 public:
  FixedPointScenario(std::size_t rank, OperatorKind kind, std::vector<FixedPointDatum> points = {});

  /// One point with no tangent directions and E = C (even): the
  /// multiplicative identity, of index 1.
  static FixedPointScenario unit(std::size_t rank);

  std::size_t rank() const noexcept { return rank_; }
  OperatorKind kind() const noexcept { return kind_; }
  const std::vector<FixedPointDatum>& points() const noexcept { return points_; }
  bool is_unit() const;
  const FixedPointDatum* find(const std::string& name) const;

  /// Scenario restricted to the points whose labels are not listed.
  FixedPointScenario without(std::span<const std::string> names) const;

 private:
  std::size_t rank_;
  OperatorKind kind_;
  std::vector<FixedPointDatum> points_;
};

/// 1 / det_R(1 - g^{-1} | T_m M) for a point with the given complex tangent
/// weights. Swappable so that verification can run against a mutated rule.
using InverseRealDeterminant = std::function<CharacterFraction(std::span<const Weight>, std::size_t rank)>;

CharacterFraction standard_inverse_real_determinant(std::span<const Weight> tangent_weights, std::size_t rank);

struct IndexRules {
  InverseRealDeterminant inverse_real_determinant = standard_inverse_real_determinant;
};

/// Contribution of a single point under the scenario's operator kind.
CharacterFraction point_contribution(const FixedPointScenario& s, const FixedPointDatum& p,
                                     const IndexRules& rules = {});

/// sum_m (Tr(g|E^+_m) - Tr(g|E^-_m)) / det_R(1 - g^{-1}|T_m M).
CharacterFraction index_generic(const FixedPointScenario& s, const IndexRules& rules = {});
/// sum_m Tr(g|F_m) / prod_j (1 - t^{-alpha_j}).
CharacterFraction index_dolbeault(const FixedPointScenario& s);
/// Hodge-de Rham: numerators are the alternating exterior powers of
/// T_m M (x) C; the result collapses to the number of points.
CharacterFraction index_derham(const FixedPointScenario& s, const IndexRules& rules = {});
CharacterFraction scenario_index(const FixedPointScenario& s, const IndexRules& rules = {});

/// The de Rham scenario rewritten with explicit Generic numerators.
FixedPointScenario derham_as_generic(const FixedPointScenario& s);

struct LinearizedPoint {
  std::string label;
  LaurentPolynomial bundle_trace;
  /// g-index of the Dolbeault operator on the tangent space at the point.
  CharacterFraction point_index;
};

std::vector<LinearizedPoint> linearize(const FixedPointScenario& s);

/// Twists every point's numerator by the fibre character of a K-theory
/// class [F] at that point.
FixedPointScenario twist(const FixedPointScenario& s, const std::map<std::string, LaurentPolynomial>& f_chars);
CharacterFraction pair_with_ktheory(const FixedPointScenario& s,
                                    const std::map<std::string, LaurentPolynomial>& f_chars);

FixedPointScenario product_scenario(const FixedPointScenario& a, const FixedPointScenario& b);
FixedPointScenario disjoint_union(const FixedPointScenario& a, const FixedPointScenario& b);

/// index(a) - index(b), after checking that the shared points agree.
CharacterFraction relative_index(const FixedPointScenario& a, const FixedPointScenario& b,
                                 std::span<const std::string> shared, const IndexRules& rules = {});

/// Replaces g by g^{-1}: weights and characters are inverted.
FixedPointScenario inverted(const FixedPointScenario& s);

/// Truncation to exponents in [-depth, depth] of the expansion of a rank-one
/// fraction in powers of t^{-1}, i.e. with 1/(1 - t^{-1}) = sum_{k>=0} t^{-k}.
LaurentPolynomial geometric_expansion_check(const CharacterFraction& x, long long depth);

/// Numeric g-index at g. Throws SingularElement, naming the point and weight,
/// when g fixes more than the listed points (some tangent weight is
/// annihilated), even if the simplified index has no pole there.
std::complex<double> evaluate_index(const FixedPointScenario& s, const TorusElement& g, const EvalOptions& opts = {},
                                    const IndexRules& rules = {});

// Scenarios used throughout the examples.

/// C with the standard circle action and the untwisted Dolbeault operator.
FixedPointScenario plane_scenario();
/// S^2 = P^1 with the rotation action, Dolbeault operator twisted by L_n.
FixedPointScenario sphere_scenario(long long n);

}  // namespace lefschetz
