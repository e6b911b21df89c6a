#pragma once

#include <random>

#include <nlohmann/json.hpp>

#include "lefschetz/scenario.hpp"

namespace lefschetz {

/// Root data in explicit coordinates. Positivity is decided by the sign of
/// the dot product with regular_vector.
class RootSystemData {
 public:
  RootSystemData(std::size_t rank, std::vector<Weight> roots, std::vector<Weight> compact_roots, Weight regular_vector);

  static RootSystemData preset(const std::string& name);
  static std::vector<std::string> preset_names();

  std::size_t rank() const noexcept { return rank_; }
  const std::vector<Weight>& roots() const noexcept { return roots_; }
  const std::vector<Weight>& compact_roots() const noexcept { return compact_; }
  const Weight& regular_vector() const noexcept { return regular_; }

  /// Same roots and regular vector, different compact part.
  RootSystemData with_compact_roots(std::vector<Weight> compact) const;

 private:
  std::size_t rank_;
  std::vector<Weight> roots_;
  std::vector<Weight> compact_;
  Weight regular_;
};

/// Exact rational dot product, returned as numerator over denominator > 0.
std::pair<long long, long long> dot(const Weight& a, const Weight& b);

std::vector<Weight> positive_roots(const RootSystemData& rs);
/// Positive roots lying in the compact part.
std::vector<Weight> positive_compact_roots(const RootSystemData& rs);
/// Positive roots that are not sums of two positive roots of the same set.
std::vector<Weight> simple_roots(std::span<const Weight> positive);
Weight half_sum_rho(const RootSystemData& rs);

struct WeylElement {
  std::size_t rank = 0;
  std::vector<long long> matrix;  // row-major rank x rank
  int length = 0;
  int sign = 1;

  Weight apply(const Weight& w) const;
  WeylElement compose(const WeylElement& other) const;  // this after other
  long long determinant() const;
  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.matrix == b.matrix; }
};

/// Reflection in alpha. InvalidRootSystem unless it preserves the integer lattice.
WeylElement reflection(const Weight& alpha);

constexpr std::size_t default_weyl_cap = 1'000'000;

/// Breadth-first closure over the simple reflections of the full or compact
/// positive system; length is the breadth-first depth.
std::vector<WeylElement> weyl_group(const RootSystemData& rs, bool compact_only, std::size_t cap = default_weyl_cap);

/// t^rho * prod_{alpha > 0} (1 - t^{-alpha}).
LaurentPolynomial weyl_denominator(const RootSystemData& rs);

/// Throws SingularLambda if (alpha, lambda) = 0 for a root, NonIntegralLambda
/// if lambda - rho is not integral.
void check_lambda(const RootSystemData& rs, const Weight& lambda);

/// (sum_w sign(w) t^{w lambda}) / Delta over W or W_c, simplified as far as
/// the denominator divides. With simplify = false the raw quotient is kept.
CharacterFraction character_weyl_sum(const RootSystemData& rs, const Weight& lambda, bool compact_only,
                                     bool simplify = true, std::size_t cap = default_weyl_cap);

/// Dolbeault scenario on G/T: one point per w in W_c with tangent weights
/// {w alpha : alpha > 0} and fibre t^{w(lambda - rho)}. Points are named
/// w0, w1, ... in the enumeration order of W_c.
FixedPointScenario flag_scenario(const RootSystemData& rs, const Weight& lambda, std::size_t cap = default_weyl_cap);

/// Value of the Weyl sum at g. g must be regular for every root.
std::complex<double> numeric_character(const RootSystemData& rs, const Weight& lambda, bool compact_only,
                                       const TorusElement& g, const EvalOptions& opts = {});

/// Theta_lambda = sign * Weyl sum over W_c, sign = (-1)^{dim G/K / 2}.
struct DiscreteSeriesCharacter {
  CharacterFraction weyl_sum;
  int sign;
  CharacterFraction theta;
};

DiscreteSeriesCharacter discrete_series_character(const RootSystemData& rs, const Weight& lambda,
                                                  long long dim_g_over_k);

/// rho + mu for a random integral mu with entries in [-bound, bound]
/// ([0, bound] and dominant when asked), redrawn until regular.
Weight random_regular_lambda(std::mt19937_64& rng, const RootSystemData& rs, bool dominant, int bound = 4);

RootSystemData root_system_from_json(const nlohmann::json& j);
nlohmann::json to_json(const RootSystemData& rs);

}  // namespace lefschetz
