#pragma once

#include <random>

#include "lefschetz/scenario.hpp"

namespace lefschetz {

/// Shape of randomly drawn scenarios. Sizes stay small so that exact
/// identity checks over many samples remain fast.
struct RandomScenarioShape {
  std::size_t rank = 1;
  std::size_t min_points = 1;
  std::size_t max_points = 3;
  std::size_t max_dim = 2;  // tangent weights per point
  int weight_bound = 3;
  int character_terms = 2;
  int character_bound = 2;
};

Weight random_nonzero_weight(std::mt19937_64& rng, std::size_t rank, int bound);
LaurentPolynomial random_character(std::mt19937_64& rng, std::size_t rank, int terms, int bound);

/// Points are named prefix0, prefix1, ...
FixedPointScenario random_scenario(std::mt19937_64& rng, OperatorKind kind, const RandomScenarioShape& shape,
                                   const std::string& prefix = "p");

}  // namespace lefschetz
