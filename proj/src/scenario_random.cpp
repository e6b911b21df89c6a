#include "lefschetz/scenario_random.hpp"

namespace lefschetz {

Weight random_nonzero_weight(std::mt19937_64& rng, std::size_t rank, int bound) {
  std::uniform_int_distribution<long long> d(-bound, bound);
  for (;;) {
    std::vector<long long> v(rank);
    for (auto& x : v) x = d(rng);
    Weight w(std::move(v));
    if (!w.is_zero()) return w;
  }
}

LaurentPolynomial random_character(std::mt19937_64& rng, std::size_t rank, int terms, int bound) {
  std::uniform_int_distribution<long long> e(-bound, bound);
  std::uniform_int_distribution<int> c(1, 3);
  LaurentPolynomial p(rank);
  for (int i = 0; i < terms; ++i) {
    std::vector<long long> v(rank);
    for (auto& x : v) x = e(rng);
    p += LaurentPolynomial::monomial(Weight(std::move(v)), c(rng));
  }
  return p;
}

FixedPointScenario random_scenario(std::mt19937_64& rng, OperatorKind kind, const RandomScenarioShape& shape,
                                   const std::string& prefix) {
  std::uniform_int_distribution<std::size_t> npts(shape.min_points, shape.max_points);
  std::uniform_int_distribution<std::size_t> dim(1, std::max<std::size_t>(1, shape.max_dim));
  const std::size_t n = npts(rng);
  std::vector<FixedPointDatum> points;
  for (std::size_t i = 0; i < n; ++i) {
    FixedPointDatum p;
    p.name = prefix + std::to_string(i);
    const std::size_t k = dim(rng);
    for (std::size_t j = 0; j < k; ++j) p.tangent_weights.push_back(random_nonzero_weight(rng, shape.rank, shape.weight_bound));
    switch (kind) {
      case OperatorKind::Generic:
        p.plus = random_character(rng, shape.rank, shape.character_terms, shape.character_bound);
        p.minus = random_character(rng, shape.rank, shape.character_terms - 1, shape.character_bound);
        break;
      case OperatorKind::Dolbeault:
        p.bundle = random_character(rng, shape.rank, shape.character_terms, shape.character_bound);
        break;
      case OperatorKind::DeRham:
        break;
    }
    points.push_back(std::move(p));
  }
  return FixedPointScenario(shape.rank, kind, std::move(points));
}

}  // namespace lefschetz
