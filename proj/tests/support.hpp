#pragma once

#include <complex>
#include <random>
#include <vector>

#include "doctest.h"
#include "lefschetz/error.hpp"
#include "lefschetz/fraction.hpp"
#include "lefschetz/torus.hpp"

namespace lefschetz::testing {

inline Weight random_weight(std::mt19937_64& rng, std::size_t rank, int bound, bool nonzero = true) {
  std::uniform_int_distribution<int> d(-bound, bound);
  for (;;) {
    std::vector<long long> v(rank);
    for (auto& x : v) x = d(rng);
    Weight w(std::move(v));
    if (!nonzero || !w.is_zero()) return w;
  }
}

inline LaurentPolynomial random_poly(std::mt19937_64& rng, std::size_t rank, int terms, int exp_bound,
                                     int coeff_bound = 5) {
  std::uniform_int_distribution<int> c(-coeff_bound, coeff_bound);
  LaurentPolynomial p(rank);
  for (int i = 0; i < terms; ++i)
    p += LaurentPolynomial::monomial(random_weight(rng, rank, exp_bound, false), c(rng));
  return p;
}

inline CharacterFraction random_fraction(std::mt19937_64& rng, std::size_t rank, int factors, int bound = 3) {
  std::vector<Weight> ws;
  for (int i = 0; i < factors; ++i) ws.push_back(random_weight(rng, rank, bound));
  return CharacterFraction::over_binomials(random_poly(rng, rank, 4, bound), ws);
}

/// Numeric element with angles well away from rational points of small height.
inline TorusElement random_numeric(std::mt19937_64& rng, std::size_t rank) {
  std::uniform_real_distribution<double> d(0.1, 6.2);
  TorusElement::Numeric a(rank);
  for (auto& x : a) x = d(rng);
  return TorusElement::numeric(std::move(a));
}

inline bool close(std::complex<double> a, std::complex<double> b, double rel = 1e-9) {
  return std::abs(a - b) <= rel * std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

/// Evaluation of sum c_k t^{e_k} straight from the definition.
inline std::complex<double> naive_eval(const std::vector<std::pair<std::vector<double>, double>>& terms,
                                       const std::vector<double>& theta) {
  std::complex<double> s = 0;
  for (const auto& [e, c] : terms) {
    double ph = 0;
    for (std::size_t i = 0; i < e.size(); ++i) ph += e[i] * theta[i];
    s += c * std::polar(1.0, ph);
  }
  return s;
}

inline LaurentPolynomial t_pow(long long k) { return LaurentPolynomial::monomial(Weight{k}); }
inline LaurentPolynomial konst(long long c, std::size_t rank = 1) { return LaurentPolynomial::constant(rank, c); }

inline void check_error(ErrorCode code, auto&& fn) {
  try {
    fn();
    FAIL("expected " << to_string(code));
  } catch (const Error& e) {
    CHECK_MESSAGE(e.code() == code, e.what());
  }
}

}  // namespace lefschetz::testing
