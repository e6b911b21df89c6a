#pragma once

#include <complex>
#include <map>
#include <vector>

#include <nlohmann/json.hpp>

namespace lefschetz {

/// Smooth function on the circle, either as a finite Fourier series
/// sum_k c_k e^{ik theta} or as samples at theta_j = 2 pi j / n.
///
/// Sampled functions are read as band-limited: their Fourier coefficients
/// come from the DFT, with the Nyquist bin split evenly between +-n/2.
class TestFunction {
 public:
  using Coefficients = std::map<long long, std::complex<double>>;

  static TestFunction trig(Coefficients coefficients);
  /// n must be a power of two, at least 64.
  static TestFunction sampled(std::vector<std::complex<double>> values);

  bool is_trig() const noexcept { return samples_.empty(); }
  const Coefficients& coefficients() const noexcept { return coefficients_; }
  const std::vector<std::complex<double>>& samples() const noexcept { return samples_; }
  /// Largest |k| with a nonzero coefficient.
  long long degree() const noexcept;
  /// phi-hat(k) = (1/2pi) int phi(theta) e^{-ik theta} d theta.
  std::complex<double> fourier(long long k) const;
  /// Values at 2 pi j / m, j = 0..m-1. Sampled functions are resampled by
  /// zero padding their spectrum, so m must be a multiple of the sample count.
  std::vector<std::complex<double>> values_on_grid(std::size_t m) const;

 private:
  Coefficients coefficients_;
  std::vector<std::complex<double>> samples_;
};

TestFunction test_function_from_json(const nlohmann::json& j);
nlohmann::json to_json(const TestFunction& phi);

/// sum_{k=0}^{N} phi-hat(k).
std::complex<double> theta_pair_partial(const TestFunction& phi, long long n);

constexpr std::size_t default_grid = 4096;

/// (1/2pi) int phi(theta) / (1 - r e^{-i theta}) d theta by the trapezoid
/// rule. The grid is enlarged when needed so that the aliasing error,
/// of order r^grid, stays below double precision.
std::complex<double> theta_pair_abel(const TestFunction& phi, double r, std::size_t grid = default_grid);
/// Grid size theta_pair_abel actually uses.
std::size_t abel_grid(const TestFunction& phi, double r, std::size_t grid);

/// Polynomial extrapolation to h = 0 of samples (h_i, v_i) by Neville's scheme.
std::complex<double> neville_at_zero(const std::vector<double>& h, const std::vector<std::complex<double>>& v);

struct AbelSchedule {
  int j_min = 4;
  int j_max = 10;
  std::size_t grid = default_grid;
};

/// Abel pairings at r = 1 - 2^{-j}, extrapolated to r = 1.
std::complex<double> theta_pair_abel_limit(const TestFunction& phi, const AbelSchedule& schedule = {});

struct PairingReport {
  std::complex<double> partial_sum_value;
  std::complex<double> abel_value;
  double discrepancy;
  long long truncation;
  std::vector<double> radii;
  std::size_t grid;
};

PairingReport pairing_report(const TestFunction& phi, long long n = 64, const AbelSchedule& schedule = {});

/// |partial(N) - limit| for each N. The limit is exact (the sum of the
/// nonnegative-frequency coefficients) for trigonometric polynomials and
/// the Abel extrapolation for sampled functions.
std::vector<double> remainder_decay_check(const TestFunction& phi, const std::vector<long long>& truncations,
                                          const AbelSchedule& schedule = {});

}  // namespace lefschetz
