#include "lefschetz/distribution.hpp"

#include <fftw3.h>

#include <bit>
#include <cmath>
#include <numbers>

#include "lefschetz/char_json.hpp"
#include "lefschetz/error.hpp"

namespace lefschetz {

namespace {

using cplx = std::complex<double>;

// In-place DFT; sign = FFTW_FORWARD computes sum_j x_j e^{-2 pi i jk/n}.
void dft(std::vector<cplx>& x, int sign) {
  auto* data = reinterpret_cast<fftw_complex*>(x.data());
  fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(x.size()), data, data, sign, FFTW_ESTIMATE);
  fftw_execute(plan);
  fftw_destroy_plan(plan);
}

std::size_t next_pow2(std::size_t n) { return std::bit_ceil(std::max<std::size_t>(n, 1)); }

}  // namespace

TestFunction TestFunction::trig(Coefficients coefficients) {
  TestFunction f;
  for (const auto& [k, c] : coefficients)
    if (c != cplx(0.0)) f.coefficients_.emplace(k, c);
  return f;
}

TestFunction TestFunction::sampled(std::vector<cplx> values) {
  const std::size_t n = values.size();
  if (n < 64 || !std::has_single_bit(n))
    throw Error(ErrorCode::InvalidTestFunction,
                "sample count must be a power of two and at least 64, got " + std::to_string(n));
  for (const auto& v : values)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw Error(ErrorCode::InvalidTestFunction, "samples must be finite");
  TestFunction f;
  f.samples_ = std::move(values);
  std::vector<cplx> spectrum(f.samples_);
  dft(spectrum, FFTW_FORWARD);
  const long long half = static_cast<long long>(n / 2);
  for (long long k = -half; k <= half; ++k) {
    cplx c = spectrum[static_cast<std::size_t>((k + static_cast<long long>(n)) % static_cast<long long>(n))] / double(n);
    if (k == half || k == -half) c *= 0.5;
    if (c != cplx(0.0)) f.coefficients_.emplace(k, c);
  }
  return f;
}

long long TestFunction::degree() const noexcept {
  long long d = 0;
  for (const auto& [k, c] : coefficients_) d = std::max(d, std::abs(k));
  return d;
}

std::complex<double> TestFunction::fourier(long long k) const {
  auto it = coefficients_.find(k);
  return it == coefficients_.end() ? cplx(0.0) : it->second;
}

std::vector<std::complex<double>> TestFunction::values_on_grid(std::size_t m) const {
  std::vector<cplx> out(m, 0.0);
  if (is_trig()) {
    for (std::size_t j = 0; j < m; ++j) {
      const double theta = 2 * std::numbers::pi * double(j) / double(m);
      for (const auto& [k, c] : coefficients_) out[j] += c * std::polar(1.0, double(k) * theta);
    }
    return out;
  }
  const std::size_t n = samples_.size();
  if (m % n != 0)
    throw Error(ErrorCode::InvalidTestFunction,
                "grid of " + std::to_string(m) + " points is not a refinement of " + std::to_string(n) + " samples");
  if (m == n) return samples_;
  // Zero-padded spectrum, inverse transform.
  for (const auto& [k, c] : coefficients_) out[static_cast<std::size_t>((k + static_cast<long long>(m)) % static_cast<long long>(m))] += c;
  dft(out, FFTW_BACKWARD);
  return out;
}

std::complex<double> theta_pair_partial(const TestFunction& phi, long long n) {
  if (n < 0) throw Error(ErrorCode::NegativeTruncation, "truncation N must be >= 0");
  cplx s = 0;
  for (auto it = phi.coefficients().lower_bound(0); it != phi.coefficients().end() && it->first <= n; ++it) s += it->second;
  return s;
}

std::size_t abel_grid(const TestFunction& phi, double r, std::size_t grid) {
  // r^m < 2^-52 needs m > 36 / (1 - r); the degree term keeps the
  // function's own spectrum inside the grid.
  const auto needed = static_cast<std::size_t>(std::ceil(37.0 / (1.0 - r))) + 2 * static_cast<std::size_t>(phi.degree());
  std::size_t m = next_pow2(std::max(grid, needed));
  if (!phi.is_trig()) m = std::max(m, phi.samples().size());
  return m;
}

std::complex<double> theta_pair_abel(const TestFunction& phi, double r, std::size_t grid) {
  if (!(r > 0.0 && r < 1.0)) throw Error(ErrorCode::RadiusOutOfRange, "Abel radius must lie in (0, 1)");
  const std::size_t m = abel_grid(phi, r, grid);
  const auto values = phi.values_on_grid(m);
  // The kernel has mean exactly 1, so phi(0) is split off and the
  // quadrature only sees (phi - phi(0)) / (1 - r e^{-i theta}), which stays
  // bounded as r -> 1. The denominator is written as
  // (1 - r) + r (2 sin^2(theta/2) + i sin theta) to avoid cancellation.
  const double h = 1.0 - r;
  std::vector<cplx> terms(m);
  for (std::size_t j = 1; j < m; ++j) {
    const double theta = 2 * std::numbers::pi * double(j) / double(m);
    const double half = std::sin(theta / 2);
    terms[j] = (values[j] - values[0]) / cplx(h + 2 * r * half * half, r * std::sin(theta));
  }
  // pairwise summation
  for (std::size_t width = 1; width < m; width *= 2)
    for (std::size_t j = 0; j + width < m; j += 2 * width) terms[j] += terms[j + width];
  return values[0] + terms[0] / double(m);
}

std::complex<double> neville_at_zero(const std::vector<double>& h, const std::vector<std::complex<double>>& v) {
  std::vector<cplx> p(v);
  const std::size_t n = p.size();
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = 0; i + level < n; ++i)
      p[i] = (h[i + level] * p[i] - h[i] * p[i + 1]) / (h[i + level] - h[i]);
  return n ? p[0] : cplx(0.0);
}

std::complex<double> theta_pair_abel_limit(const TestFunction& phi, const AbelSchedule& schedule) {
  std::vector<double> h;
  std::vector<cplx> v;
  for (int j = schedule.j_min; j <= schedule.j_max; ++j) {
    h.push_back(std::ldexp(1.0, -j));
    v.push_back(theta_pair_abel(phi, 1.0 - h.back(), schedule.grid));
  }
  return neville_at_zero(h, v);
}

PairingReport pairing_report(const TestFunction& phi, long long n, const AbelSchedule& schedule) {
  PairingReport rep;
  rep.truncation = n;
  rep.partial_sum_value = theta_pair_partial(phi, n);
  rep.abel_value = theta_pair_abel_limit(phi, schedule);
  rep.discrepancy = std::abs(rep.partial_sum_value - rep.abel_value);
  for (int j = schedule.j_min; j <= schedule.j_max; ++j) rep.radii.push_back(1.0 - std::ldexp(1.0, -j));
  rep.grid = abel_grid(phi, rep.radii.empty() ? 0.5 : rep.radii.back(), schedule.grid);
  return rep;
}

std::vector<double> remainder_decay_check(const TestFunction& phi, const std::vector<long long>& truncations,
                                          const AbelSchedule& schedule) {
  const cplx limit = phi.is_trig() ? theta_pair_partial(phi, phi.degree()) : theta_pair_abel_limit(phi, schedule);
  std::vector<double> out;
  for (long long n : truncations) out.push_back(std::abs(theta_pair_partial(phi, n) - limit));
  return out;
}

namespace {

cplx complex_from_json(const nlohmann::json& v, const std::string& where) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
    return {v[0].get<double>(), v[1].get<double>()};
  throw Error(ErrorCode::ParseError, where + ": expected a number or [re, im]");
}

}  // namespace

TestFunction test_function_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "test function: expected an object");
  reject_unknown_keys(j, {"trig", "samples"}, "test function");
  if (j.contains("trig") == j.contains("samples"))
    throw Error(ErrorCode::ParseError, "test function: give exactly one of 'trig' and 'samples'");
  if (j.contains("trig")) {
    const auto& t = j.at("trig");
    if (!t.is_object()) throw Error(ErrorCode::ParseError, "trig: expected an object keyed by frequency");
    TestFunction::Coefficients c;
    for (const auto& [key, value] : t.items()) {
      long long k = 0;
      std::size_t used = 0;
      try {
        k = std::stoll(key, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != key.size()) throw Error(ErrorCode::ParseError, "trig: frequency '" + key + "' is not an integer");
      c[k] += complex_from_json(value, "trig." + key);
    }
    return TestFunction::trig(std::move(c));
  }
  const auto& s = j.at("samples");
  if (!s.is_array()) throw Error(ErrorCode::ParseError, "samples: expected a list");
  std::vector<cplx> values;
  for (std::size_t i = 0; i < s.size(); ++i) values.push_back(complex_from_json(s[i], "samples[" + std::to_string(i) + "]"));
  return TestFunction::sampled(std::move(values));
}

nlohmann::json to_json(const TestFunction& phi) {
  auto pair = [](cplx c) { return nlohmann::json::array({c.real(), c.imag()}); };
  if (phi.is_trig()) {
    nlohmann::json t = nlohmann::json::object();
    for (const auto& [k, c] : phi.coefficients()) t[std::to_string(k)] = pair(c);
    return {{"trig", t}};
  }
  nlohmann::json s = nlohmann::json::array();
  for (const auto& v : phi.samples()) s.push_back(pair(v));
  return {{"samples", s}};
}

}  // namespace lefschetz
