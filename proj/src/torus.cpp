#include "lefschetz/torus.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "lefschetz/error.hpp"

namespace lefschetz {

namespace {

// (w, theta) / 2pi reduced mod 1, as an exact fraction r/den with 0 <= r < den.
std::pair<Integer, Integer> phase_fraction(const TorusElement::Rational& g, const Weight& w) {
  if (g.size() != w.rank())
    throw Error(ErrorCode::RankMismatch, "torus element rank " + std::to_string(g.size()) + " vs weight rank " +
                                             std::to_string(w.rank()));
  Integer l = 1;
  for (const auto& a : g) l = boost::multiprecision::lcm(l, Integer(a.q));
  Integer num = 0;
  for (std::size_t i = 0; i < g.size(); ++i) num += Integer(w[i]) * g[i].p * (l / g[i].q);
  const Integer den = l * w.denominator();
  Integer r = num % den;
  if (r < 0) r += den;
  return {r, den};
}

double phase_radians(const TorusElement& g, const Weight& w) {
  if (g.is_rational()) {
    auto [r, den] = phase_fraction(g.rational_angles(), w);
    const auto x = static_cast<long double>(r) / static_cast<long double>(den);
    return static_cast<double>(2.0L * std::numbers::pi_v<long double> * x);
  }
  const auto& th = g.numeric_angles();
  if (th.size() != w.rank()) throw Error(ErrorCode::RankMismatch, "torus element rank differs from weight rank");
  long double s = 0;
  for (std::size_t i = 0; i < th.size(); ++i) s += static_cast<long double>(w[i]) * th[i];
  return static_cast<double>(s / w.denominator());
}

}  // namespace

RationalAngle::RationalAngle(long long num, long long den) : p(num), q(den) {
  if (q == 0) throw Error(ErrorCode::ParseError, "angle denominator must be nonzero");
  if (q < 0) {
    p = -p;
    q = -q;
  }
  const long long g = std::gcd(p, q);
  if (g > 1) {
    p /= g;
    q /= g;
  }
}

std::size_t TorusElement::rank() const {
  if (is_rational()) return rational_angles().size();
  if (is_numeric()) return numeric_angles().size();
  return 0;
}

TorusElement TorusElement::inverse() const {
  if (is_rational()) {
    Rational r = rational_angles();
    for (auto& a : r) a = RationalAngle(-a.p, a.q);
    return rational(std::move(r));
  }
  if (is_numeric()) {
    Numeric n = numeric_angles();
    for (auto& a : n) a = -a;
    return numeric(std::move(n));
  }
  return generic();
}

std::string TorusElement::to_string() const {
  if (is_generic()) return "generic";
  std::ostringstream os;
  os << '[';
  if (is_rational()) {
    const auto& r = rational_angles();
    for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i].p << '/' << r[i].q;
  } else {
    os.precision(17);
    const auto& n = numeric_angles();
    for (std::size_t i = 0; i < n.size(); ++i) os << (i ? "," : "") << n[i];
  }
  os << ']';
  return os.str();
}

bool annihilates(const TorusElement::Rational& g, const Weight& w) { return phase_fraction(g, w).first == 0; }

bool is_singular(const TorusElement& g, const Weight& w, const EvalOptions& opts) {
  if (g.is_generic()) return false;
  if (g.is_rational()) return annihilates(g.rational_angles(), w);
  return std::abs(1.0 - character_value(g, w)) <= opts.singular_tolerance;
}

std::complex<double> character_value(const TorusElement& g, const Weight& w) {
  if (g.is_generic()) throw Error(ErrorCode::GenericNotEvaluable, "cannot evaluate at a generic element");
  return std::polar(1.0, phase_radians(g, w));
}

std::complex<double> poly_eval(const LaurentPolynomial& p, const TorusElement& g) {
  if (g.is_generic()) throw Error(ErrorCode::GenericNotEvaluable, "cannot evaluate at a generic element");
  if (g.rank() != p.rank()) throw Error(ErrorCode::RankMismatch, "torus element rank differs from polynomial rank");
  std::complex<double> s = 0;
  for (const auto& [w, c] : p.weighted_terms()) s += static_cast<double>(c) * character_value(g, w);
  return s;
}

std::complex<double> frac_eval(const CharacterFraction& x, const TorusElement& g, const EvalOptions& opts) {
  if (g.is_generic()) throw Error(ErrorCode::GenericNotEvaluable, "cannot evaluate at a generic element");
  if (g.rank() != x.rank()) throw Error(ErrorCode::RankMismatch, "torus element rank differs from fraction rank");
  std::complex<double> den = 1;
  for (const auto& f : x.denominator()) {
    if (is_singular(g, f.weight(), opts))
      throw Error(ErrorCode::SingularElement, "factor " + f.to_string() + " vanishes at " + g.to_string());
    den *= 1.0 - character_value(g, f.weight());
  }
  return poly_eval(x.numerator(), g) / den;
}

RationalAngle parse_rational_angle(const std::string& text) {
  try {
    std::size_t used = 0;
    const auto slash = text.find('/');
    const long long p = std::stoll(text.substr(0, slash), &used);
    if (used != (slash == std::string::npos ? text.size() : slash)) throw std::invalid_argument(text);
    long long q = 1;
    if (slash != std::string::npos) {
      const auto rest = text.substr(slash + 1);
      q = std::stoll(rest, &used);
      if (used != rest.size()) throw std::invalid_argument(text);
    }
    return RationalAngle(p, q);
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::ParseError, "malformed rational angle '" + text + "' (expected p/q)");
  }
}

}  // namespace lefschetz
