#pragma once

#include <complex>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lefschetz/fraction.hpp"

namespace lefschetz {

/// theta = 2*pi*p/q, kept reduced with q >= 1.
struct RationalAngle {
  long long p = 0;
  long long q = 1;

  RationalAngle() = default;
  RationalAngle(long long num, long long den);
  friend bool operator==(const RationalAngle&, const RationalAngle&) = default;
};

/// Point of the torus at which characters are evaluated.
class TorusElement {
 public:
  struct Generic {};
  using Rational = std::vector<RationalAngle>;
  /// Angles in radians.
  using Numeric = std::vector<double>;

  TorusElement() : value_(Generic{}) {}
  static TorusElement generic() { return TorusElement(); }
  static TorusElement rational(Rational angles) { return TorusElement(std::move(angles)); }
  static TorusElement numeric(Numeric angles) { return TorusElement(std::move(angles)); }

  bool is_generic() const { return std::holds_alternative<Generic>(value_); }
  bool is_rational() const { return std::holds_alternative<Rational>(value_); }
  bool is_numeric() const { return std::holds_alternative<Numeric>(value_); }
  const Rational& rational_angles() const { return std::get<Rational>(value_); }
  const Numeric& numeric_angles() const { return std::get<Numeric>(value_); }
  std::size_t rank() const;

  /// The inverse element g^{-1}.
  TorusElement inverse() const;

  std::string to_string() const;

 private:
  template <class T>
  explicit TorusElement(T v) : value_(std::move(v)) {}

  std::variant<Generic, Rational, Numeric> value_;
};

struct EvalOptions {
  /// Numeric elements count as singular for a factor 1 - t^a when
  /// |1 - g^a| falls to this value or below.
  double singular_tolerance = 1e-12;
};

/// Exact test: t^w(g) == 1 for a Rational element.
bool annihilates(const TorusElement::Rational& g, const Weight& w);

/// Whether 1 - t^w vanishes at g. Exact for Rational elements, tolerance
/// based for Numeric ones; Generic elements are never singular.
bool is_singular(const TorusElement& g, const Weight& w, const EvalOptions& opts = {});

/// t^w(g) = exp(i (w, theta)).
std::complex<double> character_value(const TorusElement& g, const Weight& w);

std::complex<double> poly_eval(const LaurentPolynomial& p, const TorusElement& g);

/// Value of x at g. Throws GenericNotEvaluable for Generic g and
/// SingularElement when a denominator factor vanishes at g.
std::complex<double> frac_eval(const CharacterFraction& x, const TorusElement& g, const EvalOptions& opts = {});

/// Parses "p/q" (or a bare integer p, meaning p/1).
RationalAngle parse_rational_angle(const std::string& text);

}  // namespace lefschetz
