#include "lefschetz/verify.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <random>

#include "lefschetz/char_json.hpp"
#include "lefschetz/distribution.hpp"
#include "lefschetz/error.hpp"
#include "lefschetz/scenario_json.hpp"
#include "lefschetz/scenario_random.hpp"
#include "lefschetz/weyl.hpp"

namespace lefschetz {

namespace {

using nlohmann::json;
using cplx = std::complex<double>;

// Records the first failure; later cases still run so the count is honest.
struct Tally {
  CheckResult& r;
  void operator()(bool ok, const std::function<json()>& witness) {
    ++r.cases;
    if (ok || !r.pass) {
      r.pass = r.pass && ok;
      return;
    }
    r.pass = false;
    r.counterexample = witness().dump();
  }
};

LaurentPolynomial symmetric_sum(long long n) {
  LaurentPolynomial p(1);
  for (long long j = -n; j <= n; ++j) p += LaurentPolynomial::monomial(Weight{j});
  return p;
}

bool close(cplx a, cplx b, double rel) { return std::abs(a - b) <= rel * std::max(1.0, std::abs(b)); }

json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

OperatorKind random_kind(std::mt19937_64& rng) {
  return static_cast<OperatorKind>(std::uniform_int_distribution<int>(0, 2)(rng));
}

void check_sphere(const VerifyOptions& o, CheckResult& r) {
  r.summary = "sphere(n) index is sum_{|j|<=n} t^j with value 2n+1 at t = 1, n = 0..10";
  Tally tally{r};
  for (long long n = 0; n <= 10; ++n) {
    const auto x = scenario_index(sphere_scenario(n), o.rules);
    const bool ok = x.is_polynomial() && x.numerator() == symmetric_sum(n) && x.numerator().coefficient_sum() == 2 * n + 1;
    tally(ok, [&] { return json{{"n", n}, {"index", to_json(x)}}; });
  }
}

void check_derham(const VerifyOptions& o, CheckResult& r) {
  r.summary = "de Rham index equals the number of fixed points (100 random scenarios)";
  Tally tally{r};
  std::mt19937_64 rng(o.seed);
  for (int i = 0; i < 100; ++i) {
    RandomScenarioShape shape;
    shape.rank = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    shape.min_points = 0;
    shape.max_points = 6;
    shape.max_dim = 3;
    shape.weight_bound = 5;
    const auto s = random_scenario(rng, OperatorKind::DeRham, shape);
    const auto x = index_derham(s, o.rules);
    const auto expected = LaurentPolynomial::constant(s.rank(), static_cast<long long>(s.points().size()));
    tally(x.is_polynomial() && x.numerator() == expected,
          [&] { return json{{"scenario", to_json(s)}, {"index", to_json(x)}}; });
  }
}

void check_multiplicativity(const VerifyOptions& o, CheckResult& r) {
  r.summary = "index(a x b) = index(a) index(b) (50 random pairs)";
  Tally tally{r};
  std::mt19937_64 rng(o.seed + 1);
  for (int i = 0; i < 50; ++i) {
    RandomScenarioShape shape;
    shape.rank = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    shape.max_points = 3;
    shape.max_dim = 2;
    const auto kind = random_kind(rng);
    const auto a = random_scenario(rng, kind, shape, "a");
    const auto b = random_scenario(rng, kind, shape, "b");
    const auto lhs = scenario_index(product_scenario(a, b), o.rules);
    const auto rhs = scenario_index(a, o.rules) * scenario_index(b, o.rules);
    tally(frac_equal(lhs, rhs), [&] {
      return json{{"a", to_json(a)}, {"b", to_json(b)}, {"product_index", to_json(lhs)}, {"index_product", to_json(rhs)}};
    });
  }
}

void check_linearisation(const VerifyOptions& o, CheckResult& r) {
  r.summary = "sum of Tr(g|F_m) / prod(1 - t^-alpha) equals the Dolbeault index (20 random scenarios)";
  Tally tally{r};
  std::mt19937_64 rng(o.seed + 2);
  for (int i = 0; i < 20; ++i) {
    RandomScenarioShape shape;
    shape.rank = std::uniform_int_distribution<std::size_t>(1, 2)(rng);
    shape.max_points = 4;
    const auto s = random_scenario(rng, OperatorKind::Dolbeault, shape);
    CharacterFraction sum(LaurentPolynomial(s.rank()));
    for (const auto& p : linearize(s)) sum = sum + CharacterFraction(p.bundle_trace) * p.point_index;
    const auto x = index_dolbeault(s);
    tally(frac_equal(sum, x), [&] { return json{{"scenario", to_json(s)}, {"recombined", to_json(sum)}, {"index", to_json(x)}}; });
  }
}

void check_weyl(const VerifyOptions& o, CheckResult& r) {
  r.summary = "Weyl sums: full W gives invariant nonnegative characters; flag scenario equals the W_c sum";
  Tally tally{r};
  std::mt19937_64 rng(o.seed + 3);
  for (const auto& name : RootSystemData::preset_names()) {
    const auto rs = RootSystemData::preset(name);
    const auto group = weyl_group(rs, false, o.weyl_cap);
    for (int i = 0; i < 10; ++i) {
      const Weight dominant = random_regular_lambda(rng, rs, true);
      const auto full = character_weyl_sum(rs, dominant, false, true, o.weyl_cap);
      bool ok = full.is_polynomial();
      if (ok) {
        for (const auto& [w, c] : full.numerator().weighted_terms()) ok = ok && c > 0;
        for (const auto& g : group)
          ok = ok && full.numerator().map_weights([&](const Weight& x) { return g.apply(x); }) == full.numerator();
      }
      tally(ok, [&] { return json{{"preset", name}, {"lambda", dominant.to_string()}, {"character", to_json(full)}}; });

      const Weight lambda = random_regular_lambda(rng, rs, false);
      const auto flag = scenario_index(flag_scenario(rs, lambda, o.weyl_cap), o.rules);
      const auto sum = character_weyl_sum(rs, lambda, true, true, o.weyl_cap);
      tally(frac_equal(flag, sum), [&] {
        return json{{"preset", name}, {"lambda", lambda.to_string()}, {"flag_index", to_json(flag)}, {"weyl_sum", to_json(sum)}};
      });
    }
  }
}

void check_discrete_series(const VerifyOptions& o, CheckResult& r) {
  r.summary = "SL(2,R) discrete series: Theta_n = -e^{in theta}/(e^{i theta} - e^{-i theta}) at 200 rational elements";
  Tally tally{r};
  std::mt19937_64 rng(o.seed + 4);
  const auto rs = RootSystemData::preset("A1").with_compact_roots({});
  std::uniform_int_distribution<long long> nd(-10, 10), qd(3, 60);
  while (r.cases < 200) {
    const long long n = nd(rng);
    const long long q = qd(rng);
    const long long p = std::uniform_int_distribution<long long>(0, q - 1)(rng);
    if (n == 0 || (2 * p) % q == 0) continue;
    const auto g = TorusElement::rational({RationalAngle(p, q)});
    const auto ds = discrete_series_character(rs, Weight{n}, 2);
    const cplx value = frac_eval(ds.theta, g);
    const cplx t = std::polar(1.0, 2 * std::numbers::pi * double(p) / double(q));
    const cplx closed = -std::pow(t, double(n)) / (t - 1.0 / t);
    tally(close(value, closed, 1e-10), [&] {
      return json{{"n", n}, {"angle", std::to_string(p) + "/" + std::to_string(q)}, {"value", complex_json(value)}, {"closed_form", complex_json(closed)}};
    });
  }
}

void check_su2(const VerifyOptions& o, CheckResult& r) {
  r.summary = "A1 full character equals sin((n+1) theta)/sin(theta) at 100 random angles, n <= 20";
  Tally tally{r};
  std::mt19937_64 rng(o.seed + 5);
  const auto rs = RootSystemData::preset("A1");
  std::uniform_int_distribution<long long> nd(0, 20);
  std::uniform_real_distribution<double> th(0.0, 2 * std::numbers::pi);
  while (r.cases < 100) {
    const long long n = nd(rng);
    const double theta = th(rng);
    if (std::abs(std::sin(theta)) < 1e-3) continue;
    const cplx value = numeric_character(rs, Weight{n + 1}, false, TorusElement::numeric({theta}));
    const double closed = std::sin(double(n + 1) * theta) / std::sin(theta);
    tally(close(value, closed, 1e-10), [&] {
      return json{{"n", n}, {"theta", theta}, {"value", complex_json(value)}, {"closed_form", closed}};
    });
  }
}

void check_distribution(const VerifyOptions& o, CheckResult& r) {
  r.summary = "partial sums (N = 64) and Abel limits agree within 1e-6; trig remainders vanish for N >= degree";
  Tally tally{r};
  std::vector<std::pair<std::string, TestFunction>> functions{
      {"1", TestFunction::trig({{0, 1.0}})},
      {"exp(3i theta)", TestFunction::trig({{3, 1.0}})},
      {"exp(-2i theta)", TestFunction::trig({{-2, 1.0}})},
  };
  std::vector<cplx> samples(256);
  for (std::size_t j = 0; j < samples.size(); ++j) samples[j] = std::exp(std::cos(2 * std::numbers::pi * double(j) / 256.0));
  functions.emplace_back("exp(cos theta)", TestFunction::sampled(samples));
  for (const auto& [label, phi] : functions) {
    const auto rep = pairing_report(phi, 64);
    tally(rep.discrepancy < 1e-6, [&] {
      return json{{"phi", label}, {"partial", complex_json(rep.partial_sum_value)}, {"abel", complex_json(rep.abel_value)}, {"discrepancy", rep.discrepancy}};
    });
  }
  std::mt19937_64 rng(o.seed + 6);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int i = 0; i < 10; ++i) {
    const long long d = std::uniform_int_distribution<long long>(1, 12)(rng);
    TestFunction::Coefficients c;
    for (long long k = -d; k <= d; ++k) c[k] = {u(rng), u(rng)};
    const auto phi = TestFunction::trig(c);
    std::vector<long long> ns;
    for (long long n = phi.degree(); n <= phi.degree() + 5; ++n) ns.push_back(n);
    const auto rem = remainder_decay_check(phi, ns);
    bool ok = true;
    for (double x : rem) ok = ok && x == 0.0;
    tally(ok, [&] { return json{{"phi", to_json(phi)}, {"remainders", rem}}; });
  }
}

void check_pairing(const VerifyOptions& o, CheckResult& r) {
  r.summary = "sphere(0) paired with {t^n, t^-n} reproduces the sphere(n) character, n <= 10";
  Tally tally{r};
  const auto s0 = sphere_scenario(0);
  for (long long n = 0; n <= 10; ++n) {
    const std::map<std::string, LaurentPolynomial> f{{"north", LaurentPolynomial::monomial(Weight{n})},
                                                     {"south", LaurentPolynomial::monomial(Weight{-n})}};
    const auto x = scenario_index(twist(s0, f), o.rules);
    tally(x.is_polynomial() && x.numerator() == symmetric_sum(n), [&] { return json{{"n", n}, {"pairing", to_json(x)}}; });
  }
}

void check_relative(const VerifyOptions& o, CheckResult& r) {
  r.summary = "relative index equals the index difference off the shared points (20 random pairs)";
  Tally tally{r};
  std::mt19937_64 rng(o.seed + 7);
  for (int i = 0; i < 20; ++i) {
    RandomScenarioShape shape;
    shape.rank = std::uniform_int_distribution<std::size_t>(1, 2)(rng);
    shape.min_points = 0;
    const auto kind = random_kind(rng);
    const auto common = random_scenario(rng, kind, shape, "c");
    const auto a = disjoint_union(common, random_scenario(rng, kind, shape, "a"));
    const auto b = disjoint_union(common, random_scenario(rng, kind, shape, "b"));
    std::vector<std::string> shared;
    for (const auto& p : common.points()) shared.push_back(p.name);
    const auto rel = relative_index(a, b, shared, o.rules);
    const auto outside = scenario_index(a.without(shared), o.rules) - scenario_index(b.without(shared), o.rules);
    tally(frac_equal(rel, outside), [&] { return json{{"a", to_json(a)}, {"b", to_json(b)}, {"shared", shared}}; });
  }
}

// Rational point annihilating w: random angles except on one coordinate,
// which is solved for.
TorusElement annihilator(std::mt19937_64& rng, const Weight& w) {
  std::size_t axis = 0;
  while (w[axis] == 0) ++axis;
  std::uniform_int_distribution<long long> q(1, 12);
  std::vector<RationalAngle> angles(w.rank());
  // sum_j w_j a_j = m with a_j = p_j / q_j; combine over a common denominator.
  long long den = 1;
  for (std::size_t j = 0; j < w.rank(); ++j) {
    if (j == axis) continue;
    const long long qq = q(rng);
    angles[j] = RationalAngle(std::uniform_int_distribution<long long>(0, qq - 1)(rng), qq);
    den = lcm_ll(den, angles[j].q);
  }
  long long rest = 0;  // sum_{j != axis} w_j a_j * den
  for (std::size_t j = 0; j < w.rank(); ++j)
    if (j != axis) rest += w[j] * angles[j].p * (den / angles[j].q);
  const long long m = std::uniform_int_distribution<long long>(-2, 2)(rng);
  // w carries its own denominator D: (w_axis / D) a_axis = m - rest / (D den)
  angles[axis] = RationalAngle(m * w.denominator() * den - rest, w[axis] * den);
  return TorusElement::rational(std::move(angles));
}

void check_regularity(const VerifyOptions& o, CheckResult& r) {
  r.summary = "evaluation at a rational element killing a tangent weight raises SingularElement (100 cases)";
  Tally tally{r};
  std::mt19937_64 rng(o.seed + 8);
  for (int i = 0; i < 100; ++i) {
    RandomScenarioShape shape;
    shape.rank = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    shape.weight_bound = 4;
    const auto s = random_scenario(rng, random_kind(rng), shape);
    const auto& p = s.points()[std::uniform_int_distribution<std::size_t>(0, s.points().size() - 1)(rng)];
    const auto& w = p.tangent_weights[std::uniform_int_distribution<std::size_t>(0, p.tangent_weights.size() - 1)(rng)];
    const auto g = annihilator(rng, w);
    bool raised = false;
    std::string outcome;
    try {
      const cplx v = evaluate_index(s, g, {}, o.rules);
      outcome = "returned " + complex_json(v).dump();
    } catch (const Error& e) {
      raised = e.code() == ErrorCode::SingularElement && annihilates(g.rational_angles(), w);
      outcome = e.what();
    }
    tally(raised, [&] { return json{{"scenario", to_json(s)}, {"g", g.to_string()}, {"weight", w.to_string()}, {"outcome", outcome}}; });
  }
}

void check_bott(const VerifyOptions& o, CheckResult& r) {
  r.summary = "Bott element on T(C^n): index is the constant 1 for n = 1..3";
  Tally tally{r};
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto s = bott_scenario(n);
    const auto x = scenario_index(s, o.rules);
    tally(x.is_polynomial() && x.numerator() == LaurentPolynomial::constant(n, 1),
          [&] { return json{{"scenario", to_json(s)}, {"index", to_json(x)}}; });
  }
}

const std::vector<std::pair<std::string, void (*)(const VerifyOptions&, CheckResult&)>>& registry() {
  static const std::vector<std::pair<std::string, void (*)(const VerifyOptions&, CheckResult&)>> r{
      {"sphere", check_sphere},
      {"derham", check_derham},
      {"multiplicativity", check_multiplicativity},
      {"linearisation", check_linearisation},
      {"weyl", check_weyl},
      {"discrete-series", check_discrete_series},
      {"su2", check_su2},
      {"distribution", check_distribution},
      {"pairing", check_pairing},
      {"relative", check_relative},
      {"regularity", check_regularity},
      {"bott", check_bott},
  };
  return r;
}

}  // namespace

FixedPointScenario bott_scenario(std::size_t n) {
  FixedPointDatum origin;
  origin.name = "origin";
  LaurentPolynomial fibre = LaurentPolynomial::constant(n, 1);
  for (std::size_t j = 0; j < n; ++j) {
    const Weight e = Weight::basis(n, j);
    origin.tangent_weights.push_back(e);
    origin.tangent_weights.push_back(-e);
    fibre = fibre * LaurentPolynomial::one_minus(e) * LaurentPolynomial::one_minus(-e);
  }
  origin.bundle = std::move(fibre);
  return FixedPointScenario(n, OperatorKind::Dolbeault, {std::move(origin)});
}

std::vector<std::string> identity_names(bool extended) {
  std::vector<std::string> out;
  for (const auto& [name, fn] : registry())
    if (extended || name != "bott") out.push_back(name);
  return out;
}

bool is_identity(const std::string& name) {
  for (const auto& [n, fn] : registry())
    if (n == name) return true;
  return false;
}

CheckResult run_identity(const std::string& name, const VerifyOptions& options) {
  for (const auto& [n, fn] : registry()) {
    if (n != name) continue;
    CheckResult r;
    r.name = name;
    const auto start = std::chrono::steady_clock::now();
    try {
      fn(options, r);
    } catch (const std::exception& e) {
      r.pass = false;
      if (r.counterexample.empty()) r.counterexample = json{{"exception", e.what()}}.dump();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
  }
  throw Error(ErrorCode::ParseError, "unknown identity '" + name + "'");
}

}  // namespace lefschetz
