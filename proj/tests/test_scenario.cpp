#include <numbers>

#include "doctest.h"
#include "lefschetz/scenario.hpp"
#include "lefschetz/scenario_json.hpp"
#include "lefschetz/scenario_random.hpp"
#include "support.hpp"

using namespace lefschetz;
using namespace lefschetz::testing;

namespace {

LaurentPolynomial symmetric_sum(long long n) {
  LaurentPolynomial p(1);
  for (long long j = -n; j <= n; ++j) p += t_pow(j);
  return p;
}

CharacterFraction frac(const LaurentPolynomial& p) { return CharacterFraction(p); }

FixedPointDatum generic_point(std::string name, std::vector<Weight> ws, LaurentPolynomial plus, LaurentPolynomial minus) {
  return {std::move(name), std::move(ws), std::move(plus), std::move(minus), std::nullopt};
}

FixedPointDatum dolbeault_point(std::string name, std::vector<Weight> ws, LaurentPolynomial bundle) {
  return {std::move(name), std::move(ws), std::nullopt, std::nullopt, std::move(bundle)};
}

FixedPointDatum derham_point(std::string name, std::vector<Weight> ws) {
  return {std::move(name), std::move(ws), std::nullopt, std::nullopt, std::nullopt};
}

CharacterFraction plane_index() { return CharacterFraction::over_binomials(konst(1), std::vector{Weight{-1}}); }

}  // namespace

TEST_CASE("index_generic") {
  const auto p = generic_point("m", {Weight{1}}, konst(2), t_pow(1) + t_pow(-1));
  CHECK(frac_equal(index_generic(FixedPointScenario(1, OperatorKind::Generic, {p})), frac(konst(1))));
  CHECK(index_generic(FixedPointScenario(1, OperatorKind::Generic)).is_zero());

  auto q = p;
  q.name = "m2";
  const auto two = index_generic(FixedPointScenario(1, OperatorKind::Generic, {p, q}));
  CHECK(two.is_polynomial());
  CHECK(two.numerator() == konst(2));

  check_error(ErrorCode::WrongOperatorKind, [] { index_generic(sphere_scenario(1)); });
}

TEST_CASE("index_dolbeault") {
  CHECK(frac_equal(index_dolbeault(plane_scenario()), plane_index()));
  CHECK(index_dolbeault(plane_scenario()).denominator().size() == 1);

  for (long long n = 0; n <= 10; ++n) {
    const auto x = index_dolbeault(sphere_scenario(n));
    REQUIRE(x.is_polynomial());
    CHECK(x.numerator() == symmetric_sum(n));
    CHECK(x.numerator().coefficient_sum() == 2 * n + 1);
  }

  const FixedPointScenario c2(2, OperatorKind::Dolbeault, {dolbeault_point("o", {Weight{1, 0}, Weight{0, 1}}, konst(1, 2))});
  const auto expected = CharacterFraction::over_binomials(konst(1, 2), std::vector{Weight{-1, 0}, Weight{0, -1}});
  CHECK(frac_equal(index_dolbeault(c2), expected));

  check_error(ErrorCode::WrongOperatorKind, [] { index_dolbeault(FixedPointScenario(1, OperatorKind::DeRham)); });
}

TEST_CASE("index_derham collapses to the point count") {
  CHECK(index_derham(FixedPointScenario(1, OperatorKind::DeRham)).is_zero());
  const FixedPointScenario one(2, OperatorKind::DeRham, {derham_point("a", {Weight{3, -1}, Weight{1, 1}})});
  CHECK(index_derham(one).numerator() == konst(1, 2));

  std::mt19937_64 rng(7);
  for (int i = 0; i < 10; ++i) {
    RandomScenarioShape shape{.rank = 2, .min_points = 5, .max_points = 5, .max_dim = 3, .weight_bound = 5};
    const auto s = random_scenario(rng, OperatorKind::DeRham, shape);
    const auto x = scenario_index(s);
    REQUIRE(x.is_polynomial());
    CHECK(x.numerator() == konst(5, 2));
  }
}

TEST_CASE("scenario_index dispatch") {
  std::vector<FixedPointDatum> pts;
  for (int i = 0; i < 3; ++i) pts.push_back(derham_point("p" + std::to_string(i), {Weight{i + 1}}));
  CHECK(scenario_index(FixedPointScenario(1, OperatorKind::DeRham, pts)).numerator() == konst(3));
  CHECK(frac_equal(scenario_index(plane_scenario()), plane_index()));
  CHECK(scenario_index(FixedPointScenario(3, OperatorKind::Generic)).is_zero());
}

TEST_CASE("validation") {
  check_error(ErrorCode::ZeroTangentWeight, [] { FixedPointScenario(1, OperatorKind::DeRham, {derham_point("a", {Weight{0}})}); });
  check_error(ErrorCode::RankMismatch, [] { FixedPointScenario(2, OperatorKind::DeRham, {derham_point("a", {Weight{1}})}); });
  check_error(ErrorCode::InvalidScenario, [] { FixedPointScenario(1, OperatorKind::Dolbeault, {derham_point("a", {Weight{1}})}); });
  check_error(ErrorCode::InvalidScenario, [] {
    FixedPointScenario(1, OperatorKind::DeRham, {dolbeault_point("a", {Weight{1}}, konst(1))});
  });
  check_error(ErrorCode::InvalidScenario, [] { FixedPointScenario(1, OperatorKind::DeRham, {derham_point("a", {})}); });
  check_error(ErrorCode::InvalidScenario, [] {
    FixedPointScenario(1, OperatorKind::DeRham, {derham_point("a", {Weight{1}}), derham_point("a", {Weight{2}})});
  });
  check_error(ErrorCode::RankMismatch, [] {
    FixedPointScenario(1, OperatorKind::Dolbeault, {dolbeault_point("a", {Weight{1}}, konst(1, 2))});
  });
  CHECK(FixedPointScenario::unit(2).is_unit());
  CHECK_FALSE(plane_scenario().is_unit());
}

TEST_CASE("linearize") {
  const auto lin = linearize(sphere_scenario(1));
  REQUIRE(lin.size() == 2);
  CHECK(lin[0].label == "north");
  CHECK(lin[0].bundle_trace == t_pow(1));
  CHECK(frac_equal(lin[0].point_index, plane_index()));
  CHECK(lin[1].label == "south");
  CHECK(lin[1].bundle_trace == t_pow(-1));
  CHECK(frac_equal(lin[1].point_index, CharacterFraction::over_binomials(konst(1), std::vector{Weight{1}})));

  const auto single = linearize(plane_scenario());
  REQUIRE(single.size() == 1);
  CHECK(single[0].bundle_trace == konst(1));

  std::mt19937_64 rng(11);
  for (int i = 0; i < 20; ++i) {
    const auto s = random_scenario(rng, OperatorKind::Dolbeault, {.rank = 2, .max_points = 4});
    CharacterFraction sum(LaurentPolynomial(2));
    for (const auto& p : linearize(s)) sum = sum + frac(p.bundle_trace) * p.point_index;
    CHECK(frac_equal(sum, index_dolbeault(s)));
  }
  check_error(ErrorCode::WrongOperatorKind, [] { linearize(FixedPointScenario(1, OperatorKind::DeRham)); });
}

TEST_CASE("pair_with_ktheory") {
  const auto s0 = sphere_scenario(0);
  const auto x = pair_with_ktheory(s0, {{"north", t_pow(1)}, {"south", t_pow(-1)}});
  REQUIRE(x.is_polynomial());
  CHECK(x.numerator() == symmetric_sum(1));

  const auto s = sphere_scenario(3);
  CHECK(frac_equal(pair_with_ktheory(s, {{"north", konst(1)}, {"south", konst(1)}}), scenario_index(s)));
  CHECK(pair_with_ktheory(s, {{"north", LaurentPolynomial(1)}, {"south", LaurentPolynomial(1)}}).is_zero());
  check_error(ErrorCode::MissingPointEntry, [&] { pair_with_ktheory(s, {{"north", konst(1)}}); });

  // De Rham twisted by a character f at every point gives sum_m f_m(g).
  const FixedPointScenario dr(1, OperatorKind::DeRham, {derham_point("a", {Weight{1}}), derham_point("b", {Weight{2}})});
  const auto y = pair_with_ktheory(dr, {{"a", t_pow(2)}, {"b", konst(3)}});
  REQUIRE(y.is_polynomial());
  CHECK(y.numerator() == t_pow(2) + konst(3));
}

TEST_CASE("product_scenario") {
  const auto cc = product_scenario(plane_scenario(), plane_scenario());
  CHECK(cc.points().size() == 1);
  CHECK(cc.points()[0].name == "origin*origin");
  CHECK(frac_equal(scenario_index(cc), plane_index() * plane_index()));

  for (long long n = 0; n <= 3; ++n)
    for (long long m = 0; m <= 3; ++m) {
      const auto x = scenario_index(product_scenario(sphere_scenario(n), sphere_scenario(m)));
      REQUIRE(x.is_polynomial());
      CHECK(x.numerator() == symmetric_sum(n) * symmetric_sum(m));
    }

  const auto u = FixedPointScenario::unit(1);
  CHECK(scenario_index(u).numerator() == konst(1));
  CHECK(frac_equal(scenario_index(product_scenario(u, sphere_scenario(2))), scenario_index(sphere_scenario(2))));
  CHECK(frac_equal(scenario_index(product_scenario(plane_scenario(), u)), plane_index()));

  check_error(ErrorCode::KindMismatch, [] { product_scenario(plane_scenario(), FixedPointScenario(1, OperatorKind::DeRham)); });
  check_error(ErrorCode::RankMismatch, [] { product_scenario(plane_scenario(), FixedPointScenario::unit(2)); });
}

TEST_CASE("multiplicativity on random pairs") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 20; ++i) {
    const auto kind = i % 2 ? OperatorKind::Generic : OperatorKind::Dolbeault;
    const RandomScenarioShape shape{.rank = 2, .max_points = 2, .max_dim = 2};
    const auto a = random_scenario(rng, kind, shape, "a");
    const auto b = random_scenario(rng, kind, shape, "b");
    CHECK(frac_equal(scenario_index(product_scenario(a, b)), scenario_index(a) * scenario_index(b)));
  }
}

TEST_CASE("additivity over disjoint unions") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    const auto kind = static_cast<OperatorKind>(i % 3);
    const auto a = random_scenario(rng, kind, {.rank = 2}, "a");
    const auto b = random_scenario(rng, kind, {.rank = 2}, "b");
    CHECK(frac_equal(scenario_index(disjoint_union(a, b)), scenario_index(a) + scenario_index(b)));
  }
}

TEST_CASE("relative_index") {
  const auto s = sphere_scenario(2);
  const std::vector<std::string> none;
  CHECK(relative_index(s, s, none).is_zero());
  const auto d = relative_index(sphere_scenario(1), sphere_scenario(0), none);
  REQUIRE(d.is_polynomial());
  CHECK(d.numerator() == t_pow(1) + t_pow(-1));

  std::mt19937_64 rng(99);
  for (int i = 0; i < 20; ++i) {
    const auto common = random_scenario(rng, OperatorKind::Dolbeault, {.rank = 1, .max_points = 3}, "c");
    const auto a = disjoint_union(common, random_scenario(rng, OperatorKind::Dolbeault, {.rank = 1}, "a"));
    const auto b = disjoint_union(common, random_scenario(rng, OperatorKind::Dolbeault, {.rank = 1}, "b"));
    std::vector<std::string> shared;
    for (const auto& p : common.points()) shared.push_back(p.name);
    const auto r = relative_index(a, b, shared);
    CHECK(frac_equal(r, scenario_index(a.without(shared)) - scenario_index(b.without(shared))));
  }

  // Differing at exactly one point.
  FixedPointScenario a(1, OperatorKind::Dolbeault, {dolbeault_point("x", {Weight{1}}, konst(1)), dolbeault_point("p", {Weight{2}}, t_pow(1))});
  FixedPointScenario b(1, OperatorKind::Dolbeault, {dolbeault_point("x", {Weight{1}}, konst(1)), dolbeault_point("p", {Weight{-1}}, konst(2))});
  const std::vector<std::string> x{"x"};
  CHECK(frac_equal(relative_index(a, b, x), point_contribution(a, *a.find("p")) - point_contribution(b, *b.find("p"))));

  const std::vector<std::string> p{"p"};
  check_error(ErrorCode::SharedPointMismatch, [&] { relative_index(a, b, p); });
  const std::vector<std::string> missing{"nowhere"};
  check_error(ErrorCode::SharedPointMismatch, [&] { relative_index(a, b, missing); });
}

TEST_CASE("inversion maps x(t) to x(t^-1)") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 15; ++i) {
    const auto s = random_scenario(rng, static_cast<OperatorKind>(i % 3), {.rank = 2});
    CHECK(frac_equal(scenario_index(inverted(s)), scenario_index(s).inverted()));
  }
}

TEST_CASE("regularity guard") {
  const auto s = sphere_scenario(1);
  // The simplified index is a polynomial, but g = 1 fixes the whole sphere.
  check_error(ErrorCode::SingularElement, [&] { evaluate_index(s, TorusElement::rational({RationalAngle(0, 1)})); });
  const FixedPointScenario two(1, OperatorKind::Dolbeault, {dolbeault_point("a", {Weight{2}}, konst(1))});
  check_error(ErrorCode::SingularElement, [&] { evaluate_index(two, TorusElement::rational({RationalAngle(1, 2)})); });
  try {
    evaluate_index(two, TorusElement::rational({RationalAngle(1, 2)}));
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("'a'") != std::string::npos);
  }

  const auto v = evaluate_index(plane_scenario(), TorusElement::rational({RationalAngle(1, 2)}));
  CHECK(close(v, {0.5, 0.0}));
  const double th = 0.7;
  const auto w = evaluate_index(sphere_scenario(2), TorusElement::numeric({th}));
  CHECK(close(w, std::sin(2.5 * th) / std::sin(0.5 * th)));
}

TEST_CASE("geometric_expansion_check") {
  CHECK(geometric_expansion_check(plane_index(), 3) == konst(1) + t_pow(-1) + t_pow(-2) + t_pow(-3));
  CHECK(geometric_expansion_check(frac(t_pow(5) + konst(2) + t_pow(-1)), 2) == konst(2) + t_pow(-1));
  const auto s1 = scenario_index(sphere_scenario(1));
  for (long long depth = 1; depth <= 4; ++depth) CHECK(geometric_expansion_check(s1, depth) == symmetric_sum(1));

  // Unsimplified sphere contributions expand to the same window.
  const auto north = point_contribution(sphere_scenario(2), sphere_scenario(2).points()[0]);
  const auto south = point_contribution(sphere_scenario(2), sphere_scenario(2).points()[1]);
  CHECK(geometric_expansion_check(north, 6) + geometric_expansion_check(south, 6) == symmetric_sum(2));

  // 1/(1 - t^{-1})^2 = sum (k+1) t^{-k}
  const auto sq = plane_index() * plane_index();
  const auto e = geometric_expansion_check(sq, 4);
  for (long long k = 0; k <= 4; ++k) CHECK(e.coefficient(Weight{-k}) == k + 1);
  CHECK(e.num_terms() == 5);

  check_error(ErrorCode::UnsupportedDenominator, [] {
    geometric_expansion_check(CharacterFraction::over_binomials(konst(1, 2), std::vector{Weight{1, 0}}), 2);
  });
  check_error(ErrorCode::NegativeTruncation, [&] { geometric_expansion_check(sq, -1); });
}

TEST_CASE("scenario JSON") {
  const auto j = nlohmann::json::parse(R"({"rank":1,"operator":"dolbeault","points":[
      {"name":"north","tangent_weights":[[1]],"bundle":[{"coeff":"1","exp":[1]}]},
      {"name":"south","tangent_weights":[[-1]],"bundle":[{"coeff":"1","exp":[-1]}]}]})");
  const auto s = scenario_from_json(j);
  CHECK(scenario_index(s).numerator() == symmetric_sum(1));
  CHECK(scenario_from_json(to_json(s)).points() == s.points());

  std::mt19937_64 rng(3);
  for (int i = 0; i < 10; ++i) {
    const auto r = random_scenario(rng, static_cast<OperatorKind>(i % 3), {.rank = 2});
    const auto back = scenario_from_json(to_json(r));
    CHECK(back.kind() == r.kind());
    CHECK(back.points() == r.points());
  }

  const auto half = scenario_from_json(nlohmann::json::parse(
      R"({"rank":1,"operator":"deRham","lattice_denominator":2,"points":[{"name":"a","tangent_weights":[[1]]}]})"));
  CHECK(half.points()[0].tangent_weights[0] == Weight({1}, 2));

  check_error(ErrorCode::ParseError, [] {
    scenario_from_json(nlohmann::json::parse(R"({"rank":1,"operator":"deRham","points":[],"extra":1})"));
  });
  check_error(ErrorCode::ParseError, [] {
    scenario_from_json(nlohmann::json::parse(R"({"rank":1,"operator":"deRham","points":[{"name":"a","tangent_weights":[[1]],"colour":2}]})"));
  });
  check_error(ErrorCode::ParseError, [] { scenario_from_json(nlohmann::json::parse(R"({"rank":1,"operator":"spin","points":[]})")); });
  check_error(ErrorCode::ZeroTangentWeight, [] {
    scenario_from_json(nlohmann::json::parse(R"({"rank":1,"operator":"deRham","points":[{"name":"a","tangent_weights":[[0]]}]})"));
  });
  check_error(ErrorCode::InvalidScenario, [] {
    scenario_from_json(nlohmann::json::parse(R"({"rank":1,"operator":"generic","points":[{"name":"a","tangent_weights":[[1]],"plus":[]}]})"));
  });
}
