#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "lefschetz/char_json.hpp"
#include "lefschetz/cli.hpp"
#include "lefschetz/scenario_json.hpp"
#include "support.hpp"

using namespace lefschetz;
using namespace lefschetz::testing;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const IndexRules& rules = {}) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err, rules);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(LEFSCHETZ_DATA_DIR) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("lefschetz_cli_" + name);
  std::ofstream(path) << content;
  return path.string();
}

bool contains(const std::string& haystack, const std::string& needle) { return haystack.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("index") {
  auto r = run({"index", data("sphere_n1.json")});
  CHECK(r.code == 0);
  CHECK(r.out == "t^1 + 1 + t^-1\n");

  r = run({"index", data("plane.json"), "--eval", "1/2"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "value at 1/2: 0.5 + 0i"));

  r = run({"--eval", "0/1", "index", data("plane.json")});
  CHECK(r.code == 2);
  CHECK(contains(r.err, "SingularElement"));
  CHECK(contains(r.err, "'origin'"));
  CHECK(contains(r.err, "(1)"));

  r = run({"index", data("sphere_n1.json"), "--numeric", "0.0"});
  CHECK(r.code == 2);
  r = run({"index", data("sphere_n1.json"), "--numeric", "0.7"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "value at 0.7 rad: " + std::to_string(1 + 2 * std::cos(0.7)).substr(0, 8)));

  CHECK(run({"index", data("euler_three_points.json")}).out == "3\n");
  CHECK(run({"index", data("generic_point.json")}).out == "1\n");

  r = run({"index", data("sphere_n1.json"), "--format", "json", "--eval", "1/3", "--eval", "1/4"});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(fraction_from_json(doc.at("index")).numerator() == t_pow(1) + konst(1) + t_pow(-1));
  CHECK(doc.at("values").size() == 2);
  CHECK(doc.at("values")[1].at("at") == "1/4");
}

TEST_CASE("input errors exit 1 with a diagnostic") {
  auto r = run({"index", temp_file("broken.json", "{\"rank\": 1,\n \"operator\": }")});
  CHECK(r.code == 1);
  CHECK(contains(r.err, "line 2"));

  r = run({"index", temp_file("extra.json", R"({"rank":1,"operator":"deRham","points":[{"name":"a","tangent_weights":[[1]],"bundle":[]}]})")});
  CHECK(r.code == 1);
  CHECK(contains(r.err, "bundle"));

  r = run({"index", temp_file("unknown.json", R"({"rank":1,"operator":"deRham","points":[],"orbit":3})")});
  CHECK(r.code == 1);
  CHECK(contains(r.err, "'orbit'"));

  r = run({"index", temp_file("zero.json", R"({"rank":1,"operator":"deRham","points":[{"name":"a","tangent_weights":[[0]]}]})")});
  CHECK(r.code == 1);
  CHECK(contains(r.err, "ZeroTangentWeight"));

  CHECK(run({"index", "/nonexistent/scenario.json"}).code == 1);
  CHECK(run({"index", data("plane.json"), "--eval", "1/2,1/3"}).code == 1);
  CHECK(run({"index", data("plane.json"), "--eval", "half"}).code == 1);
  CHECK(run({"index", data("plane.json"), "--format", "xml"}).code == 1);
  CHECK(run({"index", data("plane.json"), "--tolerance", "0"}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("product, relative, linearize, pair-ktheory, expand") {
  auto r = run({"product", data("sphere_n1.json"), data("sphere_n1.json")});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "t^2 + 2*t^1 + 3 + 2*t^-1 + t^-2\n"));
  CHECK(contains(r.out, "yes"));
  r = run({"product", data("sphere_n1.json"), data("euler_three_points.json")});
  CHECK(r.code == 1);
  CHECK(contains(r.err, "RankMismatch"));

  r = run({"relative", data("sphere_n1.json"), data("sphere_n0.json")});
  CHECK(r.out == "t^1 + t^-1\n");
  r = run({"relative", data("sphere_n1.json"), data("sphere_n0.json"), "--shared", "north"});
  CHECK(r.code == 1);
  CHECK(contains(r.err, "SharedPointMismatch"));
  CHECK(run({"relative", data("sphere_n1.json"), data("sphere_n1.json"), "--shared", "north,south"}).out == "0\n");

  r = run({"linearize", data("sphere_n1.json"), "--format", "json"});
  REQUIRE(r.code == 0);
  const auto lin = nlohmann::json::parse(r.out);
  REQUIRE(lin.size() == 2);
  CHECK(lin[0].at("label") == "north");
  CHECK(polynomial_from_json(lin[0].at("bundle_trace")) == t_pow(1));
  CHECK(frac_equal(fraction_from_json(lin[1].at("point_index")),
                   CharacterFraction::over_binomials(konst(1), std::vector{Weight{1}})));
  CHECK(run({"linearize", data("euler_three_points.json")}).code == 1);

  r = run({"pair-ktheory", data("sphere_n0.json"), data("line_bundle_n1.json")});
  CHECK(r.out == "t^1 + 1 + t^-1\n");
  r = run({"pair-ktheory", data("sphere_n0.json"), temp_file("partial.json", R"({"characters":{"north":[]}})")});
  CHECK(r.code == 1);
  CHECK(contains(r.err, "MissingPointEntry"));

  CHECK(run({"expand", data("plane_fraction.json"), "--depth", "3"}).out == "1 + t^-1 + t^-2 + t^-3\n");
  CHECK(run({"expand", data("plane.json"), "--depth", "2"}).out == "1 + t^-1 + t^-2\n");
  CHECK(run({"expand", data("sphere_n1.json"), "--depth", "5"}).out == "t^1 + 1 + t^-1\n");
  CHECK(run({"expand", data("euler_three_points.json")}).code == 1);
  CHECK(run({"expand", data("plane.json"), "--depth", "-1"}).code == 1);
}

TEST_CASE("weyl") {
  auto r = run({"weyl", "--preset", "A1", "--lambda", "3", "--full"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "character: t^2 + 1 + t^-2\n"));
  CHECK(contains(r.out, "dimension: 3\n"));
  CHECK(contains(r.out, "full Weyl group order: 2\n"));
  CHECK(contains(r.out, "flag scenario agrees with the W_c sum: yes"));

  r = run({"weyl", "--preset", "A1", "--lambda", "2", "--compact-roots", "none", "--at", "1/3", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc.at("weyl_group_order") == 1);
  CHECK(doc.at("sign") == -1);
  const double th = 2 * std::numbers::pi / 3;
  const std::complex<double> t = std::polar(1.0, th);
  const auto closed = -t * t / (t - 1.0 / t);
  const auto theta = doc.at("values")[0].at("theta");
  CHECK(close({theta[0].get<double>(), theta[1].get<double>()}, closed, 1e-12));

  CHECK(run({"weyl", "--roots", data("sl2r.json"), "--lambda", "2"}).code == 0);
  CHECK(contains(run({"weyl", "--preset", "B2", "--lambda", "5/2,1/2", "--full"}).out, "dimension: 5"));
  CHECK(run({"weyl", "--preset", "G2", "--lambda", "2"}).code == 1);
  CHECK(run({"weyl", "--preset", "A1", "--lambda", "0"}).code == 2);
  CHECK(run({"weyl", "--preset", "A1", "--lambda", "1/2"}).code == 1);
  CHECK(run({"weyl", "--preset", "A2", "--lambda", "2,0,-2", "--full", "--cap", "3"}).code == 2);
  CHECK(run({"weyl", "--preset", "A1", "--lambda", "3", "--full", "--eval", "0/1"}).code == 2);
}

TEST_CASE("pair") {
  auto r = run({"pair", temp_file("one.json", R"({"trig": {"0": [1, 0]}})")});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "partial sum (N = 64): 1 + 0i"));
  CHECK(contains(r.out, "discrepancy: 0\n"));

  r = run({"pair", data("mode3.json"), "--format", "json"});
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc.at("partial_sum_value")[0] == 1.0);
  CHECK(std::abs(doc.at("abel_value")[0].get<double>() - 1.0) < 1e-6);
  doc = nlohmann::json::parse(run({"pair", data("mode3.json"), "--depth", "2", "--format", "json"}).out);
  CHECK(doc.at("partial_sum_value")[0] == 0.0);
  CHECK(doc.at("truncation") == 2);

  r = run({"pair", data("exp_cos.json"), "--format", "json"});
  doc = nlohmann::json::parse(r.out);
  CHECK(doc.at("discrepancy").get<double>() < 1e-6);

  CHECK(run({"pair", temp_file("short.json", R"({"samples": [1, 2, 3]})")}).code == 1);
  CHECK(run({"pair", temp_file("both.json", R"({"samples": [], "trig": {}})")}).code == 1);
}

TEST_CASE("verify") {
  auto r = run({"verify"});
  CHECK(r.code == 0);
  CHECK_FALSE(contains(r.out, "FAIL"));
  CHECK_FALSE(contains(r.out, "bott"));
  CHECK(contains(run({"verify", "--extended", "--only", "bott"}).out, "bott"));

  const auto a = run({"verify", "--only", "multiplicativity", "--seed", "7"});
  const auto b = run({"verify", "--only", "multiplicativity", "--seed", "7"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(std::count(a.out.begin(), a.out.end(), '\n') == 1);
  CHECK(run({"verify", "--only", "nonsense"}).code == 1);

  // Sign error in det_R: the de Rham identity must catch it.
  IndexRules mutated;
  mutated.inverse_real_determinant = [](std::span<const Weight> ws, std::size_t rank) {
    return -standard_inverse_real_determinant(ws, rank);
  };
  r = run({"verify"}, mutated);
  CHECK(r.code == 3);
  CHECK(contains(r.out, "derham            FAIL"));
  CHECK(contains(r.out, "first counterexample (derham)"));
  r = run({"verify", "--only", "derham", "--format", "json"}, mutated);
  CHECK(r.code == 3);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc.at("counterexample").at("identity") == "derham");
  // the counterexample re-parses as a scenario
  CHECK_NOTHROW(scenario_from_json(doc.at("counterexample").at("case").at("scenario")));
}

TEST_CASE("determinism and JSON round trip") {
  const std::vector<std::string> args{"product", data("sphere_n1.json"), data("sphere_n0.json"), "--format", "json"};
  const auto a = run(args), b = run(args);
  CHECK(a.out == b.out);
  const auto doc = nlohmann::json::parse(a.out);
  const auto s = scenario_from_json(doc.at("scenario"));
  CHECK(frac_equal(scenario_index(s), fraction_from_json(doc.at("index"))));
  CHECK(to_json(s) == doc.at("scenario"));
}
