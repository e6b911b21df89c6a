#include "lefschetz/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "lefschetz/char_json.hpp"
#include "lefschetz/distribution.hpp"
#include "lefschetz/scenario_json.hpp"
#include "lefschetz/verify.hpp"
#include "lefschetz/weyl.hpp"

namespace lefschetz {

namespace {

using nlohmann::json;
using cplx = std::complex<double>;

struct Config {
  std::string format = "text";
  std::vector<std::string> eval;
  std::vector<std::string> numeric;
  std::uint64_t seed = 0;
  long long depth = -1;
  double tolerance = 1e-12;

  std::vector<std::string> inputs;
  std::vector<std::string> shared;

  std::string preset;
  std::string roots_file;
  std::string lambda;
  bool full = false;
  std::string compact_roots;
  long long dim_g_over_k = -1;
  std::size_t cap = default_weyl_cap;

  std::size_t grid = default_grid;

  std::vector<std::string> only;
  bool extended = false;

  bool json_out() const { return format == "json"; }
  EvalOptions eval_options() const { return {tolerance}; }
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  return out;
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
}

template <class F>
auto with_file(const std::string& path, F&& parse) {
  try {
    return parse(read_json(path));
  } catch (const Error& e) {
    if (e.detail().starts_with(path)) throw;
    throw Error(e.code(), path + ": " + e.detail());
  }
}

std::string format_double(double x) {
  if (x == 0) x = 0;  // no "-0"
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

// Components below 1e-13 of the magnitude are rounding residue of the
// root-of-unity arithmetic and print as 0.
std::string format_complex(cplx z) {
  const double floor = 1e-13 * std::max(1.0, std::abs(z));
  if (std::abs(z.real()) < floor) z.real(0.0);
  if (std::abs(z.imag()) < floor) z.imag(0.0);
  const double im = z.imag() == 0 ? 0.0 : z.imag();
  return format_double(z.real()) + (std::signbit(im) ? " - " : " + ") + format_double(std::abs(im)) + "i";
}

json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

struct EvalPoint {
  std::string label;
  TorusElement g;
};

std::vector<EvalPoint> eval_points(const Config& c) {
  std::vector<EvalPoint> out;
  for (const auto& e : c.eval) {
    TorusElement::Rational angles;
    for (const auto& part : split(e, ',')) angles.push_back(parse_rational_angle(part));
    out.push_back({e, TorusElement::rational(std::move(angles))});
  }
  for (const auto& e : c.numeric) {
    TorusElement::Numeric angles;
    for (const auto& part : split(e, ',')) {
      try {
        std::size_t used = 0;
        angles.push_back(std::stod(part, &used));
        if (used != part.size()) throw std::invalid_argument(part);
      } catch (const std::logic_error&) {
        throw Error(ErrorCode::ParseError, "malformed angle '" + part + "' in --numeric");
      }
    }
    out.push_back({e + " rad", TorusElement::numeric(std::move(angles))});
  }
  return out;
}

void require_rank(const EvalPoint& p, std::size_t rank) {
  if (p.g.rank() != rank)
    throw Error(ErrorCode::RankMismatch, "evaluation point " + p.label + " has " + std::to_string(p.g.rank()) +
                                             " angles but the torus has rank " + std::to_string(rank));
}

FixedPointScenario load_scenario(const std::string& path) {
  return with_file(path, [](const json& j) { return scenario_from_json(j); });
}

// {"characters": {"label": [terms], ...}, "lattice_denominator": D}
std::map<std::string, LaurentPolynomial> load_characters(const std::string& path, std::size_t rank) {
  return with_file(path, [&](const json& j) {
    if (!j.is_object() || !j.contains("characters") || !j.at("characters").is_object())
      throw Error(ErrorCode::ParseError, "expected an object with a 'characters' map");
    reject_unknown_keys(j, {"characters", "lattice_denominator"}, "characters file");
    const long long d = header_denominator(j);
    std::map<std::string, LaurentPolynomial> out;
    for (const auto& [label, terms] : j.at("characters").items())
      out.emplace(label, terms_from_json(terms, rank, d, "characters." + label));
    return out;
  });
}

void print_values(const Config& c, const std::vector<EvalPoint>& points, const std::vector<cplx>& values,
                  std::ostream& out, json* doc) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (doc)
      (*doc)["values"].push_back({{"at", points[i].label}, {"value", complex_json(values[i])}});
    else
      out << "value at " << points[i].label << ": " << format_complex(values[i]) << '\n';
  }
  (void)c;
}

void emit(const Config& c, std::ostream& out, const json& doc) {
  if (c.json_out()) out << doc.dump(2) << '\n';
}

int cmd_index(const Config& c, std::ostream& out) {
  const auto s = load_scenario(c.inputs.at(0));
  const auto x = scenario_index(s);
  const auto points = eval_points(c);
  std::vector<cplx> values;
  for (const auto& p : points) {
    require_rank(p, s.rank());
    values.push_back(evaluate_index(s, p.g, c.eval_options()));
  }
  json doc{{"index", to_json(x)}};
  if (!c.json_out()) out << x.to_string() << '\n';
  print_values(c, points, values, out, c.json_out() ? &doc : nullptr);
  emit(c, out, doc);
  return exit_ok;
}

int cmd_product(const Config& c, std::ostream& out) {
  const auto a = load_scenario(c.inputs.at(0));
  const auto b = load_scenario(c.inputs.at(1));
  const auto p = product_scenario(a, b);
  const auto x = scenario_index(p);
  const bool mult = frac_equal(x, scenario_index(a) * scenario_index(b));
  if (c.json_out()) {
    emit(c, out, {{"scenario", to_json(p)}, {"index", to_json(x)}, {"multiplicative", mult}});
  } else {
    out << x.to_string() << '\n';
    out << "points: " << p.points().size() << '\n';
    out << "index(a x b) = index(a) index(b): " << (mult ? "yes" : "NO") << '\n';
  }
  return mult ? exit_ok : exit_verify_failed;
}

int cmd_relative(const Config& c, std::ostream& out) {
  const auto a = load_scenario(c.inputs.at(0));
  const auto b = load_scenario(c.inputs.at(1));
  const auto x = relative_index(a, b, c.shared);
  if (c.json_out())
    emit(c, out, {{"relative_index", to_json(x)}, {"shared", c.shared}});
  else
    out << x.to_string() << '\n';
  return exit_ok;
}

int cmd_linearize(const Config& c, std::ostream& out) {
  const auto s = load_scenario(c.inputs.at(0));
  json doc = json::array();
  for (const auto& p : linearize(s)) {
    if (c.json_out())
      doc.push_back({{"label", p.label}, {"bundle_trace", to_json(p.bundle_trace)}, {"point_index", to_json(p.point_index)}});
    else
      out << p.label << ": " << p.bundle_trace.to_string() << "  x  " << p.point_index.to_string() << '\n';
  }
  emit(c, out, doc);
  return exit_ok;
}

int cmd_pair_ktheory(const Config& c, std::ostream& out) {
  const auto s = load_scenario(c.inputs.at(0));
  const auto f = load_characters(c.inputs.at(1), s.rank());
  const auto x = pair_with_ktheory(s, f);
  const auto points = eval_points(c);
  std::vector<cplx> values;
  const auto twisted = twist(s, f);
  for (const auto& p : points) {
    require_rank(p, s.rank());
    values.push_back(evaluate_index(twisted, p.g, c.eval_options()));
  }
  json doc{{"pairing", to_json(x)}};
  if (!c.json_out()) out << x.to_string() << '\n';
  print_values(c, points, values, out, c.json_out() ? &doc : nullptr);
  emit(c, out, doc);
  return exit_ok;
}

Weight parse_lambda(const std::string& text, std::size_t rank) {
  const auto parts = split(text, ',');
  if (parts.size() != rank)
    throw Error(ErrorCode::ParseError, "--lambda needs " + std::to_string(rank) + " comma-separated entries");
  Weight w = Weight::zero(rank);
  for (std::size_t i = 0; i < rank; ++i) {
    const auto a = parse_rational_angle(parts[i]);  // same p/q syntax
    std::vector<long long> v(rank, 0);
    v[i] = a.p;
    w = w + Weight(std::move(v), a.q);
  }
  return w;
}

int cmd_weyl(const Config& c, std::ostream& out) {
  if (c.preset.empty() == c.roots_file.empty()) throw Error(ErrorCode::ParseError, "give exactly one of --preset and --roots");
  RootSystemData rs = c.preset.empty() ? with_file(c.roots_file, [](const json& j) { return root_system_from_json(j); })
                                       : RootSystemData::preset(c.preset);
  if (c.compact_roots == "none")
    rs = rs.with_compact_roots({});
  else if (c.compact_roots == "all")
    rs = rs.with_compact_roots(rs.roots());
  else if (!c.compact_roots.empty())
    throw Error(ErrorCode::ParseError, "--compact-roots must be 'none' or 'all'");
  if (c.lambda.empty()) throw Error(ErrorCode::ParseError, "--lambda is required");
  const Weight lambda = parse_lambda(c.lambda, rs.rank());

  const bool compact_only = !c.full;
  const auto group = weyl_group(rs, compact_only, c.cap);
  const auto x = character_weyl_sum(rs, lambda, compact_only, true, c.cap);
  const bool flag_ok = frac_equal(scenario_index(flag_scenario(rs, lambda, c.cap)), character_weyl_sum(rs, lambda, true, true, c.cap));
  const long long noncompact = static_cast<long long>(rs.roots().size() - rs.compact_roots().size());
  const long long dim = c.dim_g_over_k >= 0 ? c.dim_g_over_k : noncompact;
  const bool discrete = compact_only && noncompact > 0;

  const auto points = eval_points(c);
  std::vector<cplx> values;
  for (const auto& p : points) {
    require_rank(p, rs.rank());
    values.push_back(numeric_character(rs, lambda, compact_only, p.g, c.eval_options()));
  }

  json doc{{"lambda", lambda.to_string()},
           {"rho", half_sum_rho(rs).to_string()},
           {"group", compact_only ? "compact" : "full"},
           {"weyl_group_order", group.size()},
           {"character", to_json(x)},
           {"flag_scenario_agrees", flag_ok}};
  if (x.is_polynomial()) doc["dimension"] = x.numerator().coefficient_sum().str();
  std::optional<DiscreteSeriesCharacter> ds;
  if (discrete) {
    ds = discrete_series_character(rs, lambda, dim);
    doc["dim_g_over_k"] = dim;
    doc["sign"] = ds->sign;
    doc["theta"] = to_json(ds->theta);
  }
  if (c.json_out()) {
    print_values(c, points, values, out, &doc);
    if (ds)
      for (std::size_t i = 0; i < values.size(); ++i) doc["values"][i]["theta"] = complex_json(double(ds->sign) * values[i]);
    emit(c, out, doc);
    return exit_ok;
  }
  out << "character: " << x.to_string() << '\n';
  if (x.is_polynomial()) out << "dimension: " << x.numerator().coefficient_sum().str() << '\n';
  out << "rho: " << half_sum_rho(rs).to_string() << '\n';
  out << (compact_only ? "compact" : "full") << " Weyl group order: " << group.size() << '\n';
  out << "flag scenario agrees with the W_c sum: " << (flag_ok ? "yes" : "NO") << '\n';
  if (ds) out << "discrete series: sign " << ds->sign << " (dim G/K = " << dim << "), theta = " << ds->theta.to_string() << '\n';
  for (std::size_t i = 0; i < points.size(); ++i) {
    out << "value at " << points[i].label << ": " << format_complex(values[i]);
    if (ds) out << "  theta: " << format_complex(double(ds->sign) * values[i]);
    out << '\n';
  }
  return flag_ok ? exit_ok : exit_verify_failed;
}

int cmd_pair(const Config& c, std::ostream& out) {
  const auto phi = with_file(c.inputs.at(0), [](const json& j) { return test_function_from_json(j); });
  const long long n = c.depth >= 0 ? c.depth : 64;
  AbelSchedule schedule;
  schedule.grid = c.grid;
  const auto rep = pairing_report(phi, n, schedule);
  if (c.json_out()) {
    emit(c, out, {{"partial_sum_value", complex_json(rep.partial_sum_value)},
                  {"abel_value", complex_json(rep.abel_value)},
                  {"discrepancy", rep.discrepancy},
                  {"truncation", rep.truncation},
                  {"radii", rep.radii},
                  {"grid", rep.grid}});
    return exit_ok;
  }
  out << "partial sum (N = " << rep.truncation << "): " << format_complex(rep.partial_sum_value) << '\n';
  out << "Abel limit (r = 1 - 2^-j, j = " << schedule.j_min << ".." << schedule.j_max << ", grid " << rep.grid
      << "): " << format_complex(rep.abel_value) << '\n';
  out << "discrepancy: " << format_double(rep.discrepancy) << '\n';
  return exit_ok;
}

int cmd_expand(const Config& c, std::ostream& out) {
  const auto x = with_file(c.inputs.at(0), [](const json& j) {
    return j.is_object() && j.contains("operator") ? scenario_index(scenario_from_json(j)) : fraction_from_json(j);
  });
  const long long depth = c.depth >= 0 ? c.depth : 8;
  const auto p = geometric_expansion_check(x, depth);
  if (c.json_out())
    emit(c, out, {{"depth", depth}, {"expansion", to_json(p)}});
  else
    out << p.to_string() << '\n';
  return exit_ok;
}

int cmd_verify(const Config& c, std::ostream& out, const IndexRules& rules) {
  std::vector<std::string> names;
  for (const auto& o : c.only)
    for (const auto& n : split(o, ',')) {
      if (!is_identity(n)) throw Error(ErrorCode::ParseError, "unknown identity '" + n + "'");
      names.push_back(n);
    }
  if (names.empty()) names = identity_names(c.extended);

  VerifyOptions opts;
  opts.seed = c.seed;
  opts.rules = rules;
  opts.weyl_cap = c.cap;
  std::vector<CheckResult> results;
  const CheckResult* first_failure = nullptr;
  for (const auto& n : names) results.push_back(run_identity(n, opts));
  for (const auto& r : results)
    if (!r.pass && !first_failure) first_failure = &r;

  if (c.json_out()) {
    json doc{{"seed", c.seed}, {"results", json::array()}};
    for (const auto& r : results)
      doc["results"].push_back({{"identity", r.name}, {"pass", r.pass}, {"cases", r.cases}, {"summary", r.summary}});
    if (first_failure) doc["counterexample"] = {{"identity", first_failure->name}, {"case", json::parse(first_failure->counterexample)}};
    emit(c, out, doc);
  } else {
    for (const auto& r : results)
      out << std::left << std::setw(18) << r.name << (r.pass ? "PASS" : "FAIL") << std::right << std::setw(6) << r.cases
          << "  " << r.summary << '\n';
    if (first_failure) out << "first counterexample (" << first_failure->name << "): " << first_failure->counterexample << '\n';
  }
  return first_failure ? exit_verify_failed : exit_ok;
}

}  // namespace

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::SingularElement:
    case ErrorCode::SingularLambda:
    case ErrorCode::GroupTooLarge:
      return exit_singular;
    default:
      return exit_input;
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const IndexRules& rules) {
  Config c;
  CLI::App app{"Equivariant indices from isolated fixed point data", "lefschetz"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--eval", c.eval, "Rational evaluation point p/q[,p/q...] (angle 2 pi p/q); repeatable");
  app.add_option("--numeric", c.numeric, "Evaluation point in radians x[,y...]; repeatable");
  app.add_option("--seed", c.seed, "Seed for randomized checks");
  app.add_option("--depth", c.depth, "Truncation depth (expand, pair)")->check(CLI::NonNegativeNumber);
  app.add_option("--tolerance", c.tolerance, "Singularity tolerance for numeric points")->check(CLI::PositiveNumber);

  auto* index = app.add_subcommand("index", "g-index of a scenario");
  index->add_option("scenario", c.inputs, "Scenario JSON")->required()->expected(1);
  auto* product = app.add_subcommand("product", "Index of a product of two scenarios");
  product->add_option("scenarios", c.inputs, "Two scenario files")->required()->expected(2);
  auto* relative = app.add_subcommand("relative", "index(a) - index(b) with shared points");
  relative->add_option("scenarios", c.inputs, "Two scenario files")->required()->expected(2);
  relative->add_option("--shared", c.shared, "Shared point label; repeatable or comma separated")->delimiter(',');
  auto* linearize_cmd = app.add_subcommand("linearize", "Per-point linearisation of a Dolbeault scenario");
  linearize_cmd->add_option("scenario", c.inputs, "Scenario JSON")->required()->expected(1);
  auto* pairk = app.add_subcommand("pair-ktheory", "Index pairing with a K-theory class");
  pairk->add_option("inputs", c.inputs, "Scenario and characters files")->required()->expected(2);
  auto* weyl = app.add_subcommand("weyl", "Weyl character sums and flag scenarios");
  weyl->add_option("--preset", c.preset, "A1, A1xA1, A2 or B2");
  weyl->add_option("--roots", c.roots_file, "Root system JSON");
  weyl->add_option("--lambda", c.lambda, "lambda as comma-separated integers or p/q")->required();
  weyl->add_flag("--full", c.full, "Sum over the full Weyl group instead of W_c");
  weyl->add_option("--compact-roots", c.compact_roots, "Override the compact roots: none or all");
  weyl->add_option("--at", c.eval, "Same as --eval");
  weyl->add_option("--dim-g-k", c.dim_g_over_k, "dim G/K for the discrete series sign (default: noncompact root count)");
  weyl->add_option("--cap", c.cap, "Largest Weyl group enumerated")->check(CLI::PositiveNumber);
  auto* pair = app.add_subcommand("pair", "Pair the circle character with a test function");
  pair->add_option("test_function", c.inputs, "Test function JSON")->required()->expected(1);
  pair->add_option("--grid", c.grid, "Base quadrature grid")->check(CLI::PositiveNumber);
  auto* expand = app.add_subcommand("expand", "Expansion of a rank-one index in powers of t^-1");
  expand->add_option("input", c.inputs, "Fraction or scenario JSON")->required()->expected(1);
  auto* verify = app.add_subcommand("verify", "Run the identity suite");
  verify->add_option("--only", c.only, "Identities to run; repeatable or comma separated");
  verify->add_flag("--extended", c.extended, "Include the Bott element check");
  verify->add_option("--cap", c.cap, "Largest Weyl group enumerated")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return exit_input;
  }

  try {
    if (*index) return cmd_index(c, out);
    if (*product) return cmd_product(c, out);
    if (*relative) return cmd_relative(c, out);
    if (*linearize_cmd) return cmd_linearize(c, out);
    if (*pairk) return cmd_pair_ktheory(c, out);
    if (*weyl) return cmd_weyl(c, out);
    if (*pair) return cmd_pair(c, out);
    if (*expand) return cmd_expand(c, out);
    if (*verify) return cmd_verify(c, out, rules);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
  return exit_input;
}

}  // namespace lefschetz
