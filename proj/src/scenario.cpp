#include "lefschetz/scenario.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "lefschetz/error.hpp"

namespace lefschetz {

namespace {

LaurentPolynomial one(std::size_t rank) { return LaurentPolynomial::constant(rank, 1); }

void require_kind(const FixedPointScenario& s, OperatorKind kind) {
  if (s.kind() != kind)
    throw Error(ErrorCode::WrongOperatorKind, "expected a " + std::string(to_string(kind)) + " scenario, got " +
                                                  std::string(to_string(s.kind())));
}

void require_rank(const LaurentPolynomial& p, std::size_t rank, const std::string& where) {
  if (p.rank() != rank) throw Error(ErrorCode::RankMismatch, where + " has rank " + std::to_string(p.rank()));
}

// Alternating sum of exterior powers of (+)_j (C_{alpha_j} (+) C_{-alpha_j}).
LaurentPolynomial alternating_exterior(std::span<const Weight> weights, std::size_t rank) {
  LaurentPolynomial p = one(rank);
  for (const auto& w : weights) p = p * LaurentPolynomial::one_minus(w) * LaurentPolynomial::one_minus(-w);
  return p;
}

}  // namespace

std::string_view to_string(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::Generic: return "generic";
    case OperatorKind::Dolbeault: return "dolbeault";
    case OperatorKind::DeRham: return "deRham";
  }
  return "unknown";
}

FixedPointScenario::FixedPointScenario(std::size_t rank, OperatorKind kind, std::vector<FixedPointDatum> points)
    : rank_(rank), kind_(kind), points_(std::move(points)) {
  std::set<std::string> names;
  for (const auto& p : points_) {
    const std::string where = "point '" + p.name + "'";
    if (!names.insert(p.name).second) throw Error(ErrorCode::InvalidScenario, "duplicate " + where);
    for (const auto& w : p.tangent_weights) {
      if (w.rank() != rank_)
        throw Error(ErrorCode::RankMismatch, where + ": tangent weight " + w.to_string() + " has the wrong rank");
      if (w.is_zero()) throw Error(ErrorCode::ZeroTangentWeight, where + ": zero tangent weight");
    }
    const bool generic = kind_ == OperatorKind::Generic;
    const bool dolbeault = kind_ == OperatorKind::Dolbeault;
    if (generic != (p.plus.has_value() && p.minus.has_value()) || (!generic && (p.plus || p.minus)))
      throw Error(ErrorCode::InvalidScenario, where + ": 'plus'/'minus' are required exactly for generic scenarios");
    if (dolbeault != p.bundle.has_value())
      throw Error(ErrorCode::InvalidScenario, where + ": 'bundle' is required exactly for dolbeault scenarios");
    for (const auto* c : {&p.plus, &p.minus, &p.bundle})
      if (*c) require_rank(**c, rank_, where + " character");
  }
  for (const auto& p : points_)
    if (p.tangent_weights.empty() && !is_unit())
      throw Error(ErrorCode::InvalidScenario,
                  "point '" + p.name + "' has no tangent weights; only the unit scenario may have one");
}

FixedPointScenario FixedPointScenario::unit(std::size_t rank) {
  FixedPointDatum p{"unit", {}, one(rank), LaurentPolynomial(rank), std::nullopt};
  return FixedPointScenario(rank, OperatorKind::Generic, {std::move(p)});
}

bool FixedPointScenario::is_unit() const {
  if (kind_ != OperatorKind::Generic || points_.size() != 1) return false;
  const auto& p = points_.front();
  return p.tangent_weights.empty() && p.plus == one(rank_) && p.minus && p.minus->is_zero();
}

const FixedPointDatum* FixedPointScenario::find(const std::string& name) const {
  auto it = std::find_if(points_.begin(), points_.end(), [&](const auto& p) { return p.name == name; });
  return it == points_.end() ? nullptr : &*it;
}

FixedPointScenario FixedPointScenario::without(std::span<const std::string> names) const {
  std::vector<FixedPointDatum> kept;
  for (const auto& p : points_)
    if (std::find(names.begin(), names.end(), p.name) == names.end()) kept.push_back(p);
  return FixedPointScenario(rank_, kind_, std::move(kept));
}

CharacterFraction standard_inverse_real_determinant(std::span<const Weight> tangent_weights, std::size_t rank) {
  std::vector<Weight> ws;
  for (const auto& w : tangent_weights) {
    ws.push_back(-w);
    ws.push_back(w);
  }
  return CharacterFraction::over_binomials(one(rank), ws);
}

CharacterFraction point_contribution(const FixedPointScenario& s, const FixedPointDatum& p, const IndexRules& rules) {
  const std::size_t n = s.rank();
  switch (s.kind()) {
    case OperatorKind::Generic:
      return frac_mul(CharacterFraction(*p.plus - *p.minus), rules.inverse_real_determinant(p.tangent_weights, n));
    case OperatorKind::DeRham:
      return frac_mul(CharacterFraction(alternating_exterior(p.tangent_weights, n)),
                      rules.inverse_real_determinant(p.tangent_weights, n));
    case OperatorKind::Dolbeault: {
      std::vector<Weight> inv;
      for (const auto& w : p.tangent_weights) inv.push_back(-w);
      return frac_simplify(CharacterFraction::over_binomials(*p.bundle, inv));
    }
  }
  throw std::logic_error("unhandled operator kind");
}

namespace {

CharacterFraction sum_points(const FixedPointScenario& s, const IndexRules& rules) {
  CharacterFraction total(LaurentPolynomial(s.rank()));
  for (const auto& p : s.points()) total = frac_add(total, point_contribution(s, p, rules));
  return total;
}

}  // namespace

CharacterFraction index_generic(const FixedPointScenario& s, const IndexRules& rules) {
  require_kind(s, OperatorKind::Generic);
  return sum_points(s, rules);
}

CharacterFraction index_dolbeault(const FixedPointScenario& s) {
  require_kind(s, OperatorKind::Dolbeault);
  return sum_points(s, {});
}

FixedPointScenario derham_as_generic(const FixedPointScenario& s) {
  require_kind(s, OperatorKind::DeRham);
  std::vector<FixedPointDatum> pts;
  for (const auto& p : s.points()) {
    LaurentPolynomial plus(s.rank()), minus(s.rank());
    for (const auto& [w, c] : alternating_exterior(p.tangent_weights, s.rank()).weighted_terms()) {
      if (c > 0)
        plus += LaurentPolynomial::monomial(w, c);
      else
        minus += LaurentPolynomial::monomial(w, -c);
    }
    pts.push_back({p.name, p.tangent_weights, std::move(plus), std::move(minus), std::nullopt});
  }
  return FixedPointScenario(s.rank(), OperatorKind::Generic, std::move(pts));
}

CharacterFraction index_derham(const FixedPointScenario& s, const IndexRules& rules) {
  return index_generic(derham_as_generic(s), rules);
}

CharacterFraction scenario_index(const FixedPointScenario& s, const IndexRules& rules) {
  switch (s.kind()) {
    case OperatorKind::Generic: return index_generic(s, rules);
    case OperatorKind::Dolbeault: return index_dolbeault(s);
    case OperatorKind::DeRham: return index_derham(s, rules);
  }
  throw std::logic_error("unhandled operator kind");
}

std::vector<LinearizedPoint> linearize(const FixedPointScenario& s) {
  require_kind(s, OperatorKind::Dolbeault);
  std::vector<LinearizedPoint> out;
  for (const auto& p : s.points()) {
    std::vector<Weight> inv;
    for (const auto& w : p.tangent_weights) inv.push_back(-w);
    out.push_back({p.name, *p.bundle, CharacterFraction::over_binomials(one(s.rank()), inv)});
  }
  return out;
}

FixedPointScenario twist(const FixedPointScenario& s, const std::map<std::string, LaurentPolynomial>& f_chars) {
  const FixedPointScenario base = s.kind() == OperatorKind::DeRham ? derham_as_generic(s) : s;
  std::vector<FixedPointDatum> pts;
  for (auto p : base.points()) {
    auto it = f_chars.find(p.name);
    if (it == f_chars.end())
      throw Error(ErrorCode::MissingPointEntry, "no K-theory character given for point '" + p.name + "'");
    require_rank(it->second, s.rank(), "K-theory character at '" + p.name + "'");
    for (auto* c : {&p.plus, &p.minus, &p.bundle})
      if (*c) **c = **c * it->second;
    pts.push_back(std::move(p));
  }
  return FixedPointScenario(s.rank(), base.kind(), std::move(pts));
}

CharacterFraction pair_with_ktheory(const FixedPointScenario& s,
                                    const std::map<std::string, LaurentPolynomial>& f_chars) {
  return scenario_index(twist(s, f_chars));
}

FixedPointScenario product_scenario(const FixedPointScenario& a, const FixedPointScenario& b) {
  if (a.rank() != b.rank())
    throw Error(ErrorCode::RankMismatch, "product of scenarios of ranks " + std::to_string(a.rank()) + " and " +
                                             std::to_string(b.rank()));
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;
  if (a.kind() != b.kind())
    throw Error(ErrorCode::KindMismatch, "cannot multiply " + std::string(to_string(a.kind())) + " by " +
                                             std::string(to_string(b.kind())) + " scenarios");
  std::vector<FixedPointDatum> pts;
  for (const auto& p : a.points()) {
    for (const auto& q : b.points()) {
      FixedPointDatum r;
      r.name = p.name + "*" + q.name;
      r.tangent_weights = p.tangent_weights;
      r.tangent_weights.insert(r.tangent_weights.end(), q.tangent_weights.begin(), q.tangent_weights.end());
      if (a.kind() == OperatorKind::Dolbeault) r.bundle = *p.bundle * *q.bundle;
      if (a.kind() == OperatorKind::Generic) {
        // graded tensor product E_1 (x) E_2
        r.plus = *p.plus * *q.plus + *p.minus * *q.minus;
        r.minus = *p.plus * *q.minus + *p.minus * *q.plus;
      }
      pts.push_back(std::move(r));
    }
  }
  return FixedPointScenario(a.rank(), a.kind(), std::move(pts));
}

FixedPointScenario disjoint_union(const FixedPointScenario& a, const FixedPointScenario& b) {
  if (a.rank() != b.rank()) throw Error(ErrorCode::RankMismatch, "disjoint union of scenarios of different rank");
  if (a.kind() != b.kind()) throw Error(ErrorCode::KindMismatch, "disjoint union of scenarios of different kind");
  std::vector<FixedPointDatum> pts(a.points());
  pts.insert(pts.end(), b.points().begin(), b.points().end());
  return FixedPointScenario(a.rank(), a.kind(), std::move(pts));
}

CharacterFraction relative_index(const FixedPointScenario& a, const FixedPointScenario& b,
                                 std::span<const std::string> shared, const IndexRules& rules) {
  if (a.rank() != b.rank()) throw Error(ErrorCode::RankMismatch, "relative index of scenarios of different rank");
  for (const auto& name : shared) {
    const auto* pa = a.find(name);
    const auto* pb = b.find(name);
    if (!pa || !pb) throw Error(ErrorCode::SharedPointMismatch, "shared point '" + name + "' missing from a scenario");
    if (a.kind() != b.kind() || !(*pa == *pb))
      throw Error(ErrorCode::SharedPointMismatch, "shared point '" + name + "' has different data in the two scenarios");
  }
  const auto difference = scenario_index(a, rules) - scenario_index(b, rules);
  const auto outside = scenario_index(a.without(shared), rules) - scenario_index(b.without(shared), rules);
  if (!frac_equal(difference, outside))
    throw std::logic_error("relative index: shared contributions failed to cancel");
  return difference;
}

FixedPointScenario inverted(const FixedPointScenario& s) {
  std::vector<FixedPointDatum> pts;
  for (auto p : s.points()) {
    for (auto& w : p.tangent_weights) w = -w;
    for (auto* c : {&p.plus, &p.minus, &p.bundle})
      if (*c) **c = (*c)->inverted();
    pts.push_back(std::move(p));
  }
  return FixedPointScenario(s.rank(), s.kind(), std::move(pts));
}

LaurentPolynomial geometric_expansion_check(const CharacterFraction& x, long long depth) {
  if (x.rank() != 1) throw Error(ErrorCode::UnsupportedDenominator, "geometric expansion needs a rank-one fraction");
  if (depth < 0) throw Error(ErrorCode::NegativeTruncation, "expansion depth must be >= 0");
  const long long d = x.lattice_denominator();
  const long long low = -depth * d;
  const long long high = depth * d;
  long long top = 0;
  for (const auto& [e, c] : x.numerator().refined_terms(d)) top = std::max(top, e[0]);
  const long long floor = low - top;

  // 1/(1 - t^a) = -t^{-a} / (1 - t^{-a}) = -sum_{k>=1} t^{-ka} for a > 0
  std::map<long long, Integer> series{{0, 1}};
  for (const auto& f : x.denominator()) {
    const long long a = f.weight().scaled_to(d)[0];
    std::map<long long, Integer> next;
    for (const auto& [e, c] : series)
      for (long long k = 1; e - k * a >= floor; ++k) next[e - k * a] -= c;
    series = std::move(next);
  }
  LaurentPolynomial::TermMap out;
  for (const auto& [en, cn] : x.numerator().refined_terms(d)) {
    for (const auto& [es, cs] : series) {
      const long long e = en[0] + es;
      if (e >= low && e <= high) out[{e}] += cn * cs;
    }
  }
  return LaurentPolynomial(1, d, std::move(out));
}

std::complex<double> evaluate_index(const FixedPointScenario& s, const TorusElement& g, const EvalOptions& opts,
                                    const IndexRules& rules) {
  for (const auto& p : s.points())
    for (const auto& w : p.tangent_weights)
      if (is_singular(g, w, opts))
        throw Error(ErrorCode::SingularElement, "tangent weight " + w.to_string() + " at point '" + p.name +
                                                    "' is annihilated by g = " + g.to_string());
  return frac_eval(scenario_index(s, rules), g, opts);
}

FixedPointScenario plane_scenario() {
  return FixedPointScenario(1, OperatorKind::Dolbeault, {{"origin", {Weight{1}}, {}, {}, one(1)}});
}

FixedPointScenario sphere_scenario(long long n) {
  return FixedPointScenario(1, OperatorKind::Dolbeault,
                            {{"north", {Weight{1}}, {}, {}, LaurentPolynomial::monomial(Weight{n})},
                             {"south", {Weight{-1}}, {}, {}, LaurentPolynomial::monomial(Weight{-n})}});
}

}  // namespace lefschetz
