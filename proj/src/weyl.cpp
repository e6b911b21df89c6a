#include "lefschetz/weyl.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "lefschetz/char_json.hpp"
#include "lefschetz/error.hpp"

namespace lefschetz {

namespace {

bool contains(std::span<const Weight> ws, const Weight& w) { return std::find(ws.begin(), ws.end(), w) != ws.end(); }

void require_closed_under_negation(std::span<const Weight> ws, const std::string& what) {
  for (const auto& w : ws)
    if (!contains(ws, -w)) throw Error(ErrorCode::InvalidRootSystem, what + " not closed under negation: " + w.to_string() + " lacks its negative");
}

WeylElement identity(std::size_t n) {
  WeylElement e{n, std::vector<long long>(n * n, 0), 0, 1};
  for (std::size_t i = 0; i < n; ++i) e.matrix[i * n + i] = 1;
  return e;
}

std::vector<Weight> negated(std::span<const Weight> ws) {
  std::vector<Weight> out;
  for (const auto& w : ws) out.push_back(-w);
  return out;
}

}  // namespace

std::pair<long long, long long> dot(const Weight& a, const Weight& b) {
  if (a.rank() != b.rank()) throw Error(ErrorCode::RankMismatch, "dot product of weights of different rank");
  long long num = 0;
  for (std::size_t i = 0; i < a.rank(); ++i) num += a[i] * b[i];
  long long den = a.denominator() * b.denominator();
  const long long g = gcd_ll(num, den);
  return {num / g, den / g};
}

RootSystemData::RootSystemData(std::size_t rank, std::vector<Weight> roots, std::vector<Weight> compact_roots,
                               Weight regular_vector)
    : rank_(rank), roots_(std::move(roots)), compact_(std::move(compact_roots)), regular_(std::move(regular_vector)) {
  if (regular_.rank() != rank_) throw Error(ErrorCode::RankMismatch, "regular vector has the wrong rank");
  std::set<Weight> seen;
  for (const auto& r : roots_) {
    if (r.rank() != rank_) throw Error(ErrorCode::RankMismatch, "root " + r.to_string() + " has the wrong rank");
    if (r.is_zero()) throw Error(ErrorCode::InvalidRootSystem, "zero root");
    if (!seen.insert(r).second) throw Error(ErrorCode::InvalidRootSystem, "duplicate root " + r.to_string());
    if (dot(r, regular_).first == 0)
      throw Error(ErrorCode::SingularRegularVector,
                  "regular vector " + regular_.to_string() + " is orthogonal to root " + r.to_string());
  }
  require_closed_under_negation(roots_, "roots");
  for (const auto& c : compact_)
    if (!contains(roots_, c)) throw Error(ErrorCode::InvalidRootSystem, "compact root " + c.to_string() + " is not a root");
  require_closed_under_negation(compact_, "compact roots");
  for (const auto& a : roots_) {
    const auto s = reflection(a);
    for (const auto& b : roots_)
      if (!seen.contains(s.apply(b)))
        throw Error(ErrorCode::InvalidRootSystem, "reflection in " + a.to_string() + " does not permute the roots");
  }
}

RootSystemData RootSystemData::with_compact_roots(std::vector<Weight> compact) const {
  return RootSystemData(rank_, roots_, std::move(compact), regular_);
}

std::vector<std::string> RootSystemData::preset_names() { return {"A1", "A1xA1", "A2", "B2"}; }

RootSystemData RootSystemData::preset(const std::string& name) {
  std::vector<Weight> roots;
  auto pm = [&](Weight w) {
    roots.push_back(w);
    roots.push_back(-w);
  };
  if (name == "A1") {
    pm(Weight{2});
    return RootSystemData(1, roots, roots, Weight{1});
  }
  if (name == "A1xA1") {
    pm(Weight{2, 0});
    pm(Weight{0, 2});
    return RootSystemData(2, roots, roots, Weight{1, 1});
  }
  if (name == "A2") {
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j) pm(Weight::basis(3, i) - Weight::basis(3, j));
    return RootSystemData(3, roots, roots, Weight{2, 1, 0});
  }
  if (name == "B2") {
    pm(Weight{1, 0});
    pm(Weight{0, 1});
    pm(Weight{1, 1});
    pm(Weight{1, -1});
    return RootSystemData(2, roots, roots, Weight{2, 1});
  }
  throw Error(ErrorCode::InvalidRootSystem, "unknown preset '" + name + "'");
}

std::vector<Weight> positive_roots(const RootSystemData& rs) {
  std::vector<Weight> out;
  for (const auto& r : rs.roots()) {
    const auto [num, den] = dot(r, rs.regular_vector());
    if (num == 0) throw Error(ErrorCode::SingularRegularVector, "regular vector is orthogonal to " + r.to_string());
    if (num > 0) out.push_back(r);
  }
  return out;
}

std::vector<Weight> positive_compact_roots(const RootSystemData& rs) {
  std::vector<Weight> out;
  for (const auto& r : positive_roots(rs))
    if (contains(rs.compact_roots(), r)) out.push_back(r);
  return out;
}

std::vector<Weight> simple_roots(std::span<const Weight> positive) {
  std::vector<Weight> out;
  for (const auto& a : positive) {
    bool decomposable = false;
    for (const auto& b : positive)
      if (!(b == a) && contains(positive, a - b)) decomposable = true;
    if (!decomposable) out.push_back(a);
  }
  return out;
}

Weight half_sum_rho(const RootSystemData& rs) {
  Weight sum = Weight::zero(rs.rank());
  for (const auto& a : positive_roots(rs)) sum = sum + a;
  std::vector<long long> num(sum.numerators().begin(), sum.numerators().end());
  return Weight(std::move(num), 2 * sum.denominator());
}

Weight WeylElement::apply(const Weight& w) const {
  if (w.rank() != rank) throw Error(ErrorCode::RankMismatch, "Weyl element applied to a weight of the wrong rank");
  std::vector<long long> out(rank, 0);
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < rank; ++j) out[i] += matrix[i * rank + j] * w[j];
  return Weight(std::move(out), w.denominator());
}

WeylElement WeylElement::compose(const WeylElement& other) const {
  WeylElement r{rank, std::vector<long long>(rank * rank, 0), length + other.length, sign * other.sign};
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t k = 0; k < rank; ++k)
      for (std::size_t j = 0; j < rank; ++j) r.matrix[i * rank + j] += matrix[i * rank + k] * other.matrix[k * rank + j];
  return r;
}

long long WeylElement::determinant() const {
  // Bareiss elimination; exact for integer matrices.
  std::vector<Integer> m(matrix.begin(), matrix.end());
  const std::size_t n = rank;
  Integer prev = 1;
  int sgn = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k * n + k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p * n + k] == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m[k * n + j], m[p * n + j]);
      sgn = -sgn;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i * n + j] = (m[i * n + j] * m[k * n + k] - m[i * n + k] * m[k * n + j]) / prev;
    prev = m[k * n + k];
  }
  return n == 0 ? 1 : sgn * static_cast<long long>(m[n * n - 1]);
}

WeylElement reflection(const Weight& alpha) {
  const std::size_t n = alpha.rank();
  long long aa = 0;
  for (std::size_t i = 0; i < n; ++i) aa += alpha[i] * alpha[i];
  if (aa == 0) throw Error(ErrorCode::InvalidRootSystem, "reflection in the zero vector");
  WeylElement s = identity(n);
  s.length = 1;
  s.sign = -1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const long long num = 2 * alpha[i] * alpha[j];
      if (num % aa != 0)
        throw Error(ErrorCode::InvalidRootSystem, "reflection in " + alpha.to_string() + " is not integral");
      s.matrix[i * n + j] -= num / aa;
    }
  return s;
}

std::vector<WeylElement> weyl_group(const RootSystemData& rs, bool compact_only, std::size_t cap) {
  const auto positive = compact_only ? positive_compact_roots(rs) : positive_roots(rs);
  std::vector<WeylElement> gens;
  for (const auto& a : simple_roots(positive)) gens.push_back(reflection(a));

  std::vector<WeylElement> group{identity(rs.rank())};
  std::map<std::vector<long long>, std::size_t> index{{group[0].matrix, 0}};
  for (std::size_t head = 0; head < group.size(); ++head) {
    for (const auto& s : gens) {
      WeylElement next = s.compose(group[head]);
      if (index.contains(next.matrix)) continue;
      if (group.size() >= cap)
        throw Error(ErrorCode::GroupTooLarge, "Weyl group exceeds the cap of " + std::to_string(cap) + " elements");
      if (next.determinant() != next.sign)
        throw Error(ErrorCode::InvalidRootSystem, "Weyl element sign disagrees with its determinant");
      index.emplace(next.matrix, group.size());
      group.push_back(std::move(next));
    }
  }
  return group;
}

LaurentPolynomial weyl_denominator(const RootSystemData& rs) {
  LaurentPolynomial d = LaurentPolynomial::monomial(half_sum_rho(rs));
  for (const auto& a : positive_roots(rs)) d = d * LaurentPolynomial::one_minus(-a);
  return d;
}

void check_lambda(const RootSystemData& rs, const Weight& lambda) {
  if (lambda.rank() != rs.rank())
    throw Error(ErrorCode::RankMismatch, "lambda " + lambda.to_string() + " does not match rank " + std::to_string(rs.rank()));
  for (const auto& a : rs.roots())
    if (dot(a, lambda).first == 0)
      throw Error(ErrorCode::SingularLambda, "lambda " + lambda.to_string() + " is orthogonal to root " + a.to_string());
  if (!(lambda - half_sum_rho(rs)).is_integral())
    throw Error(ErrorCode::NonIntegralLambda, "lambda - rho is not integral for lambda " + lambda.to_string());
}

CharacterFraction character_weyl_sum(const RootSystemData& rs, const Weight& lambda, bool compact_only, bool simplify,
                                     std::size_t cap) {
  check_lambda(rs, lambda);
  const Weight rho = half_sum_rho(rs);
  LaurentPolynomial num(rs.rank());
  for (const auto& w : weyl_group(rs, compact_only, cap))
    num += LaurentPolynomial::monomial(w.apply(lambda) - rho, w.sign);
  const auto x = CharacterFraction::over_binomials(num, negated(positive_roots(rs)));
  return simplify ? frac_simplify(x) : x;
}

FixedPointScenario flag_scenario(const RootSystemData& rs, const Weight& lambda, std::size_t cap) {
  check_lambda(rs, lambda);
  const Weight shift = lambda - half_sum_rho(rs);
  const auto positive = positive_roots(rs);
  std::vector<FixedPointDatum> points;
  const auto group = weyl_group(rs, true, cap);
  for (std::size_t i = 0; i < group.size(); ++i) {
    FixedPointDatum p;
    p.name = "w" + std::to_string(i);
    for (const auto& a : positive) p.tangent_weights.push_back(group[i].apply(a));
    p.bundle = LaurentPolynomial::monomial(group[i].apply(shift));
    points.push_back(std::move(p));
  }
  return FixedPointScenario(rs.rank(), OperatorKind::Dolbeault, std::move(points));
}

std::complex<double> numeric_character(const RootSystemData& rs, const Weight& lambda, bool compact_only,
                                       const TorusElement& g, const EvalOptions& opts) {
  if (g.is_generic()) throw Error(ErrorCode::GenericNotEvaluable, "numeric character needs a concrete element");
  for (const auto& a : rs.roots())
    if (is_singular(g, a, opts))
      throw Error(ErrorCode::SingularElement, "g = " + g.to_string() + " is singular for root " + a.to_string());
  return frac_eval(character_weyl_sum(rs, lambda, compact_only), g, opts);
}

DiscreteSeriesCharacter discrete_series_character(const RootSystemData& rs, const Weight& lambda,
                                                  long long dim_g_over_k) {
  if (dim_g_over_k < 0 || dim_g_over_k % 2 != 0)
    throw Error(ErrorCode::InvalidRootSystem, "dim G/K must be a nonnegative even integer");
  const int sign = (dim_g_over_k / 2) % 2 == 0 ? 1 : -1;
  auto sum = character_weyl_sum(rs, lambda, true);
  auto theta = sign == 1 ? sum : -sum;
  return {std::move(sum), sign, std::move(theta)};
}

Weight random_regular_lambda(std::mt19937_64& rng, const RootSystemData& rs, bool dominant, int bound) {
  const Weight rho = half_sum_rho(rs);
  const auto positive = positive_roots(rs);
  std::uniform_int_distribution<long long> d(dominant ? 0 : -bound, bound);
  for (;;) {
    std::vector<long long> v(rs.rank());
    for (auto& x : v) x = d(rng);
    const Weight lambda = Weight(std::move(v)) + rho;
    bool ok = true;
    for (const auto& a : positive) {
      const long long s = dot(a, lambda).first;
      ok = ok && s != 0 && (!dominant || s > 0);
    }
    if (ok) return lambda;
  }
}

RootSystemData root_system_from_json(const nlohmann::json& j) {
  const std::size_t rank = header_rank(j);
  reject_unknown_keys(j, {"rank", "lattice_denominator", "roots", "compact_roots", "regular_vector"}, "root system");
  const long long d = header_denominator(j);
  auto list = [&](const char* key) {
    std::vector<Weight> out;
    const auto& arr = j.at(key);
    if (!arr.is_array()) throw Error(ErrorCode::ParseError, std::string(key) + ": expected a list");
    for (std::size_t i = 0; i < arr.size(); ++i)
      out.push_back(weight_from_json(arr[i], rank, d, std::string(key) + "[" + std::to_string(i) + "]"));
    return out;
  };
  if (!j.contains("roots")) throw Error(ErrorCode::ParseError, "root system: missing 'roots'");
  if (!j.contains("regular_vector")) throw Error(ErrorCode::ParseError, "root system: missing 'regular_vector'");
  auto roots = list("roots");
  auto compact = j.contains("compact_roots") ? list("compact_roots") : roots;
  return RootSystemData(rank, std::move(roots), std::move(compact),
                        weight_from_json(j.at("regular_vector"), rank, d, "regular_vector"));
}

nlohmann::json to_json(const RootSystemData& rs) {
  long long d = rs.regular_vector().denominator();
  for (const auto& r : rs.roots()) d = lcm_ll(d, r.denominator());
  auto list = [&](const std::vector<Weight>& ws) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& w : ws) arr.push_back(w.scaled_to(d));
    return arr;
  };
  nlohmann::json out{{"rank", rs.rank()},
                     {"roots", list(rs.roots())},
                     {"compact_roots", list(rs.compact_roots())},
                     {"regular_vector", rs.regular_vector().scaled_to(d)}};
  if (d != 1) out["lattice_denominator"] = d;
  return out;
}

}  // namespace lefschetz
