#include "lefschetz/laurent.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "lefschetz/error.hpp"

namespace lefschetz {

namespace {

// Graded lexicographic order on nonnegative exponent vectors, descending.
struct GrlexGreater {
  bool operator()(const std::vector<long long>& a, const std::vector<long long>& b) const {
    const long long da = std::accumulate(a.begin(), a.end(), 0LL);
    const long long db = std::accumulate(b.begin(), b.end(), 0LL);
    if (da != db) return da > db;
    return a > b;
  }
};

std::string exponent_text(long long num, long long den) {
  const long long g = std::gcd(num, den);
  num /= g;
  den /= g;
  if (den == 1) return std::to_string(num);
  return "(" + std::to_string(num) + "/" + std::to_string(den) + ")";
}

std::string monomial_text(const std::vector<long long>& e, long long den) {
  if (e.size() == 1) return "t^" + exponent_text(e[0], den);
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += "t" + std::to_string(i + 1) + "^" + exponent_text(e[i], den);
  }
  return out;
}

bool all_zero(const std::vector<long long>& e) {
  return std::all_of(e.begin(), e.end(), [](long long x) { return x == 0; });
}

}  // namespace

LaurentPolynomial::LaurentPolynomial(std::size_t rank, long long lattice_denominator, TermMap terms)
    : rank_(rank), denominator_(lattice_denominator), terms_(std::move(terms)) {
  if (denominator_ < 1) throw Error(ErrorCode::ParseError, "lattice denominator must be >= 1");
  for (const auto& [e, c] : terms_)
    if (e.size() != rank_)
      throw Error(ErrorCode::RankMismatch, "term exponent length differs from rank " + std::to_string(rank_));
  canonicalize();
}

LaurentPolynomial LaurentPolynomial::constant(std::size_t rank, const Integer& c) {
  TermMap t;
  t.emplace(Exponent(rank, 0), c);
  return LaurentPolynomial(rank, 1, std::move(t));
}

LaurentPolynomial LaurentPolynomial::monomial(const Weight& w, const Integer& c) {
  TermMap t;
  t.emplace(w.scaled_to(w.denominator()), c);
  return LaurentPolynomial(w.rank(), w.denominator(), std::move(t));
}

LaurentPolynomial LaurentPolynomial::one_minus(const Weight& w) {
  return constant(w.rank(), 1) - monomial(w);
}

void LaurentPolynomial::canonicalize() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == 0)
      it = terms_.erase(it);
    else
      ++it;
  }
  if (terms_.empty()) {
    denominator_ = 1;
    return;
  }
  long long g = denominator_;
  for (const auto& [e, c] : terms_)
    for (long long x : e) g = std::gcd(g, x);
  if (g > 1) {
    TermMap reduced;
    for (auto& [e, c] : terms_) {
      Exponent r(e);
      for (auto& x : r) x /= g;
      reduced.emplace(std::move(r), std::move(c));
    }
    terms_ = std::move(reduced);
    denominator_ /= g;
  }
}

void LaurentPolynomial::require_rank(const LaurentPolynomial& other) const {
  if (rank_ != other.rank_)
    throw Error(ErrorCode::RankMismatch,
                "rank " + std::to_string(rank_) + " vs rank " + std::to_string(other.rank_));
}

bool LaurentPolynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && all_zero(terms_.begin()->first));
}

Integer LaurentPolynomial::coefficient(const Weight& w) const {
  if (w.rank() != rank_) throw Error(ErrorCode::RankMismatch, "weight rank differs from polynomial rank");
  const long long d = lcm_ll(denominator_, w.denominator());
  if (d != denominator_) return 0;  // w is not in this polynomial's lattice
  auto it = terms_.find(w.scaled_to(d));
  return it == terms_.end() ? Integer(0) : it->second;
}

std::vector<std::pair<Weight, Integer>> LaurentPolynomial::weighted_terms() const {
  std::vector<std::pair<Weight, Integer>> out;
  out.reserve(terms_.size());
  for (const auto& [e, c] : terms_) out.emplace_back(Weight(e, denominator_), c);
  return out;
}

Integer LaurentPolynomial::coefficient_sum() const {
  Integer s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

LaurentPolynomial::TermMap LaurentPolynomial::refined_terms(long long lattice_denominator) const {
  if (lattice_denominator % denominator_ != 0)
    throw Error(ErrorCode::RankMismatch, "lattice denominator does not refine polynomial lattice");
  const long long f = lattice_denominator / denominator_;
  if (f == 1) return terms_;
  TermMap out;
  for (const auto& [e, c] : terms_) {
    Exponent r(e);
    for (auto& x : r) x *= f;
    out.emplace(std::move(r), c);
  }
  return out;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial r(*this);
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
  require_rank(other);
  const long long d = lcm_ll(denominator_, other.denominator_);
  if (d != denominator_) {
    terms_ = refined_terms(d);
    denominator_ = d;
  }
  const long long f = d / other.denominator_;
  for (const auto& [e, c] : other.terms_) {
    if (f == 1) {
      terms_[e] += c;
    } else {
      Exponent r(e);
      for (auto& x : r) x *= f;
      terms_[r] += c;
    }
  }
  canonicalize();
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& other) { return *this += -other; }

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& other) {
  *this = *this * other;
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  a.require_rank(b);
  const long long d = lcm_ll(a.denominator_, b.denominator_);
  const auto ta = a.refined_terms(d);
  const auto tb = b.refined_terms(d);
  LaurentPolynomial::TermMap out;
  LaurentPolynomial::Exponent e(a.rank_);
  for (const auto& [ea, ca] : ta) {
    for (const auto& [eb, cb] : tb) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out[e] += ca * cb;
    }
  }
  return LaurentPolynomial(a.rank_, d, std::move(out));
}

LaurentPolynomial operator*(const Integer& c, const LaurentPolynomial& p) {
  LaurentPolynomial r(p);
  for (auto& [e, x] : r.terms_) x *= c;
  r.canonicalize();
  return r;
}

LaurentPolynomial LaurentPolynomial::shifted(const Weight& w) const {
  if (w.rank() != rank_) throw Error(ErrorCode::RankMismatch, "shift weight rank differs from polynomial rank");
  const long long d = lcm_ll(denominator_, w.denominator());
  const auto s = w.scaled_to(d);
  TermMap out;
  for (const auto& [key, c] : refined_terms(d)) {
    Exponent e(key);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += s[i];
    out.emplace(std::move(e), c);
  }
  return LaurentPolynomial(rank_, d, std::move(out));
}

LaurentPolynomial LaurentPolynomial::inverted() const {
  TermMap out;
  for (const auto& [key, c] : terms_) {
    Exponent e(key);
    for (auto& x : e) x = -x;
    out.emplace(std::move(e), c);
  }
  return LaurentPolynomial(rank_, denominator_, std::move(out));
}

LaurentPolynomial LaurentPolynomial::map_weights(const std::function<Weight(const Weight&)>& f) const {
  LaurentPolynomial out(rank_);
  for (const auto& [w, c] : weighted_terms()) out += monomial(f(w), c);
  return out;
}

std::string LaurentPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0;
    const Integer mag = negative ? Integer(-c) : c;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    if (all_zero(e)) {
      os << mag;
    } else {
      if (mag != 1) os << mag << '*';
      os << monomial_text(e, denominator_);
    }
  }
  return os.str();
}

std::string format_monomial(const Weight& w) {
  if (w.is_zero()) return "1";
  return monomial_text(w.scaled_to(w.denominator()), w.denominator());
}

std::optional<LaurentPolynomial> try_divide_by_one_minus(const LaurentPolynomial& p, const Weight& alpha) {
  if (alpha.is_zero()) throw Error(ErrorCode::ZeroWeight, "binomial 1 - t^0 is not a valid divisor");
  if (alpha.rank() != p.rank()) throw Error(ErrorCode::RankMismatch, "divisor rank differs from dividend rank");
  const std::size_t n = p.rank();
  if (p.is_zero()) return LaurentPolynomial(n);

  const long long d = lcm_ll(p.lattice_denominator(), alpha.denominator());
  const auto a = alpha.scaled_to(d);

  // Translate everything into the ordinary polynomial ring. The divisor
  // t^{a-} - t^{a+} has coprime monomials, so divisibility in the Laurent
  // ring coincides with divisibility in the polynomial ring.
  std::vector<long long> a_minus(n), a_plus(n), shift(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    a_minus[i] = std::max(-a[i], 0LL);
    a_plus[i] = std::max(a[i], 0LL);
  }
  auto terms = p.refined_terms(d);
  for (const auto& [e, c] : terms)
    for (std::size_t i = 0; i < n; ++i) shift[i] = std::max(shift[i], -e[i]);

  std::map<std::vector<long long>, Integer, GrlexGreater> work;
  for (auto& [e, c] : terms) {
    std::vector<long long> s(e);
    for (std::size_t i = 0; i < n; ++i) s[i] += shift[i];
    work.emplace(std::move(s), std::move(c));
  }

  const GrlexGreater greater;
  const bool minus_leads = greater(a_minus, a_plus);
  const std::vector<long long>& lead = minus_leads ? a_minus : a_plus;
  const std::vector<long long>& tail = minus_leads ? a_plus : a_minus;
  // divisor = lead_sign * t^lead - lead_sign * t^tail
  const int lead_sign = minus_leads ? 1 : -1;

  LaurentPolynomial::TermMap quotient;
  std::vector<long long> q_exp(n), t_exp(n);
  while (!work.empty()) {
    auto it = work.begin();
    const auto& m = it->first;
    for (std::size_t i = 0; i < n; ++i) {
      if (m[i] < lead[i]) return std::nullopt;  // leading term lands in the remainder
      q_exp[i] = m[i] - lead[i];
    }
    const Integer q = lead_sign > 0 ? it->second : Integer(-it->second);
    work.erase(it);
    for (std::size_t i = 0; i < n; ++i) t_exp[i] = q_exp[i] + tail[i];
    // subtract q * t^q_exp * (-lead_sign) * t^tail
    auto& slot = work[t_exp];
    if (lead_sign > 0)
      slot += q;
    else
      slot -= q;
    if (slot == 0) work.erase(t_exp);
    quotient.emplace(q_exp, q);
  }

  // p = t^{a- - shift} * quotient * (1 - t^a)
  LaurentPolynomial::TermMap out;
  for (auto& [e, c] : quotient) {
    std::vector<long long> r(e);
    for (std::size_t i = 0; i < n; ++i) r[i] += a_minus[i] - shift[i];
    out.emplace(std::move(r), std::move(c));
  }
  return LaurentPolynomial(n, d, std::move(out));
}

}  // namespace lefschetz
