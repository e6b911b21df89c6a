#include "lefschetz/weight.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace lefschetz {

long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }

long long lcm_ll(long long a, long long b) {
  if (a == 0 || b == 0) return 0;
  return std::lcm(a, b);
}

Weight::Weight(std::vector<long long> numerators, long long denominator)
    : numerators_(std::move(numerators)), denominator_(denominator) {
  if (denominator_ == 0) throw std::invalid_argument("weight denominator must be nonzero");
  if (denominator_ < 0) {
    denominator_ = -denominator_;
    for (auto& e : numerators_) e = -e;
  }
  long long g = denominator_;
  for (long long e : numerators_) g = std::gcd(g, e);
  if (g > 1) {
    denominator_ /= g;
    for (auto& e : numerators_) e /= g;
  }
}

Weight Weight::basis(std::size_t rank, std::size_t axis) {
  std::vector<long long> v(rank, 0);
  v.at(axis) = 1;
  return Weight(std::move(v));
}

bool Weight::is_zero() const noexcept {
  for (long long e : numerators_)
    if (e != 0) return false;
  return true;
}

int Weight::leading_sign() const noexcept {
  for (long long e : numerators_)
    if (e != 0) return e > 0 ? 1 : -1;
  return 0;
}

std::vector<long long> Weight::scaled_to(long long lattice_denominator) const {
  if (lattice_denominator % denominator_ != 0)
    throw std::invalid_argument("lattice denominator does not refine weight " + to_string());
  const long long factor = lattice_denominator / denominator_;
  std::vector<long long> out(numerators_);
  for (auto& e : out) e *= factor;
  return out;
}

Weight Weight::operator-() const {
  std::vector<long long> v(numerators_);
  for (auto& e : v) e = -e;
  return Weight(std::move(v), denominator_);
}

Weight operator+(const Weight& a, const Weight& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("weight rank mismatch");
  const long long d = lcm_ll(a.denominator_, b.denominator_);
  std::vector<long long> v = a.scaled_to(d);
  const auto w = b.scaled_to(d);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += w[i];
  return Weight(std::move(v), d);
}

Weight operator*(long long k, const Weight& w) {
  std::vector<long long> v(w.numerators_);
  for (auto& e : v) e *= k;
  return Weight(std::move(v), w.denominator_);
}

std::string Weight::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < numerators_.size(); ++i) {
    if (i) os << ',';
    os << numerators_[i];
    if (denominator_ != 1) os << '/' << denominator_;
  }
  os << ')';
  return os.str();
}

int dot_sign(const Weight& a, const Weight& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("weight rank mismatch");
  boost::multiprecision::cpp_int s = 0;
  for (std::size_t i = 0; i < a.rank(); ++i)
    s += boost::multiprecision::cpp_int(a[i]) * b[i];
  return s > 0 ? 1 : (s < 0 ? -1 : 0);
}

}  // namespace lefschetz
