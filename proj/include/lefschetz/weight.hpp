#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace lefschetz {

long long gcd_ll(long long a, long long b);
long long lcm_ll(long long a, long long b);

/// A character exponent of a rank-n torus, living in the refined lattice
/// (1/D)Z^n. Stored as integer numerators over a common denominator D >= 1,
/// always reduced so that equal weights compare equal structurally.
class Weight {
 public:
  Weight() = default;
  Weight(std::initializer_list<long long> entries) : Weight(std::vector<long long>(entries)) {}
  explicit Weight(std::vector<long long> numerators, long long denominator = 1);

  static Weight zero(std::size_t rank) { return Weight(std::vector<long long>(rank, 0)); }
  static Weight basis(std::size_t rank, std::size_t axis);

  std::size_t rank() const noexcept { return numerators_.size(); }
  long long denominator() const noexcept { return denominator_; }
  std::span<const long long> numerators() const noexcept { return numerators_; }
  long long operator[](std::size_t i) const { return numerators_[i]; }

  bool is_zero() const noexcept;
  bool is_integral() const noexcept { return denominator_ == 1; }
  /// Sign of the first nonzero entry; 0 for the zero weight.
  int leading_sign() const noexcept;

  /// Integer coordinates relative to the lattice (1/D)Z^n. D must be a
  /// multiple of denominator().
  std::vector<long long> scaled_to(long long lattice_denominator) const;

  Weight operator-() const;
  friend Weight operator+(const Weight& a, const Weight& b);
  friend Weight operator-(const Weight& a, const Weight& b) { return a + (-b); }
  friend Weight operator*(long long k, const Weight& w);

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;

  std::string to_string() const;

 private:
  std::vector<long long> numerators_;
  long long denominator_ = 1;
};

/// Sign of the standard dot product (a, b).
int dot_sign(const Weight& a, const Weight& b);

}  // namespace lefschetz
