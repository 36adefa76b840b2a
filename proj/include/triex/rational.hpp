#pragma once

#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>

namespace triex {

// Exact rational over int64. Always normalized, denominator positive.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(long long num) : num_(num) {}
  constexpr Rational(long long num, long long den) : num_(num), den_(den) {
    if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const long long g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  constexpr long long num() const { return num_; }
  constexpr long long den() const { return den_; }
  constexpr bool is_integer() const { return den_ == 1; }

  constexpr long long floor() const {
    long long q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
  }

  // "n" when integral, "n/d" otherwise.
  std::string str() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
  }

  // Always "n/d", for machine-readable output.
  std::string frac_str() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend constexpr Rational operator+(const Rational& a, const Rational& b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend constexpr Rational operator-(const Rational& a, const Rational& b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
  }
  friend constexpr Rational operator-(const Rational& a) { return {-a.num_, a.den_}; }
  friend constexpr Rational operator*(const Rational& a, const Rational& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }

  friend constexpr bool operator==(const Rational& a, const Rational& b) = default;
  friend constexpr std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

  constexpr double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

 private:
  long long num_ = 0;
  long long den_ = 1;
};

}  // namespace triex
