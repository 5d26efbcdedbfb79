#pragma once

// Exact rational arithmetic on 64-bit integers. Memberships, possibilities and
// pseudo-frequencies are all ratios of small integers; keeping them exact is what
// lets the diff tooling separate rounding artifacts from real conflicts.

#include <cstdint>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

#include "stepfuzz/error.hpp"

namespace stepfuzz {

class rational {
 public:
  rational() = default;
  rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT: implicit by design

  rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw domain_error("rational: zero denominator");
    __int128 n = num;
    __int128 d = den;
    if (d < 0) {
      n = -n;
      d = -d;
    }
    assign_normalized(n, d);
  }

  /// Parses a plain decimal literal ("1", "-0.25", "0.062") into the exact ratio.
  static rational from_decimal(std::string_view text) {
    std::string_view rest = text;
    bool negative = false;
    if (!rest.empty() && (rest.front() == '+' || rest.front() == '-')) {
      negative = rest.front() == '-';
      rest.remove_prefix(1);
    }
    auto digits = [](std::string_view s) {
      for (char c : s)
        if (c < '0' || c > '9') return false;
      return true;
    };
    std::string_view int_part = rest;
    std::string_view frac_part;
    if (auto dot = rest.find('.'); dot != std::string_view::npos) {
      int_part = rest.substr(0, dot);
      frac_part = rest.substr(dot + 1);
    }
    if ((int_part.empty() && frac_part.empty()) || !digits(int_part) || !digits(frac_part))
      throw parse_error("not a decimal literal: \"" + std::string(text) + "\"");
    __int128 num = 0;
    __int128 den = 1;
    for (char c : int_part) num = checked(num * 10 + (c - '0'), text);
    for (char c : frac_part) {
      num = checked(num * 10 + (c - '0'), text);
      den = checked(den * 10, text);
    }
    if (negative) num = -num;
    rational r;
    r.assign_normalized(num, den);
    return r;
  }

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_ == 0; }

  double to_double() const noexcept {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  /// "3/4", or just "3" when the denominator is 1.
  std::string to_string() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
  }

  friend rational operator+(const rational& a, const rational& b) {
    return make(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                static_cast<__int128>(a.den_) * b.den_);
  }
  friend rational operator-(const rational& a, const rational& b) {
    return make(static_cast<__int128>(a.num_) * b.den_ - static_cast<__int128>(b.num_) * a.den_,
                static_cast<__int128>(a.den_) * b.den_);
  }
  friend rational operator*(const rational& a, const rational& b) {
    return make(static_cast<__int128>(a.num_) * b.num_,
                static_cast<__int128>(a.den_) * b.den_);
  }
  friend rational operator/(const rational& a, const rational& b) {
    if (b.num_ == 0) throw domain_error("rational: division by zero");
    return make(static_cast<__int128>(a.num_) * b.den_,
                static_cast<__int128>(a.den_) * b.num_);
  }
  rational operator-() const {
    rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  rational& operator+=(const rational& o) { return *this = *this + o; }
  rational& operator-=(const rational& o) { return *this = *this - o; }
  rational& operator*=(const rational& o) { return *this = *this * o; }
  rational& operator/=(const rational& o) { return *this = *this / o; }

  friend bool operator==(const rational& a, const rational& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator<(const rational& a, const rational& b) noexcept {
    return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
  }
  friend bool operator!=(const rational& a, const rational& b) noexcept { return !(a == b); }
  friend bool operator>(const rational& a, const rational& b) noexcept { return b < a; }
  friend bool operator<=(const rational& a, const rational& b) noexcept { return !(b < a); }
  friend bool operator>=(const rational& a, const rational& b) noexcept { return !(a < b); }

 private:
  static constexpr __int128 kMin = std::numeric_limits<std::int64_t>::min();
  static constexpr __int128 kMax = std::numeric_limits<std::int64_t>::max();

  static __int128 checked(__int128 v, std::string_view origin) {
    if (v > kMax || v < kMin)
      throw std::overflow_error("rational: literal out of range: \"" + std::string(origin) + "\"");
    return v;
  }

  static rational make(__int128 num, __int128 den) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    rational r;
    r.assign_normalized(num, den);
    return r;
  }

  void assign_normalized(__int128 num, __int128 den) {
    __int128 a = num < 0 ? -num : num;
    __int128 b = den;
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    if (a != 0) {
      num /= a;
      den /= a;
    }
    if (num > kMax || num < kMin || den > kMax)
      throw std::overflow_error("rational: value exceeds 64-bit range");
    num_ = static_cast<std::int64_t>(num);
    den_ = static_cast<std::int64_t>(den);
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Renders a non-negative rational to `decimals` places, ties to even.
/// 1/16 -> "0.062" (not "0.063"): the last kept digit stays even on an exact tie.
inline std::string format_decimal_half_even(const rational& value, int decimals) {
  if (decimals < 1) throw domain_error("format_decimal_half_even: decimals must be >= 1");
  if (value < rational(0)) return "-" + format_decimal_half_even(-value, decimals);
  __int128 scale = 1;
  for (int i = 0; i < decimals; ++i) scale *= 10;
  __int128 scaled = static_cast<__int128>(value.num()) * scale;
  __int128 q = scaled / value.den();
  __int128 r = scaled % value.den();
  __int128 twice = 2 * r;
  if (twice > value.den() || (twice == value.den() && (q % 2) != 0)) ++q;
  std::string digits;
  if (q == 0) digits = "0";
  while (q > 0) {
    digits.insert(digits.begin(), static_cast<char>('0' + static_cast<int>(q % 10)));
    q /= 10;
  }
  while (digits.size() < static_cast<std::size_t>(decimals) + 1) digits.insert(digits.begin(), '0');
  digits.insert(digits.size() - decimals, ".");
  return digits;
}

}  // namespace stepfuzz

template <>
struct std::hash<stepfuzz::rational> {
  std::size_t operator()(const stepfuzz::rational& r) const noexcept {
    std::size_t h = std::hash<std::int64_t>{}(r.num());
    return h ^ (std::hash<std::int64_t>{}(r.den()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  }
};
