#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace qmw {

/// Exact rational arithmetic for distances and ball radii.
///
/// Every distance produced by the library is a dyadic rational in [0,1];
/// radii are arbitrary non-negative rationals.  Negative values are
/// representable so that slack witnesses of the form r-s can be reported
/// even when s > r, but constructors used for radii and distances reject
/// them at the call site.
class Ratio {
 public:
  using Backend = boost::multiprecision::cpp_rational;
  using Int = boost::multiprecision::cpp_int;

  Ratio() : value_(0) {}
  explicit Ratio(long long n) : value_(n) {}
  Ratio(long long num, long long den);
  explicit Ratio(Backend v) : value_(std::move(v)) {}

  static Ratio zero() { return Ratio(0); }
  static Ratio one() { return Ratio(1); }

  /// 2^e for any integer e (e may be negative).
  static Ratio pow2(long e);

  /// Parses "p", "p/q" or "2^-k".  Throws Error(ParseError).
  static Ratio parse(const std::string& text);

  Ratio operator+(const Ratio& o) const { return Ratio(Backend(value_ + o.value_)); }
  Ratio operator-(const Ratio& o) const { return Ratio(Backend(value_ - o.value_)); }
  Ratio operator*(const Ratio& o) const { return Ratio(Backend(value_ * o.value_)); }
  Ratio operator/(const Ratio& o) const;

  std::strong_ordering operator<=>(const Ratio& o) const {
    if (value_ < o.value_) return std::strong_ordering::less;
    if (value_ > o.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  bool operator==(const Ratio& o) const { return value_ == o.value_; }

  bool is_zero() const { return value_.is_zero(); }
  bool is_negative() const { return value_ < 0; }
  bool is_integer() const { return denominator(value_) == 1; }

  /// True when the reduced denominator is a power of two.
  bool is_dyadic() const;

  /// If the value is exactly 2^-k with k >= 1, returns k.
  std::optional<unsigned long> pow2_negative_exponent() const;

  /// Smallest integer k with 2^k >= this value.  Requires a positive value.
  long ceil_log2() const;

  Ratio min(const Ratio& o) const { return *this <= o ? *this : o; }
  Ratio max(const Ratio& o) const { return *this >= o ? *this : o; }
  Ratio half() const { return Ratio(Backend(value_ / 2)); }
  Ratio abs() const { return is_negative() ? Ratio(Backend(-value_)) : *this; }

  /// Reduced fraction, "p" when the denominator is 1.
  std::string str() const;

  const Backend& backend() const { return value_; }

 private:
  Backend value_;
};

}  // namespace qmw
