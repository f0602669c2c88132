#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace tensordeg {

using BigInt = boost::multiprecision::cpp_int;

/// Reduced fraction with arbitrary-precision numerator and denominator.
///
/// Every degree value and every theorem bound is carried as an ExactRational;
/// comparisons are exact. The denominator is always positive and
/// gcd(numerator, denominator) == 1.
class ExactRational {
public:
  ExactRational() = default;
  ExactRational(std::int64_t value); // NOLINT(google-explicit-constructor)
  ExactRational(BigInt numerator, BigInt denominator);

  [[nodiscard]] BigInt numerator() const;
  [[nodiscard]] BigInt denominator() const;

  /// "p/q", always with the denominator, always reduced ("1/1", "0/1").
  [[nodiscard]] std::string to_string() const;

  /// Fixed-point rendering with round-half-even, e.g. "0.094".
  [[nodiscard]] std::string to_decimal(int places = 3) const;

  /// Parses "p/q" or "p".
  static ExactRational parse(const std::string& text);

  friend ExactRational operator+(const ExactRational& a, const ExactRational& b);
  friend ExactRational operator-(const ExactRational& a, const ExactRational& b);
  friend ExactRational operator*(const ExactRational& a, const ExactRational& b);
  friend ExactRational operator/(const ExactRational& a, const ExactRational& b);
  ExactRational& operator+=(const ExactRational& other);
  ExactRational& operator-=(const ExactRational& other);
  ExactRational& operator*=(const ExactRational& other);
  ExactRational& operator/=(const ExactRational& other);
  ExactRational operator-() const;

  friend bool operator==(const ExactRational& a, const ExactRational& b);
  friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b);

private:
  explicit ExactRational(boost::multiprecision::cpp_rational value);
  boost::multiprecision::cpp_rational value_{0};
};

std::ostream& operator<<(std::ostream& os, const ExactRational& value);

/// base^exponent as an exact integer.
BigInt pow_int(std::uint64_t base, unsigned exponent);

} // namespace tensordeg
