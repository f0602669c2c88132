#include "tensordeg/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace tensordeg {

namespace mp = boost::multiprecision;

ExactRational::ExactRational(std::int64_t value) : value_(value) {}

ExactRational::ExactRational(BigInt numerator, BigInt denominator) {
  if (denominator == 0) {
    throw std::domain_error("ExactRational: zero denominator");
  }
  // Boost 1.74 rejects a negative denominator outright.
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  value_ = mp::cpp_rational(std::move(numerator), std::move(denominator));
}

ExactRational::ExactRational(mp::cpp_rational value) : value_(std::move(value)) {}

BigInt ExactRational::numerator() const { return mp::numerator(value_); }
BigInt ExactRational::denominator() const { return mp::denominator(value_); }

std::string ExactRational::to_string() const {
  return numerator().str() + "/" + denominator().str();
}

std::string ExactRational::to_decimal(int places) const {
  if (places < 0) {
    throw std::invalid_argument("to_decimal: negative place count");
  }
  BigInt num = numerator();
  const BigInt den = denominator();
  const bool negative = num < 0;
  if (negative) {
    num = -num;
  }
  const BigInt scale = pow_int(10, static_cast<unsigned>(places));
  BigInt scaled = num * scale;
  BigInt q = scaled / den;
  const BigInt r = scaled % den;
  // round half to even
  const BigInt twice = 2 * r;
  if (twice > den || (twice == den && (q % 2) == 1)) {
    ++q;
  }
  std::string digits = q.str();
  if (places > 0) {
    if (digits.size() <= static_cast<std::size_t>(places)) {
      digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
    }
    digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
  }
  if (negative && q != 0) {
    digits.insert(0, "-");
  }
  return digits;
}

ExactRational ExactRational::parse(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return {BigInt(text), BigInt(1)};
    }
    return {BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1))};
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("not a fraction: '" + text + "'");
  }
}

ExactRational operator+(const ExactRational& a, const ExactRational& b) {
  return ExactRational(mp::cpp_rational(a.value_ + b.value_));
}
ExactRational operator-(const ExactRational& a, const ExactRational& b) {
  return ExactRational(mp::cpp_rational(a.value_ - b.value_));
}
ExactRational operator*(const ExactRational& a, const ExactRational& b) {
  return ExactRational(mp::cpp_rational(a.value_ * b.value_));
}
ExactRational operator/(const ExactRational& a, const ExactRational& b) {
  if (b.value_ == 0) {
    throw std::domain_error("ExactRational: division by zero");
  }
  return ExactRational(mp::cpp_rational(a.value_ / b.value_));
}

ExactRational& ExactRational::operator+=(const ExactRational& other) { return *this = *this + other; }
ExactRational& ExactRational::operator-=(const ExactRational& other) { return *this = *this - other; }
ExactRational& ExactRational::operator*=(const ExactRational& other) { return *this = *this * other; }
ExactRational& ExactRational::operator/=(const ExactRational& other) { return *this = *this / other; }

ExactRational ExactRational::operator-() const { return ExactRational(mp::cpp_rational(-value_)); }

bool operator==(const ExactRational& a, const ExactRational& b) { return a.value_ == b.value_; }

std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
  if (a.value_ < b.value_) {
    return std::strong_ordering::less;
  }
  if (a.value_ > b.value_) {
    return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const ExactRational& value) {
  return os << value.to_string();
}

BigInt pow_int(std::uint64_t base, unsigned exponent) {
  return mp::pow(BigInt(base), exponent);
}

} // namespace tensordeg
