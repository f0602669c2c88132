#include "tensordeg/rational.hpp"

#include <doctest.h>

#include <random>
#include <sstream>

using tensordeg::BigInt;
using tensordeg::ExactRational;

TEST_CASE("fractions are reduced with a positive denominator") {
  const ExactRational r(BigInt(-6), BigInt(-8));
  CHECK(r.to_string() == "3/4");
  CHECK(ExactRational(BigInt(4), BigInt(-2)).to_string() == "-2/1");
  CHECK(ExactRational(0).to_string() == "0/1");
  CHECK(ExactRational(1).to_string() == "1/1");
  CHECK_THROWS_AS(ExactRational(BigInt(1), BigInt(0)), std::domain_error);
}

TEST_CASE("decimal rendering rounds half to even") {
  CHECK(ExactRational(BigInt(3), BigInt(4)).to_decimal() == "0.750");
  CHECK(ExactRational(BigInt(3), BigInt(32)).to_decimal() == "0.094");
  CHECK(ExactRational(BigInt(13), BigInt(16)).to_decimal() == "0.812"); // 0.8125
  CHECK(ExactRational(BigInt(1), BigInt(16)).to_decimal() == "0.062");  // 0.0625
  CHECK(ExactRational(BigInt(3), BigInt(16)).to_decimal() == "0.188");  // 0.1875
  CHECK(ExactRational(BigInt(-1), BigInt(3)).to_decimal() == "-0.333");
  CHECK(ExactRational(1).to_decimal() == "1.000");
  CHECK(ExactRational(BigInt(1), BigInt(3)).to_decimal(0) == "0");
}

TEST_CASE("parse accepts p/q and plain integers") {
  CHECK(ExactRational::parse("192/2048") == ExactRational(BigInt(3), BigInt(32)));
  CHECK(ExactRational::parse("-5") == ExactRational(-5));
  CHECK_THROWS(ExactRational::parse("1/0"));
  CHECK_THROWS(ExactRational::parse("abc"));
  std::ostringstream os;
  os << ExactRational::parse("10/4");
  CHECK(os.str() == "5/2");
}

TEST_CASE("field axioms on random fractions") {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<std::int64_t> num(-1000, 1000);
  std::uniform_int_distribution<std::int64_t> den(1, 1000);
  auto draw = [&] { return ExactRational(BigInt(num(rng)), BigInt(den(rng))); };
  for (int i = 0; i < 500; ++i) {
    const auto a = draw();
    const auto b = draw();
    const auto c = draw();
    CHECK(a + b == b + a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - b) + b == a);
    if (b != ExactRational(0)) {
      CHECK((a / b) * b == a);
    }
    CHECK(ExactRational::parse(a.to_string()) == a);
    CHECK(((a < b) || (a == b) || (b < a)));
  }
}

TEST_CASE("pow_int is exact past 64 bits") {
  CHECK(tensordeg::pow_int(2, 100).str() == "1267650600228229401496703205376");
  CHECK(tensordeg::pow_int(7, 0) == 1);
}
