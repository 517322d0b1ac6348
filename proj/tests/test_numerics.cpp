#include <doctest.h>

#include <random>

#include "stirling/extfloat.hpp"
#include "stirling/rational.hpp"

using namespace stirling;

TEST_CASE("binomial and factorial basics") {
  CHECK(binomial(5, 2) == ExactRational(10));
  CHECK(binomial(19, 18) == ExactRational(19));
  CHECK(binomial(3, 5) == ExactRational(0));
  CHECK(binomial(0, 0) == ExactRational(1));
  CHECK(factorial_int(0) == 1);
  CHECK(factorial_int(10) == 3628800);
}

TEST_CASE("pow_rational handles negative exponents") {
  CHECK(pow_rational(ExactRational(2, 3), 3) == ExactRational(8, 27));
  CHECK(pow_rational(ExactRational(2, 3), -2) == ExactRational(9, 4));
  CHECK(pow_rational(ExactRational(5), 0) == ExactRational(1));
  CHECK(pow_rational(ExactRational(-1, 2), 3) == ExactRational(-1, 8));
  CHECK_THROWS_AS(pow_rational(ExactRational(0), -1), std::domain_error);
}

TEST_CASE("parse_rational accepts fractions, integers, decimals") {
  CHECK(parse_rational("7/360") == ExactRational(7, 360));
  CHECK(parse_rational("-14/28") == ExactRational(-1, 2));
  CHECK(parse_rational("42") == ExactRational(42));
  CHECK(parse_rational("0.25") == ExactRational(1, 4));
  CHECK(parse_rational("-1.5") == ExactRational(-3, 2));
  CHECK_THROWS_AS(parse_rational("x/y"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("."), std::invalid_argument);
  CHECK(to_string(ExactRational(-31, 1260)) == "-31/1260");
}

TEST_CASE("rational field laws on random operands") {
  std::mt19937_64 rng(20240817u);
  std::uniform_int_distribution<long long> num(-1000000000LL, 1000000000LL);
  std::uniform_int_distribution<long long> den(1, 1000000000LL);
  const auto draw = [&] {
    ExactRational q(ExactInteger(static_cast<long>(num(rng))),
                    ExactInteger(static_cast<long>(den(rng))));
    q.canonicalize();
    return q;
  };
  for (int i = 0; i < 200; ++i) {
    const ExactRational a = draw(), b = draw(), c = draw();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == 0);
    if (a != 0) CHECK(a / a == 1);
  }
}

TEST_CASE("ExtFloat construction and precision tracking") {
  const ExtFloat x = ExtFloat::of(ExactRational(1, 3), 30);
  CHECK(x.digits() == 30);
  CHECK(to_decimal_string(x, 10) == "0.3333333333");
  CHECK((ExtFloat::of(1, 10) + ExtFloat::pi(40)).digits() == 40);
  CHECK(ExtFloat(20).is_zero());
  CHECK(ExtFloat::of(-5, 20).sign() == -1);
  CHECK(ExtFloat::of(0, 20).sign() == 0);
}

TEST_CASE("decimal output rounds half to even") {
  CHECK(to_decimal_string(ExtFloat::parse("0.125", 30), 2) == "0.12");
  CHECK(to_decimal_string(ExtFloat::parse("0.875", 30), 2) == "0.88");
  CHECK(to_decimal_string(ExtFloat::parse("-0.125", 30), 2) == "-0.12");
  CHECK(to_decimal_string(ExtFloat::parse("1.5", 30), 1) == "1.5");
}

TEST_CASE("decimal output refuses uncertified places") {
  CHECK_THROWS_AS(to_decimal_string(ExtFloat::of(1, 20), 30), insufficient_precision);
}

TEST_CASE("parse and reformat round-trips a table entry") {
  const ExtFloat v = ExtFloat::parse("6.55976303287679", 40);
  CHECK(to_decimal_string(v, 14) == "6.55976303287679");
}

TEST_CASE("reference constants at doubled precision agree") {
  CHECK(to_decimal_string(ExtFloat::pi(40), 20) == "3.14159265358979323846");
  const std::string c30 = to_decimal_string(ln_sqrt_2pi(30), 20);
  const std::string c60 = to_decimal_string(ln_sqrt_2pi(60), 20);
  CHECK(c30 == "0.91893853320467274178");
  CHECK(c30 == c60);
}

TEST_CASE("elementary functions invert") {
  const ExtFloat x = ExtFloat::parse("2.718281828", 40);
  const ExtFloat back = exp_ext(ln_ext(x));
  CHECK(to_decimal_string(back, 25) == to_decimal_string(x, 25));
  CHECK(to_decimal_string(sqrt_ext(ExtFloat::of(2, 40)), 20) == "1.41421356237309504880");
  CHECK(to_decimal_string(pow_int_ext(ExtFloat::of(ExactRational(1, 2), 30), 5), 10) ==
        "0.0312500000");
  CHECK_THROWS_AS(ln_ext(ExtFloat::of(-1, 20)), std::domain_error);
}
