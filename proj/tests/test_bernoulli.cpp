#include <doctest.h>

#include "stirling/bernoulli.hpp"

using namespace stirling;

namespace {

ExactRational pow_int(long base, unsigned p) {
  ExactRational r(1);
  for (unsigned i = 0; i < p; ++i) r *= base;
  return r;
}

}  // namespace

TEST_CASE("first Bernoulli numbers are the classical list") {
  const long nums[] = {1, -1, 1, 0, -1, 0, 1, 0, -1, 0, 5, 0, -691};
  const long dens[] = {1, 2, 6, 1, 30, 1, 42, 1, 30, 1, 66, 1, 2730};
  for (unsigned k = 0; k <= 12; ++k)
    CHECK(bernoulli_number(k) == ExactRational(nums[k], dens[k]));
}

TEST_CASE("the two B1 conventions differ only at k = 1") {
  CHECK(bernoulli_number(1, B1Convention::minus_half) == ExactRational(-1, 2));
  CHECK(bernoulli_number(1, B1Convention::plus_half) == ExactRational(1, 2));
  for (unsigned k = 0; k <= 24; ++k) {
    if (k == 1) continue;
    CHECK(bernoulli_number(k, B1Convention::minus_half) ==
          bernoulli_number(k, B1Convention::plus_half));
  }
}

TEST_CASE("defining recurrence holds identically") {
  for (unsigned m = 1; m <= 30; ++m) {
    ExactRational s(0);
    for (unsigned j = 0; j <= m; ++j)
      s += binomial(m + 1, j) * bernoulli_number(j);
    CHECK(s == 0);
  }
}

TEST_CASE("odd-index values vanish beyond k = 1") {
  for (unsigned k = 3; k <= 31; k += 2) CHECK(bernoulli_number(k) == 0);
}

TEST_CASE("even-index values alternate in sign") {
  int expected = 1;
  for (unsigned k = 2; k <= 30; k += 2) {
    CHECK(bernoulli_number(k) * expected > 0);
    expected = -expected;
  }
}

TEST_CASE("faulhaber_sum matches closed forms") {
  CHECK(faulhaber_sum(1, 100) == ExactRational(5050));
  CHECK(faulhaber_sum(2, 10) == ExactRational(385));
  CHECK(faulhaber_sum(3, 10) == ExactRational(3025));
}

TEST_CASE("faulhaber_sum equals brute force") {
  for (unsigned p = 1; p <= 6; ++p) {
    for (unsigned long m = 1; m <= 50; m += 7) {
      ExactRational brute(0);
      for (unsigned long k = 1; k <= m; ++k) brute += pow_int(static_cast<long>(k), p);
      CHECK(faulhaber_sum(p, m) == brute);
    }
  }
}
