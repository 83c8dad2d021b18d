#include <doctest.h>

#include <cmath>

#include "caresim/rng.hpp"

using namespace caresim;

TEST_CASE("identical stream triples reproduce the same sequence") {
  RandomStream a(42, 3, 17), b(42, 3, 17);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("changing any component of the triple changes the stream") {
  RandomStream base(42, 3, 17), seed(43, 3, 17), stream(42, 4, 17), rep(42, 3, 18);
  CHECK(base.next_u64() != seed.next_u64());
  RandomStream base2(42, 3, 17);
  base2.next_u64();
  CHECK(base2.next_u64() != stream.next_u64());
  RandomStream base3(42, 3, 17);
  CHECK(base3.next_u64() != rep.next_u64());
}

TEST_CASE("uniform01 stays in [0,1) and is centered") {
  RandomStream s(1, 1, 0);
  const int n = 100000;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const double u = s.uniform01();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    sum += u;
  }
  // 3 standard errors of the mean of U(0,1).
  const double se = 1.0 / std::sqrt(12.0 * n);
  CHECK(std::abs(sum / n - 0.5) < 3.0 * se);
}

TEST_CASE("uniform(a,b) covers its range") {
  RandomStream s(1, 2, 0);
  double lo = 1e9, hi = -1e9;
  for (int i = 0; i < 10000; ++i) {
    const double x = s.uniform(4.0, 10.0);
    REQUIRE(x >= 4.0);
    REQUIRE(x < 10.0);
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  CHECK(lo < 4.1);
  CHECK(hi > 9.9);
}

TEST_CASE("exponential sample mean matches 1/rate within 2%") {
  RandomStream s(1, 3, 0);
  const double rate = 5.0;
  const int n = 100000;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = s.exponential(rate);
    REQUIRE(x > 0.0);
    sum += x;
  }
  CHECK(sum / n == doctest::Approx(1.0 / rate).epsilon(0.02));
}
