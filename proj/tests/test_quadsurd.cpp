#include <doctest.h>

#include <random>
#include <stdexcept>

#include "circlegap/quadsurd.hpp"

using namespace circlegap;

namespace {

// independent floor oracle: goes through isqrt(5 b^2) only, never through
// QuadSurd::floor's float-guess path or the sign-analysis comparator
BigInt indep_floor(const QuadSurd& x) {
  const BigInt &A = x.a(), &B = x.b(), &C = x.c();
  BigInt fb(0);
  if (!B.is_zero()) {
    BigInt s = isqrt(BigInt(5) * B * B);
    fb = B.sign() > 0 ? s : -(s + BigInt(1));
  }
  BigInt q, r;
  BigInt::divmod(A + fb, C, q, r);
  if (r.is_negative()) q -= BigInt(1);
  return q;
}

QuadSurd random_surd(std::mt19937_64& rng, long long range) {
  std::uniform_int_distribution<long long> dist(-range, range);
  long long c = 0;
  while (c == 0) c = dist(rng);
  return QuadSurd(BigInt(dist(rng)), BigInt(dist(rng)), BigInt(c));
}

}  // namespace

TEST_CASE("canonical form and idempotence") {
  QuadSurd x(BigInt(6), BigInt(2), BigInt(-4));
  CHECK(x.a() == BigInt(-3));
  CHECK(x.b() == BigInt(-1));
  CHECK(x.c() == BigInt(2));
  QuadSurd again(x.a(), x.b(), x.c());
  CHECK(again == x);
  std::mt19937_64 rng(5);
  for (int it = 0; it < 200; ++it) {
    QuadSurd v = random_surd(rng, 500);
    for (long long k : {2LL, -3LL, 7LL})
      CHECK(QuadSurd(v.a() * BigInt(k), v.b() * BigInt(k), v.c() * BigInt(k)) == v);
  }
  CHECK_THROWS_AS(QuadSurd(BigInt(1), BigInt(1), BigInt(0)), std::domain_error);
}

TEST_CASE("golden identities") {
  QuadSurd phi = QuadSurd::phi();
  CHECK(phi * phi == phi + QuadSurd(1));
  CHECK(phi * phi == QuadSurd(BigInt(3), BigInt(1), BigInt(2)));
  QuadSurd one(1);
  CHECK((phi - one) * (phi - one) == QuadSurd(BigInt(3), BigInt(-1), BigInt(2)));
  CHECK(one / phi == phi - one);
  CHECK(one / phi == QuadSurd(BigInt(-1), BigInt(1), BigInt(2)));
  CHECK(QuadSurd::rho() == QuadSurd(1) + QuadSurd(2) / QuadSurd::sqrt5());
}

TEST_CASE("exact comparison") {
  // rho against its 8-digit truncation 1.8944271
  QuadSurd trunc(BigInt(18944271), BigInt(0), BigInt(10000000));
  CHECK(QuadSurd::rho() > trunc);
  CHECK(QuadSurd::phi() == QuadSurd::phi());
  QuadSurd eta7(BigInt(3), BigInt(-1), BigInt(2));   // 0.381...
  QuadSurd eta2(BigInt(7), BigInt(-1), BigInt(22));  // 0.216...
  CHECK(eta7 > eta2);
  // mixed-sign coefficient cases around the boundary
  CHECK(QuadSurd(BigInt(9), BigInt(-4), BigInt(1)).sign() > 0);    // 9 > 4 sqrt5
  CHECK(QuadSurd(BigInt(-9), BigInt(4), BigInt(1)).sign() < 0);
  CHECK(QuadSurd(BigInt(8), BigInt(-4), BigInt(1)).sign() < 0);    // 8 < 4 sqrt5
  CHECK(QuadSurd(BigInt(-8), BigInt(4), BigInt(1)).sign() > 0);
}

TEST_CASE("floor and ceil reference points") {
  CHECK(QuadSurd::phi().floor() == BigInt(1));
  CHECK(QuadSurd::rho().ceil() == BigInt(2));
  // eta_1 * 100 = (1300 + 100 sqrt5)/82 = 18.58...
  QuadSurd eta1(BigInt(13), BigInt(1), BigInt(82));
  CHECK((eta1 * QuadSurd(100)).floor() == BigInt(18));
  CHECK(QuadSurd(BigInt(-1), BigInt(1), BigInt(2)).floor() == BigInt(0));  // 1/phi
  CHECK((-QuadSurd::phi()).floor() == BigInt(-2));
  CHECK((-QuadSurd::phi()).ceil() == BigInt(-1));
  CHECK(QuadSurd(7).floor() == BigInt(7));
  CHECK(QuadSurd(7).ceil() == BigInt(7));
}

TEST_CASE("floor/ceil round trip on 1000 random values, exact comparisons") {
  std::mt19937_64 rng(20240502);
  for (int it = 0; it < 1000; ++it) {
    QuadSurd x = random_surd(rng, 1000000);
    BigInt f = x.floor(), c = x.ceil();
    CHECK(QuadSurd(f) <= x);
    CHECK(x < QuadSurd(f + BigInt(1)));
    CHECK(QuadSurd(c - BigInt(1)) < x);
    CHECK(x <= QuadSurd(c));
    CHECK(f == indep_floor(x));
  }
}

TEST_CASE("order consistency: transitive and agrees with 100-digit evaluation") {
  std::mt19937_64 rng(20240503);
  BigInt scale = BigInt::pow10(100);
  auto key = [&](const QuadSurd& v) { return indep_floor(v * QuadSurd(scale)); };
  for (int it = 0; it < 300; ++it) {
    QuadSurd x = random_surd(rng, 100000), y = random_surd(rng, 100000),
             z = random_surd(rng, 100000);
    BigInt kx = key(x), ky = key(y), kz = key(z);
    if (!(kx == ky)) CHECK((x < y) == (kx < ky));
    if (!(ky == kz)) CHECK((y < z) == (ky < kz));
    if (!(kx == kz)) CHECK((x < z) == (kx < kz));
    // transitivity
    if (x < y && y < z) CHECK(x < z);
    if (z < y && y < x) CHECK(z < x);
  }
}

TEST_CASE("decimal rendering, round-half-even") {
  QuadSurd eta7(BigInt(3), BigInt(-1), BigInt(2));
  CHECK(eta7.decimal(10) == "0.3819660113");
  CHECK(eta7.decimal(3) == "0.382");
  CHECK(QuadSurd::phi().decimal(10) == "1.6180339887");
  CHECK(QuadSurd::rho().decimal(10) == "1.8944271910");
  CHECK(QuadSurd::sqrt5().decimal(10) == "2.2360679775");
  CHECK(QuadSurd(BigInt(13), BigInt(1), BigInt(82)).decimal(10) == "0.1858057070");
  // exact rational ties go to even
  CHECK(QuadSurd(BigInt(1), BigInt(0), BigInt(8)).decimal(2) == "0.12");
  CHECK(QuadSurd(BigInt(3), BigInt(0), BigInt(8)).decimal(2) == "0.38");
  CHECK((-QuadSurd(BigInt(1), BigInt(0), BigInt(8))).decimal(2) == "-0.12");
  CHECK(QuadSurd(BigInt(5), BigInt(0), BigInt(4)).decimal(0) == "1");
  CHECK(QuadSurd(BigInt(0), BigInt(0), BigInt(1)).decimal(4) == "0.0000");
  // digits=0 rounding of 2.6 -> 3
  CHECK(QuadSurd(BigInt(13), BigInt(0), BigInt(5)).decimal(0) == "3");
}

TEST_CASE("decimal agrees with the independent scaled floor on random values") {
  std::mt19937_64 rng(20240504);
  for (int it = 0; it < 200; ++it) {
    QuadSurd x = random_surd(rng, 100000);
    if (x.sign() < 0) x = -x;
    std::string s = x.decimal(25);
    // parse the rendering back to an integer in units of 10^-25
    std::string digits_only;
    for (char ch : s)
      if (ch != '.') digits_only.push_back(ch);
    BigInt rendered(digits_only);
    BigInt twice = rendered * BigInt(2);
    // |2*(x*10^25) - 2*rendered| <= 1 exactly
    QuadSurd scaled2 = x * QuadSurd(BigInt::pow10(25)) * QuadSurd(2);
    CHECK(QuadSurd(twice - BigInt(1)) <= scaled2);
    CHECK(scaled2 <= QuadSurd(twice + BigInt(1)));
  }
}

TEST_CASE("arithmetic consistency: inverse, conjugate, division") {
  std::mt19937_64 rng(20240505);
  for (int it = 0; it < 300; ++it) {
    QuadSurd x = random_surd(rng, 10000);
    if (x.is_zero()) continue;
    CHECK(x * x.inverse() == QuadSurd(1));
    CHECK(x + x.conjugate() == QuadSurd(x.a() * BigInt(2), BigInt(0), x.c()));
    QuadSurd y = random_surd(rng, 10000);
    if (!y.is_zero()) CHECK((x / y) * y == x);
  }
  CHECK_THROWS_AS(QuadSurd(0).inverse(), std::domain_error);
  CHECK_THROWS_AS(QuadSurd(1) / QuadSurd(0), std::domain_error);
}

TEST_CASE("json triple") {
  QuadSurd eta6(BigInt(25), BigInt(-1), BigInt(62));
  CHECK(eta6.json() == "{\"a\": \"25\", \"b\": \"-1\", \"c\": \"62\"}");
}
