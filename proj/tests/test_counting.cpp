#include <doctest.h>

#include <cstdint>
#include <stdexcept>
#include <string>

#include "kreweras/counting.hpp"

using namespace kreweras;

TEST_CASE("binomial coefficients") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(10, 10) == 1);
  CHECK(binomial(10, 0) == 1);
  CHECK(binomial(4, 5) == 0);
  CHECK(binomial(-1, 0) == 0);
  CHECK(binomial(5, -2) == 0);
  CHECK(binomial(60, 30) == BigInt("118264581564861424"));
  CHECK(binomial(100, 50) == BigInt("100891344545564193334812497256"));
}

TEST_CASE("closed forms match the reference tables") {
  const std::int64_t origin[] = {1, 2, 16, 192, 2816, 46592};
  for (std::int64_t n = 0; n <= 5; ++n) {
    CHECK(count(CountKind::kreweras_origin, n) == origin[n]);
    CHECK(count(CountKind::depth_map, n) == origin[n]);
  }
  const std::int64_t excursions[] = {1, 4, 48, 768, 14080};
  for (std::int64_t n = 0; n <= 4; ++n) CHECK(count(CountKind::excursion, n) == excursions[n]);
  const std::int64_t projected[] = {1, 1, 3, 12, 55};
  for (std::int64_t n = 0; n <= 4; ++n) CHECK(count(CountKind::projected, n) == projected[n]);
  const std::int64_t cubic[] = {1, 1, 4, 24};
  for (std::int64_t n = 0; n <= 3; ++n) CHECK(count(CountKind::cubic, n) == cubic[n]);

  CHECK(count(CountKind::kreweras_to, 0, 1) == 1);
  CHECK(count(CountKind::kreweras_to, 0, 2) == 2);
  CHECK(count(CountKind::kreweras_to, 1, 1) == 8);
  CHECK(count(CountKind::kreweras_to, 2, 1) == 96);
  CHECK(count(CountKind::near_cubic_to, 0, 1) == 1);
  CHECK(count(CountKind::near_cubic_to, 0, 2) == 2);
  CHECK(count(CountKind::near_cubic_to, 1, 1) == 4);
  CHECK(count(CountKind::near_cubic_to, 2, 1) == 24);
}

TEST_CASE("closed-form identities across the families") {
  for (std::int64_t n = 0; n <= 8; ++n) {
    const BigInt walks = count(CountKind::kreweras_origin, n);
    const BigInt excursions = count(CountKind::excursion, n);
    const BigInt projected = count(CountKind::projected, n);
    const BigInt decorated = count(CountKind::depth_map, n);
    const BigInt bare_cubic = count(CountKind::cubic, n);
    const BigInt four_n = BigInt(1) << (2 * n);
    const BigInt two_n = BigInt(1) << n;
    CHECK(excursions == four_n * projected);
    CHECK(excursions == decorated * (n + 1));
    CHECK(walks == decorated);
    CHECK(decorated == bare_cubic * two_n);
  }
  for (std::int64_t n = 0; n <= 5; ++n) {
    CHECK(count(CountKind::kreweras_to, n, 0) == count(CountKind::kreweras_origin, n));
    for (std::int64_t i = 0; i <= 3; ++i) {
      CHECK(count(CountKind::kreweras_to, n, i) ==
            (BigInt(1) << n) * count(CountKind::near_cubic_to, n, i));
    }
  }
}

TEST_CASE("size-zero boundary counts are the ballot numbers") {
  for (std::int64_t i = 0; i <= 10; ++i) {
    const BigInt catalan = binomial(2 * i, i) - binomial(2 * i, i + 1);
    CHECK(count(CountKind::kreweras_to, 0, i) == catalan);
    CHECK(count(CountKind::near_cubic_to, 0, i) == catalan);
  }
}

TEST_CASE("count argument validation") {
  CHECK_THROWS_AS(count(CountKind::kreweras_to, 2), std::invalid_argument);
  CHECK_THROWS_AS(count(CountKind::near_cubic_to, 2), std::invalid_argument);
  CHECK_THROWS_AS(count(CountKind::excursion, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(count(CountKind::kreweras_origin, -1), std::invalid_argument);
  CHECK_THROWS_AS(count(CountKind::kreweras_to, 2, -1), std::invalid_argument);
}

TEST_CASE("count kind names round-trip") {
  for (CountKind kind :
       {CountKind::kreweras_origin, CountKind::excursion, CountKind::projected,
        CountKind::cubic, CountKind::depth_map, CountKind::kreweras_to,
        CountKind::near_cubic_to}) {
    const auto parsed = count_kind_from_string(to_string(kind));
    REQUIRE(parsed.has_value());
    CHECK(*parsed == kind);
  }
  CHECK_FALSE(count_kind_from_string("triangulations").has_value());
}
