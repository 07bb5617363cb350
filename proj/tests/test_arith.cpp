#include <catch2/catch_amalgamated.hpp>

#include "commute/arith.hpp"

using namespace commute;

TEST_CASE("primality over small integers", "[arith]") {
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK_FALSE(is_prime(4));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(91));  // 7 * 13
  CHECK(is_prime(7919));
}

TEST_CASE("prime power decomposition", "[arith]") {
  auto pp = prime_power(8);
  REQUIRE(pp.has_value());
  CHECK(pp->first == 2);
  CHECK(pp->second == 3);

  pp = prime_power(27);
  REQUIRE(pp.has_value());
  CHECK(pp->first == 3);
  CHECK(pp->second == 3);

  pp = prime_power(7);
  REQUIRE(pp.has_value());
  CHECK(pp->first == 7);
  CHECK(pp->second == 1);

  CHECK_FALSE(prime_power(1).has_value());
  CHECK_FALSE(prime_power(12).has_value());
  CHECK_FALSE(prime_power(0).has_value());
}

TEST_CASE("modular exponentiation and multiplicative order", "[arith]") {
  CHECK(pow_mod(2, 10, 1000) == 24);
  CHECK(pow_mod(3, 0, 7) == 1);
  CHECK(multiplicative_order(2, 7) == 3);
  CHECK(multiplicative_order(3, 7) == 6);
  CHECK(multiplicative_order(2, 11) == 10);
  // 2 has order 3 mod 7; 4 = 2^2 has the same order.
  CHECK(multiplicative_order(4, 7) == 3);
}

TEST_CASE("euler phi", "[arith]") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(2) == 1);
  CHECK(euler_phi(9) == 6);
  CHECK(euler_phi(10) == 4);
  CHECK(euler_phi(97) == 96);
}

TEST_CASE("checked arithmetic rejects overflow", "[arith]") {
  CHECK(checked_mul(3, 4) == 12);
  CHECK(checked_pow(2, 10) == 1024);
  CHECK_THROWS_AS(checked_pow(10, 30), Error);
  CHECK_THROWS_AS(checked_mul(1ull << 40, 1ull << 40), Error);
}
