#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "commute/errors.hpp"

namespace commute {

// Deterministic trial-division primality test; exact for all 64-bit inputs
// we ever pass (group parameters are small).
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (std::uint64_t f = 5; f * f <= n; f += 6) {
    if (n % f == 0 || n % (f + 2) == 0) return false;
  }
  return true;
}

inline std::uint64_t smallest_prime_factor(std::uint64_t n) {
  if (n < 2) throw ConstraintError("smallest_prime_factor requires n >= 2");
  if (n % 2 == 0) return 2;
  if (n % 3 == 0) return 3;
  for (std::uint64_t f = 5; f * f <= n; f += 6) {
    if (n % f == 0) return f;
    if (n % (f + 2) == 0) return f + 2;
  }
  return n;
}

// If n == p^k for a prime p and k >= 1, returns {p, k}; otherwise nullopt.
inline std::optional<std::pair<std::uint64_t, std::uint32_t>> prime_power(
    std::uint64_t n) {
  if (n < 2) return std::nullopt;
  std::uint64_t p = smallest_prime_factor(n);
  std::uint32_t k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  if (n != 1) return std::nullopt;
  return std::make_pair(p, k);
}

// base^exp with overflow detection.
inline std::uint64_t checked_pow(std::uint64_t base, std::uint32_t exp) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < exp; ++i) {
    if (base != 0 && r > UINT64_MAX / base) {
      throw ConstraintError("integer overflow in exponentiation");
    }
    r *= base;
  }
  return r;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) {
    throw ConstraintError("integer overflow in multiplication");
  }
  return a * b;
}

// Modular exponentiation (mod must fit in 32 bits so products stay in 64).
inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp,
                             std::uint64_t mod) {
  if (mod == 0) throw ConstraintError("pow_mod requires mod >= 1");
  std::uint64_t r = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) r = (r * base) % mod;
    base = (base * base) % mod;
    exp >>= 1;
  }
  return r;
}

// Multiplicative order of a modulo m (requires gcd(a, m) == 1).
inline std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m) {
  if (m < 2) throw ConstraintError("multiplicative_order requires m >= 2");
  std::uint64_t x = a % m;
  if (x == 0) throw ConstraintError("multiplicative_order requires a coprime to m");
  std::uint64_t ord = 1;
  std::uint64_t cur = x;
  while (cur != 1) {
    cur = (cur * x) % m;
    ++ord;
    if (ord > m) {
      throw ConstraintError("multiplicative_order: a is not coprime to m");
    }
  }
  return ord;
}

inline std::uint64_t euler_phi(std::uint64_t n) {
  if (n == 0) throw ConstraintError("euler_phi requires n >= 1");
  std::uint64_t result = n;
  std::uint64_t m = n;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

}  // namespace commute
