#pragma once

#include <cstdint>
#include <vector>

#include "ssav/polyarith.hpp"

namespace ssav {

struct PrimePower {
  std::int64_t prime;
  int exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Primes strictly increasing; the product of prime^exponent is the input.
using Factorization = std::vector<PrimePower>;

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::int64_t n);

/// Trial division. Throws OutOfRange for n < 1.
Factorization factorize(std::int64_t n);

/// Number of distinct prime factors.
int omega(std::int64_t n);

std::int64_t euler_phi(std::int64_t m);

int mobius(std::int64_t n);

/// Every m with phi(m) = k is at most this bound, since phi(n) >= sqrt(n/2).
std::int64_t inverse_phi_bound(std::int64_t k);

/// All m with euler_phi(m) = k, ascending. Scans a cached totient sieve with
/// an OpenMP-parallel filter.
std::vector<std::int64_t> inverse_phi(std::int64_t k);

/// Reference scan: factorizes every candidate independently, one thread.
std::vector<std::int64_t> inverse_phi_serial(std::int64_t k);

/// Least r >= 1 with a^r = 1 mod m. Returns 1 for m = 1; throws NotCoprime
/// when gcd(a, m) > 1.
std::int64_t multiplicative_order(std::int64_t a, std::int64_t m);

/// Legendre symbol (a/p) for an odd prime p.
int legendre(std::int64_t a, std::int64_t p);

// Quadratic characters of (Z/8)^*. Even arguments throw EvenArgument.
int char_eps(std::int64_t a);
int char_two(std::int64_t a);
int char_minus_two(std::int64_t a);

/// p if p = 1 mod 4, -p if p = 3 mod 4.
std::int64_t p_star(std::int64_t p);

/// The m-th cyclotomic polynomial. Results are memoized behind a shared lock.
IntegerPolynomial cyclotomic(std::int64_t m);

}  // namespace ssav
