#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace ssav {

using BigInt = mpz_class;

inline BigInt big(std::int64_t v) {
  // mpz_class has no int64_t constructor on every platform.
  return BigInt(std::to_string(v));
}

inline BigInt ipow(const BigInt& base, unsigned long exponent) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

inline bool is_perfect_square(const BigInt& x) {
  return sgn(x) >= 0 && mpz_perfect_square_p(x.get_mpz_t()) != 0;
}

/// Floor square root of a non-negative integer.
inline BigInt isqrt(const BigInt& x) {
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
  return r;
}

inline std::string to_decimal(const BigInt& x) { return x.get_str(10); }

/// Parses an optionally signed decimal integer; throws BadArguments on junk.
BigInt from_decimal(std::string_view text);

bool fits_int64(const BigInt& x);
std::int64_t to_int64(const BigInt& x);

}  // namespace ssav
