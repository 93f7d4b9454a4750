#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "ssav/bigint.hpp"

namespace ssav {

/// Dense univariate polynomial over Z. Coefficients are stored in ascending
/// degree order and the leading entry is never zero; the zero polynomial is
/// the empty sequence.
class IntegerPolynomial {
 public:
  IntegerPolynomial() = default;
  explicit IntegerPolynomial(std::vector<BigInt> coeffs);
  IntegerPolynomial(std::initializer_list<long> coeffs);

  static IntegerPolynomial constant(const BigInt& c);
  static IntegerPolynomial monomial(const BigInt& c, std::size_t k);

  bool is_zero() const noexcept { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  /// Coefficient of X^i; zero beyond the degree.
  BigInt coeff(std::size_t i) const;
  const BigInt& leading() const;
  std::span<const BigInt> coeffs() const noexcept { return c_; }

  bool is_monic() const;
  /// True when every nonzero coefficient sits at an even exponent.
  bool is_even() const;

  BigInt evaluate(const BigInt& x) const;

  /// Descending-power rendering, e.g. "X^4 - 2*X^2 + 9".
  std::string to_string() const;
  /// Ascending coefficients as decimal strings (the machine form).
  std::vector<std::string> to_decimal_strings() const;
  static IntegerPolynomial from_decimal_strings(std::span<const std::string> coeffs);

  IntegerPolynomial& operator+=(const IntegerPolynomial& rhs);
  IntegerPolynomial& operator-=(const IntegerPolynomial& rhs);
  IntegerPolynomial& operator*=(const IntegerPolynomial& rhs);
  IntegerPolynomial& operator*=(const BigInt& scalar);

  friend bool operator==(const IntegerPolynomial& a, const IntegerPolynomial& b);

 private:
  void normalize();

  std::vector<BigInt> c_;
};

IntegerPolynomial operator+(IntegerPolynomial a, const IntegerPolynomial& b);
IntegerPolynomial operator-(IntegerPolynomial a, const IntegerPolynomial& b);
IntegerPolynomial operator-(IntegerPolynomial a);
IntegerPolynomial operator*(const IntegerPolynomial& a, const IntegerPolynomial& b);
IntegerPolynomial operator*(const BigInt& scalar, IntegerPolynomial f);

std::ostream& operator<<(std::ostream& os, const IntegerPolynomial& f);

/// Orders by degree, then ascending coefficient sequence.
struct CanonicalLess {
  bool operator()(const IntegerPolynomial& a, const IntegerPolynomial& b) const;
};

/// Exact quotient f / g. Throws DivisionByZero for g = 0 and InexactDivision
/// when a leading-coefficient step or the final remainder is not exact.
IntegerPolynomial divexact(const IntegerPolynomial& f, const IntegerPolynomial& g);

/// Remainder of f modulo a monic polynomial.
IntegerPolynomial remainder_monic(const IntegerPolynomial& f, const IntegerPolynomial& modulus);

/// f(X^k), k >= 1.
IntegerPolynomial compose_power(const IntegerPolynomial& f, unsigned k);

/// f(-X).
IntegerPolynomial negate_variable(const IntegerPolynomial& f);

/// X^exponent mod modulus by square-and-multiply; modulus monic of degree >= 1.
IntegerPolynomial x_pow_mod(std::uint64_t exponent, const IntegerPolynomial& modulus);

IntegerPolynomial pow(const IntegerPolynomial& f, unsigned exponent);

}  // namespace ssav
