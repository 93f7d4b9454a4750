#pragma once

#include <cstdint>
#include <string>

#include "ssav/polyarith.hpp"

namespace ssav {

/// Which quadratic character twists Psi_{2,t}: Plus builds Psi_{2,t} over
/// Q(sqrt 2), Minus builds Psi_{-2,t} over Q(sqrt -2).
enum class TwoSign { Plus, Minus };

/// Monic polynomial E(X) + sqrt(d) * O(X) over Z[sqrt d], where E is supported
/// on even exponents and O on odd exponents. The degree is even.
class QuadraticPolynomial {
 public:
  /// Throws BadArguments when the parity, degree or monic invariants fail.
  QuadraticPolynomial(std::int64_t radicand, IntegerPolynomial rational, IntegerPolynomial radical);

  std::int64_t radicand() const noexcept { return radicand_; }
  int degree() const noexcept { return rational_.degree(); }

  /// Rational coefficient at X^j (zero for odd j).
  BigInt rat(std::size_t j) const { return rational_.coeff(j); }
  /// Multiple of sqrt(d) at X^j (zero for even j).
  BigInt rad(std::size_t j) const { return radical_.coeff(j); }

  const IntegerPolynomial& rational_part() const noexcept { return rational_; }
  const IntegerPolynomial& radical_part() const noexcept { return radical_; }

  /// e.g. "X^4 + s*X^3 + 3*X^2 + s*X + 1 where s^2 = 5".
  std::string to_string() const;

  friend bool operator==(const QuadraticPolynomial& a, const QuadraticPolynomial& b) {
    return a.radicand_ == b.radicand_ && a.rational_ == b.rational_ && a.radical_ == b.radical_;
  }

 private:
  std::int64_t radicand_;
  IntegerPolynomial rational_;
  IntegerPolynomial radical_;
};

/// prod over a in (Z/pt)^* of (X - (a/p) zeta_pt^a), for an odd prime p and
/// odd t >= 1. Radicand p_star(p), degree phi(pt).
QuadraticPolynomial psi(std::int64_t p, std::int64_t t);

/// Psi_{2,t} (Plus) or Psi_{-2,t} (Minus) for odd t >= 1; degree 2 phi(t).
QuadraticPolynomial psi_two(std::int64_t t, TwoSign sign);

/// The other sign variant, psi(-X).
QuadraticPolynomial psi_negate(const QuadraticPolynomial& psi);

/// Product in Z[sqrt d][X]; both factors must share the radicand.
QuadraticPolynomial operator*(const QuadraticPolynomial& a, const QuadraticPolynomial& b);

/// psi(X^k) for odd k (even k would break the parity layout).
QuadraticPolynomial compose_power(const QuadraticPolynomial& psi, unsigned k);

/// psi(X) * psi(-X) = E^2 - d O^2, an integer polynomial.
IntegerPolynomial norm_product(const QuadraticPolynomial& psi);

}  // namespace ssav
