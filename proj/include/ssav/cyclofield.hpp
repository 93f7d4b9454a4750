#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "ssav/polyarith.hpp"

namespace ssav {

/// Exact element of Z[zeta_N], stored as its residue modulo Phi_N. The
/// canonical generator zeta_N is the residue of X. Elements at different
/// levels only meet through `embed`.
class CyclotomicElement {
 public:
  /// Reduces `rep` modulo Phi_level.
  CyclotomicElement(std::int64_t level, const IntegerPolynomial& rep);

  static CyclotomicElement integer(std::int64_t level, const BigInt& value);

  /// Reduces an element written in Z[X]/(X^N - 1), i.e. sum_k coeffs[k] zeta_N^k.
  static CyclotomicElement from_cyclic(std::int64_t level, std::span<const BigInt> coeffs);

  std::int64_t level() const noexcept { return level_; }
  const IntegerPolynomial& rep() const noexcept { return rep_; }

  /// The value when the element is a rational integer.
  std::optional<BigInt> as_integer() const;

  CyclotomicElement& operator+=(const CyclotomicElement& rhs);
  CyclotomicElement& operator-=(const CyclotomicElement& rhs);
  CyclotomicElement& operator*=(const CyclotomicElement& rhs);

  friend bool operator==(const CyclotomicElement& a, const CyclotomicElement& b) {
    return a.level_ == b.level_ && a.rep_ == b.rep_;
  }

 private:
  CyclotomicElement(std::int64_t level, IntegerPolynomial rep, bool reduced);

  std::int64_t level_;
  IntegerPolynomial rep_;
};

CyclotomicElement operator+(CyclotomicElement a, const CyclotomicElement& b);
CyclotomicElement operator-(CyclotomicElement a, const CyclotomicElement& b);
CyclotomicElement operator-(const CyclotomicElement& a);
CyclotomicElement operator*(CyclotomicElement a, const CyclotomicElement& b);

/// zeta_N^k; negative k allowed.
CyclotomicElement zeta_power(std::int64_t level, std::int64_t k);

/// The same algebraic number at level M, via zeta_N -> zeta_M^{M/N}.
CyclotomicElement embed(const CyclotomicElement& a, std::int64_t level);

/// sum_a (a/p) zeta_p^a at level p; squares to p_star(p).
CyclotomicElement gauss_sum(std::int64_t p);

/// zeta_8 + zeta_8^{-1}, squaring to 2.
CyclotomicElement sqrt_two_elem();
/// zeta_8 + zeta_8^3, squaring to -2.
CyclotomicElement sqrt_minus_two_elem();

struct QuadraticCoordinates {
  BigInt rat;
  BigInt rad;

  friend bool operator==(const QuadraticCoordinates& a, const QuadraticCoordinates& b) {
    return a.rat == b.rat && a.rad == b.rad;
  }
};

/// Writes a = rat + rad * root with integers rat, rad. `root` must square to
/// a rational integer and share the level of `a`. Throws
/// NotInQuadraticSubring when no integer pair reproduces `a`.
QuadraticCoordinates descend_quadratic(const CyclotomicElement& a, const CyclotomicElement& root);

}  // namespace ssav
