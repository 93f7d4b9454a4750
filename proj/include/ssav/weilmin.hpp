#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "ssav/polyarith.hpp"
#include "ssav/psipoly.hpp"

namespace ssav {

enum class Sign { Plus, Minus };

/// F_q with q = p^n. For odd n, `sign` selects the signed value q' = +-p^n
/// that parametrizes theta = sqrt(q') zeta_4t; it is ignored for even n.
class FieldParameters {
 public:
  /// Throws NotPrime for composite p and OutOfRange for n < 1.
  FieldParameters(std::int64_t p, int n, Sign sign = Sign::Plus);

  std::int64_t p() const noexcept { return p_; }
  int n() const noexcept { return n_; }
  Sign sign() const noexcept { return sign_; }
  const BigInt& q() const noexcept { return q_; }
  BigInt signed_q() const { return sign_ == Sign::Plus ? q_ : BigInt(-q_); }

  FieldParameters with_sign(Sign s) const { return FieldParameters(p_, n_, s); }

  friend bool operator==(const FieldParameters& a, const FieldParameters& b) {
    return a.p_ == b.p_ && a.n_ == b.n_ && a.sign_ == b.sign_;
  }

 private:
  std::int64_t p_;
  int n_;
  Sign sign_;
  BigInt q_;
};

enum class CaseTag { Normal, ExcOddP, ExcTwoPlus, ExcTwoMinus, RealOdd, EvenCyclotomic, EvenReal };

std::string_view to_string(CaseTag tag);
std::string_view to_string(Sign sign);

/// f^{[sqrt s]}: the coefficient of X^j becomes c_j * s^{(deg f - j)/2}.
/// Needs s a perfect square, or f even with even degree; otherwise throws
/// NonIntegralScaling.
IntegerPolynomial scale_sqrt(const IntegerPolynomial& f, const BigInt& s);

/// psi^{[sqrt s]} for a half-cyclotomic polynomial; d*s must be a positive
/// perfect square (d the radicand), and its positive root is used.
IntegerPolynomial scale_quad(const QuadraticPolynomial& psi, const BigInt& s);

/// Normal or exceptional dichotomy for theta = sqrt(q') zeta_4t, q' the signed q.
CaseTag classify_odd(const FieldParameters& fp, std::int64_t t);

struct OddMinimalPolynomial {
  CaseTag tag;
  /// One polynomial in the normal case; the two sign variants otherwise.
  std::vector<IntegerPolynomial> polys;
};

/// Minimal polynomial(s) of sqrt(q') zeta_4t for odd n.
OddMinimalPolynomial minimal_poly_odd(const FieldParameters& fp, std::int64_t t);

/// Phi_m^{[sqrt q]} for even n.
IntegerPolynomial minimal_poly_even(const FieldParameters& fp, std::int64_t m);

}  // namespace ssav
