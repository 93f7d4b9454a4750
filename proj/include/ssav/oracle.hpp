#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ssav/htclassify.hpp"
#include "ssav/polyarith.hpp"

namespace ssav {

/// True iff P is monic and the coefficient of X^i equals q^{g-i} times the
/// coefficient of X^{2g-i} for all i <= g, with 2g = deg P. Throws OddDegree.
bool is_weil_structured(const IntegerPolynomial& P, const BigInt& q);

/// 2 M^2 with M the largest m such that phi(m) <= 2 deg. Every supersingular
/// polynomial of that degree divides X^{2N} - q^N for some N below it.
std::int64_t default_n_max(int degree);

/// Least N <= n_max with P | X^{2N} - q^N, or nullopt. P monic, nonconstant.
std::optional<std::int64_t> is_supersingular_exact(const IntegerPolynomial& P, const BigInt& q,
                                                   std::int64_t n_max);
std::optional<std::int64_t> is_supersingular_exact(const IntegerPolynomial& P, const BigInt& q);

/// Every monic degree-2g integer polynomial with coefficients c_i = eps q^{g-i}
/// c_{2g-i} (eps = +-1, so X^2 - q is included), |c_{2g-i}| <= C(2g,i) q^{i/2},
/// that is exactly supersingular; ascending under CanonicalLess. q must be a
/// prime power and g in {1, 2}, otherwise BadArguments / UnsupportedDegree.
std::vector<IntegerPolynomial> brute_force_weil(const BigInt& q, int g);
std::vector<IntegerPolynomial> brute_force_weil_serial(const BigInt& q, int g);

/// X - sqrt(q) and X + sqrt(q) when q is a square, otherwise empty.
std::vector<IntegerPolynomial> weil_linear_factors(const BigInt& q);

/// Members of brute_force_weil(q, g) that are not a product of two
/// lower-degree supersingular Weil polynomials.
std::vector<IntegerPolynomial> irreducible_members(const BigInt& q, int g,
                                                   const std::vector<IntegerPolynomial>& members);

/// All complex roots by Aberth iteration. Throws NoConvergence.
std::vector<std::complex<double>> find_roots(const IntegerPolynomial& P);

/// Every root z satisfies | |z| - sqrt(q) | < tol sqrt(q).
bool root_modulus_check(const IntegerPolynomial& P, const BigInt& q, double tol);

struct RecordCheck {
  bool structured = false;     // is_weil_structured(char_poly)
  bool supersingular = false;  // is_supersingular_exact(weil_poly)
  bool modulus = false;        // root_modulus_check(weil_poly)
  bool dimension = false;      // deg(weil_poly) e == 2g and char_poly == weil_poly^e
  std::string error;           // library error raised while checking, if any

  bool ok() const noexcept { return structured && supersingular && modulus && dimension && error.empty(); }
};

std::vector<RecordCheck> verify_records(const std::vector<IsogenyClassRecord>& records, double tol);
std::vector<RecordCheck> verify_records_serial(const std::vector<IsogenyClassRecord>& records, double tol);

}  // namespace ssav
