#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "ssav/polyarith.hpp"
#include "ssav/weilmin.hpp"

namespace ssav {

/// Which of the two conjugate half-cyclotomic polynomials a record uses;
/// None for a single (normal or even-exponent) minimal polynomial.
enum class SignVariant { A, B, None };

std::string_view to_string(SignVariant v);

struct Multiplicity {
  std::int64_t r;
  int e;  // 1 when r is even, 2 when r is odd
};

/// Local-invariant order r of Phi_m^{[sqrt q]} at p, and the resulting e.
Multiplicity multiplicity_even(std::int64_t p, std::int64_t m);

/// One isogeny class of simple supersingular abelian varieties.
/// deg(weil_poly) * e == 2 * g and char_poly == weil_poly^e.
struct IsogenyClassRecord {
  FieldParameters field;
  int g;
  CaseTag case_tag;
  std::int64_t param;  // t for odd n, m for even n
  SignVariant sign_variant;
  IntegerPolynomial weil_poly;
  int e;
  IntegerPolynomial char_poly;
};

// Every enumerate* call rejects g < 1 with OutOfRange. Output is sorted by
// char_poly under CanonicalLess and holds each weil_poly once.

std::vector<IsogenyClassRecord> enumerate_even(std::int64_t p, int n, int g);

/// Both signed values +-p^n; duplicates keep the smallest (sign, t, variant).
std::vector<IsogenyClassRecord> enumerate_odd(std::int64_t p, int n, int g);

/// Dispatch on the parity of n. Throws NotPrime.
std::vector<IsogenyClassRecord> enumerate(std::int64_t p, int n, int g);

/// Same result as enumerate, with candidates visited on one thread in order.
std::vector<IsogenyClassRecord> enumerate_serial(std::int64_t p, int n, int g);

}  // namespace ssav
