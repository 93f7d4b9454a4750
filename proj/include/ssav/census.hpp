#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace ssav {

/// Number of isogeny classes of simple supersingular abelian varieties of
/// dimension g over F_{p^n}, by enumeration.
std::int64_t count(std::int64_t p, int n, int g);

/// The closed-form even-exponent count A(2g)(o(p,2g)+1) + A(g) o(p,g), with
/// A(k) = |phi^{-1}(k)| and o(p,k) the parity of ord_k(p). Comparison only;
/// throws NotCoprime when gcd(p, 2g) > 1.
std::int64_t paper_count_even(std::int64_t p, int g);

/// ((-1)^{g+1} + 1) A(2g) + 2 sum over m in phi^{-1}(2g) of omega(m), for g > 2.
std::int64_t paper_bound_odd(int g);

enum class Existence {
  Exists,
  NotExists,
  /// Some even-exponent field has a class; no odd-exponent witness is known.
  ExistsEvenOnlyUnknownOdd,
};

std::string_view to_string(Existence e);

/// NotExists iff phi^{-1}(g) and phi^{-1}(2g) are both empty. Exists needs an
/// even-exponent class and a classified odd-exponent one.
Existence exists_dimension(int g);

/// All g in [3, max_g] with exists_dimension(g) == NotExists, ascending.
std::vector<int> gap_dimensions(int max_g);
std::vector<int> gap_dimensions_serial(int max_g);

/// True iff 2p + 1 is composite, for an odd prime p.
bool sophie_germain_gap(std::int64_t p);

struct EvenComparisonRow {
  std::int64_t p;
  int g;
  bool formula_defined;
  std::int64_t formula;  // meaningful only when formula_defined
  std::int64_t enumerated;  // count at n = 2
};

/// paper_count_even against enumeration for every prime p <= max_p and
/// g in [2, max_g]; undefined formula cells are marked, not thrown.
std::vector<EvenComparisonRow> even_comparison_table(std::int64_t max_p, int max_g);

struct OddBoundRow {
  std::int64_t p;
  int n;
  int g;
  std::int64_t bound;
  std::int64_t enumerated;
  bool holds() const noexcept { return enumerated <= bound; }
};

/// paper_bound_odd(g) against count(p, n, g) for primes p <= max_p, the given
/// odd exponents and g in [3, max_g].
std::vector<OddBoundRow> odd_bound_table(std::int64_t max_p, const std::vector<int>& odd_exponents, int max_g);

}  // namespace ssav
