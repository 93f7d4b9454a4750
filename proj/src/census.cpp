#include "ssav/census.hpp"

#include <numeric>
#include <string>

#include "ssav/errors.hpp"
#include "ssav/htclassify.hpp"
#include "ssav/numthy.hpp"
#include "ssav/weilmin.hpp"

namespace ssav {

namespace {

bool no_totient_preimage(int g) {
  return inverse_phi(g).empty() && inverse_phi(2 * static_cast<std::int64_t>(g)).empty();
}

std::int64_t smallest_prime_not_dividing(std::int64_t m) {
  for (std::int64_t p = 2;; ++p) {
    if (is_prime(p) && m % p != 0) return p;
  }
}

// Some odd-exponent field carries a class of dimension g: the minimal
// polynomial of sqrt(q') zeta_4t has degree 2g, or is X^2 - q at g = 2.
bool has_odd_witness(int g) {
  if (g == 2) return true;
  const auto g64 = static_cast<std::int64_t>(g);
  for (std::int64_t k : {2 * g64, 4 * g64}) {
    for (std::int64_t m : inverse_phi(k)) {
      if (m % 4 != 0) continue;
      const std::int64_t t = m / 4;
      std::vector<std::int64_t> primes{2, smallest_prime_not_dividing(m)};
      for (const auto& pp : factorize(t)) primes.push_back(pp.prime);
      for (std::int64_t p : primes) {
        for (Sign s : {Sign::Plus, Sign::Minus}) {
          const auto mp = minimal_poly_odd(FieldParameters(p, 1, s), t);
          if (mp.polys.front().degree() == 2 * g) return true;
        }
      }
    }
  }
  return false;
}

}  // namespace

std::int64_t count(std::int64_t p, int n, int g) { return static_cast<std::int64_t>(enumerate(p, n, g).size()); }

std::int64_t paper_count_even(std::int64_t p, int g) {
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  if (g < 1) throw OutOfRange("dimension g must be >= 1");
  const std::int64_t two_g = 2 * static_cast<std::int64_t>(g);
  if (std::gcd(p, two_g) > 1) {
    throw NotCoprime("p = " + std::to_string(p) + " divides 2g = " + std::to_string(two_g));
  }
  const auto a_2g = static_cast<std::int64_t>(inverse_phi(two_g).size());
  const auto a_g = static_cast<std::int64_t>(inverse_phi(g).size());
  const std::int64_t o_2g = multiplicative_order(p, two_g) % 2;
  const std::int64_t o_g = multiplicative_order(p, g) % 2;
  return a_2g * (o_2g + 1) + a_g * o_g;
}

std::int64_t paper_bound_odd(int g) {
  if (g < 3) throw OutOfRange("paper_bound_odd needs g > 2");
  const auto preimage = inverse_phi(2 * static_cast<std::int64_t>(g));
  const std::int64_t factor = g % 2 == 1 ? 2 : 0;  // (-1)^{g+1} + 1
  std::int64_t omega_sum = 0;
  for (std::int64_t m : preimage) omega_sum += omega(m);
  return factor * static_cast<std::int64_t>(preimage.size()) + 2 * omega_sum;
}

std::string_view to_string(Existence e) {
  switch (e) {
    case Existence::Exists: return "Exists";
    case Existence::NotExists: return "NotExists";
    case Existence::ExistsEvenOnlyUnknownOdd: return "ExistsEvenOnlyUnknownOdd";
  }
  return "?";
}

Existence exists_dimension(int g) {
  if (g < 1) throw OutOfRange("dimension g must be >= 1");
  if (g <= 2) return Existence::Exists;
  if (no_totient_preimage(g)) return Existence::NotExists;
  return has_odd_witness(g) ? Existence::Exists : Existence::ExistsEvenOnlyUnknownOdd;
}

std::vector<int> gap_dimensions(int max_g) {
  if (max_g < 3) return {};
  // Warm the shared totient cache once so the parallel lookups only read it.
  (void)inverse_phi(2 * static_cast<std::int64_t>(max_g));
  std::vector<char> gap(static_cast<std::size_t>(max_g) + 1, 0);
#pragma omp parallel for schedule(dynamic)
  for (int g = 3; g <= max_g; ++g) gap[static_cast<std::size_t>(g)] = no_totient_preimage(g) ? 1 : 0;
  std::vector<int> out;
  for (int g = 3; g <= max_g; ++g) {
    if (gap[static_cast<std::size_t>(g)]) out.push_back(g);
  }
  return out;
}

std::vector<int> gap_dimensions_serial(int max_g) {
  std::vector<int> out;
  for (int g = 3; g <= max_g; ++g) {
    if (inverse_phi_serial(g).empty() && inverse_phi_serial(2 * static_cast<std::int64_t>(g)).empty()) {
      out.push_back(g);
    }
  }
  return out;
}

bool sophie_germain_gap(std::int64_t p) {
  if (p <= 2 || !is_prime(p)) throw BadArguments("sophie_germain_gap needs an odd prime");
  return !is_prime(2 * p + 1);
}

std::vector<EvenComparisonRow> even_comparison_table(std::int64_t max_p, int max_g) {
  std::vector<EvenComparisonRow> rows;
  for (std::int64_t p = 2; p <= max_p; ++p) {
    if (!is_prime(p)) continue;
    for (int g = 2; g <= max_g; ++g) {
      EvenComparisonRow row{p, g, false, 0, count(p, 2, g)};
      try {
        row.formula = paper_count_even(p, g);
        row.formula_defined = true;
      } catch (const NotCoprime&) {
      }
      rows.push_back(row);
    }
  }
  return rows;
}

std::vector<OddBoundRow> odd_bound_table(std::int64_t max_p, const std::vector<int>& odd_exponents, int max_g) {
  std::vector<OddBoundRow> rows;
  for (std::int64_t p = 2; p <= max_p; ++p) {
    if (!is_prime(p)) continue;
    for (int n : odd_exponents) {
      if (n % 2 == 0) throw BadArguments("odd_bound_table needs odd exponents");
      for (int g = 3; g <= max_g; ++g) rows.push_back({p, n, g, paper_bound_odd(g), count(p, n, g)});
    }
  }
  return rows;
}

}  // namespace ssav
