#include <algorithm>
#include <iterator>
#include <numeric>

#include "doctest.h"
#include "ssav/census.hpp"
#include "ssav/errors.hpp"
#include "ssav/numthy.hpp"

using namespace ssav;

namespace {

// The printed gap list for g <= 100, primes and composites merged.
const std::vector<int> kPrintedGaps = {7,  13, 17, 19, 25, 27, 31, 34, 37, 38, 43, 45, 47, 57, 61,
                                       62, 63, 67, 71, 73, 76, 77, 79, 85, 87, 91, 93, 94, 95, 97};

}  // namespace

TEST_CASE("counts") {
  CHECK(count(2, 2, 1) == 5);
  CHECK(count(3, 1, 3) == 2);
  for (std::int64_t p : {2, 3, 5, 7}) {
    for (int n : {1, 2}) CHECK(count(p, n, 7) == 0);
  }
}

TEST_CASE("closed-form even count") {
  CHECK_THROWS_AS(paper_count_even(2, 3), NotCoprime);
  CHECK_THROWS_AS(paper_count_even(3, 3), NotCoprime);
  // |phi^-1(8)| = 5 with ord_8(5) = 2 even, |phi^-1(4)| = 4 with ord_4(5) = 1 odd.
  CHECK(paper_count_even(5, 4) == 5 * 1 + 4 * 1);
  CHECK(paper_count_even(7, 2) == static_cast<std::int64_t>(inverse_phi(4).size()) * (0 + 1) +
                                      static_cast<std::int64_t>(inverse_phi(2).size()) * 1);
}

TEST_CASE("closed-form odd bound") {
  CHECK(paper_bound_odd(3) == 20);
  CHECK(paper_bound_odd(5) == 10);
  CHECK(paper_bound_odd(7) == 0);
  CHECK_THROWS_AS(paper_bound_odd(2), OutOfRange);
  for (std::int64_t p : {2, 3, 5, 7, 11, 13}) {
    for (int n : {1, 3}) {
      for (int g = 3; g <= 6; ++g) CHECK(count(p, n, g) <= paper_bound_odd(g));
    }
  }
}

TEST_CASE("even counts stay within the totient-preimage bound") {
  for (std::int64_t p : {2, 3, 5, 7, 11, 13}) {
    for (int g = 1; g <= 6; ++g) {
      const auto bound = inverse_phi(2 * g).size() + inverse_phi(g).size();
      CHECK(count(p, 2, g) <= static_cast<std::int64_t>(bound));
    }
  }
}

TEST_CASE("existence verdicts") {
  CHECK(exists_dimension(7) == Existence::NotExists);
  CHECK(exists_dimension(4) == Existence::Exists);
  CHECK(exists_dimension(25) == Existence::NotExists);
  CHECK(exists_dimension(1) == Existence::Exists);
  CHECK(exists_dimension(2) == Existence::Exists);
  CHECK(exists_dimension(5) == Existence::Exists);
  CHECK_THROWS_AS(exists_dimension(0), OutOfRange);
  // Every Exists verdict at small g is witnessed by an actual enumeration.
  for (int g = 1; g <= 12; ++g) {
    const auto v = exists_dimension(g);
    bool odd_witness = false;
    bool even_witness = false;
    for (std::int64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43}) {
      odd_witness = odd_witness || count(p, 1, g) > 0;
      even_witness = even_witness || count(p, 2, g) > 0;
    }
    if (v == Existence::NotExists) {
      CHECK_FALSE(odd_witness);
      CHECK_FALSE(even_witness);
    }
    if (v == Existence::Exists) {
      CHECK(odd_witness);
      CHECK(even_witness);
    }
  }
}

TEST_CASE("gap dimensions") {
  CHECK(gap_dimensions(10) == std::vector<int>{7});
  CHECK(gap_dimensions(3).empty());
  CHECK(gap_dimensions(2).empty());
  const auto gaps = gap_dimensions(100);
  CHECK(gaps == gap_dimensions_serial(100));
  for (int g : gaps) {
    CHECK(inverse_phi(g).empty());
    CHECK(inverse_phi(2 * g).empty());
    for (std::int64_t p : {2, 3, 5, 7}) {
      for (int n : {1, 2}) {
        if (g <= 30) CHECK(count(p, n, g) == 0);
      }
    }
  }
}

TEST_CASE("the printed gap list disagrees with its own criterion in five places") {
  const auto gaps = gap_dimensions(100);
  std::vector<int> only_printed;
  std::vector<int> only_computed;
  std::set_difference(kPrintedGaps.begin(), kPrintedGaps.end(), gaps.begin(), gaps.end(), std::back_inserter(only_printed));
  std::set_difference(gaps.begin(), gaps.end(), kPrintedGaps.begin(), kPrintedGaps.end(), std::back_inserter(only_computed));
  CHECK(only_printed == std::vector<int>{27, 63, 95});
  CHECK(only_computed == std::vector<int>{49, 59});
  // Witnesses: phi(81) = 54, phi(127) = 126, phi(191) = 190.
  CHECK(euler_phi(81) == 54);
  CHECK(euler_phi(127) == 126);
  CHECK(euler_phi(191) == 190);
  // 59 is prime with 2 * 59 + 1 = 119 = 7 * 17, so the corollary makes it a gap.
  CHECK(sophie_germain_gap(59));
}

TEST_CASE("Sophie Germain corollary") {
  CHECK(sophie_germain_gap(7));
  CHECK_FALSE(sophie_germain_gap(5));
  CHECK(sophie_germain_gap(13));
  CHECK_THROWS_AS(sophie_germain_gap(2), BadArguments);
  CHECK_THROWS_AS(sophie_germain_gap(9), BadArguments);
  for (std::int64_t p = 3; p <= 100; ++p) {
    if (!is_prime(p) || !sophie_germain_gap(p)) continue;
    CHECK(exists_dimension(static_cast<int>(p)) == Existence::NotExists);
  }
}

TEST_CASE("comparison tables") {
  const auto even = even_comparison_table(13, 6);
  CHECK(even.size() == 6 * 5);
  for (const auto& row : even) {
    CHECK(row.formula_defined == (std::gcd(row.p, 2 * static_cast<std::int64_t>(row.g)) == 1));
    CHECK(row.enumerated == count(row.p, 2, row.g));
  }
  const auto odd = odd_bound_table(13, {1, 3}, 6);
  CHECK(odd.size() == 6 * 2 * 4);
  for (const auto& row : odd) CHECK(row.holds());
  CHECK_THROWS_AS(odd_bound_table(13, {2}, 6), BadArguments);
}
