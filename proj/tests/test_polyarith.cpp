#include <random>

#include "doctest.h"
#include "ssav/errors.hpp"
#include "ssav/polyarith.hpp"

using namespace ssav;

namespace {

IntegerPolynomial random_poly(std::mt19937_64& rng, int max_degree, long range) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<long> coeff(-range, range);
  std::vector<BigInt> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : c) x = big(coeff(rng));
  return IntegerPolynomial(std::move(c));
}

// Schoolbook evaluation at an integer point, the reference for every identity.
BigInt eval(const IntegerPolynomial& f, long x) {
  BigInt acc = 0;
  BigInt power = 1;
  for (const auto& c : f.coeffs()) {
    acc += c * power;
    power *= x;
  }
  return acc;
}

}  // namespace

TEST_CASE("normalization drops leading zeros") {
  IntegerPolynomial f({BigInt(1), BigInt(2), BigInt(0), BigInt(0)});
  CHECK(f.degree() == 1);
  CHECK(IntegerPolynomial({0L, 0L}).is_zero());
  CHECK(IntegerPolynomial().degree() == -1);
  CHECK(f.coeff(7) == 0);
}

TEST_CASE("rendering") {
  CHECK(IntegerPolynomial({9, 0, -2, 0, 1}).to_string() == "X^4 - 2*X^2 + 9");
  CHECK(IntegerPolynomial({-1, 1}).to_string() == "X - 1");
  CHECK(IntegerPolynomial({0, -1}).to_string() == "-X");
  CHECK(IntegerPolynomial().to_string() == "0");
  CHECK(IntegerPolynomial({5}).to_string() == "5");
}

TEST_CASE("decimal round trip") {
  const IntegerPolynomial f({BigInt("-123456789012345678901234567890"), BigInt(0), BigInt(7)});
  const auto s = f.to_decimal_strings();
  CHECK(s == std::vector<std::string>{"-123456789012345678901234567890", "0", "7"});
  CHECK(IntegerPolynomial::from_decimal_strings(s) == f);
  const std::vector<std::string> junk{"1", "x2"};
  CHECK_THROWS_AS(IntegerPolynomial::from_decimal_strings(junk), BadArguments);
}

TEST_CASE("ring identities hold pointwise on random inputs") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_poly(rng, 8, 50);
    const auto b = random_poly(rng, 8, 50);
    const auto c = random_poly(rng, 5, 9);
    for (long x : {-3L, -1L, 0L, 2L, 5L}) {
      CHECK(eval(a + b, x) == eval(a, x) + eval(b, x));
      CHECK(eval(a - b, x) == eval(a, x) - eval(b, x));
      CHECK(eval(a * b, x) == eval(a, x) * eval(b, x));
      CHECK(eval(compose_power(c, 3), x) == eval(c, x * x * x));
      CHECK(eval(negate_variable(a), x) == eval(a, -x));
    }
    CHECK((a + b) - b == a);
  }
}

TEST_CASE("exact division recovers factors and rejects remainders") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_poly(rng, 6, 20);
    auto b = random_poly(rng, 4, 20);
    if (b.is_zero()) continue;
    CHECK(divexact(a * b, b) == a);
  }
  CHECK_THROWS_AS(divexact(IntegerPolynomial({1, 0, 1}), IntegerPolynomial({1, 1})), InexactDivision);
  CHECK_THROWS_AS(divexact(IntegerPolynomial({1, 1}), IntegerPolynomial()), DivisionByZero);
  CHECK_THROWS_AS(divexact(IntegerPolynomial({1, 0, 1}), IntegerPolynomial({1, 2})), InexactDivision);
}

TEST_CASE("remainder and powers modulo a monic polynomial") {
  std::mt19937_64 rng(3);
  const IntegerPolynomial m({3, -1, 0, 1});  // X^3 - X + 3
  for (int trial = 0; trial < 50; ++trial) {
    const auto f = random_poly(rng, 9, 30);
    const auto r = remainder_monic(f, m);
    CHECK(r.degree() < 3);
    CHECK(divexact(f - r, m) * m == f - r);
  }
  IntegerPolynomial naive = IntegerPolynomial({1});
  for (std::uint64_t k = 0; k <= 40; ++k) {
    CHECK(x_pow_mod(k, m) == naive);
    naive = remainder_monic(naive * IntegerPolynomial({0, 1}), m);
  }
  CHECK_THROWS_AS(remainder_monic(IntegerPolynomial({1, 1}), IntegerPolynomial({1, 2})), BadArguments);
  CHECK(pow(IntegerPolynomial({1, 1}), 3) == IntegerPolynomial({1, 3, 3, 1}));
}

TEST_CASE("canonical order is degree first then ascending coefficients") {
  CanonicalLess less;
  CHECK(less(IntegerPolynomial({5, 1}), IntegerPolynomial({0, 0, 1})));
  CHECK(less(IntegerPolynomial({-4, 0, 1}), IntegerPolynomial({4, -2, 1})));
  CHECK(less(IntegerPolynomial({4, -2, 1}), IntegerPolynomial({4, 2, 1})));
  CHECK_FALSE(less(IntegerPolynomial({4, 2, 1}), IntegerPolynomial({4, 2, 1})));
}

TEST_CASE("predicates") {
  CHECK(IntegerPolynomial({9, 0, 3, 0, 1}).is_even());
  CHECK_FALSE(IntegerPolynomial({9, 1, 1}).is_even());
  CHECK(IntegerPolynomial({9, 1, 1}).is_monic());
  CHECK_FALSE(IntegerPolynomial({9, 1, 2}).is_monic());
  CHECK(IntegerPolynomial({1, 2, 3}).evaluate(big(10)) == 321);
}
