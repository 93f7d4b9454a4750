#include "ssav/cyclofield.hpp"

#include <string>
#include <vector>

#include "ssav/errors.hpp"
#include "ssav/numthy.hpp"

namespace ssav {

namespace {

void require_level(std::int64_t level) {
  if (level < 1) throw OutOfRange("cyclotomic level must be >= 1, got " + std::to_string(level));
}

void require_same_level(const CyclotomicElement& a, const CyclotomicElement& b) {
  if (a.level() != b.level()) {
    throw LevelMismatch("levels " + std::to_string(a.level()) + " and " + std::to_string(b.level()));
  }
}

}  // namespace

CyclotomicElement::CyclotomicElement(std::int64_t level, const IntegerPolynomial& rep)
    : level_(level), rep_() {
  require_level(level);
  rep_ = remainder_monic(rep, cyclotomic(level));
}

CyclotomicElement::CyclotomicElement(std::int64_t level, IntegerPolynomial rep, bool /*reduced*/)
    : level_(level), rep_(std::move(rep)) {}

CyclotomicElement CyclotomicElement::integer(std::int64_t level, const BigInt& value) {
  require_level(level);
  // Phi_1 = X - 1 has degree 1, so constants are already reduced at every level.
  return CyclotomicElement(level, IntegerPolynomial::constant(value), true);
}

CyclotomicElement CyclotomicElement::from_cyclic(std::int64_t level, std::span<const BigInt> coeffs) {
  return CyclotomicElement(level, IntegerPolynomial(std::vector<BigInt>(coeffs.begin(), coeffs.end())));
}

std::optional<BigInt> CyclotomicElement::as_integer() const {
  if (rep_.degree() > 0) return std::nullopt;
  return rep_.coeff(0);
}

CyclotomicElement& CyclotomicElement::operator+=(const CyclotomicElement& rhs) {
  require_same_level(*this, rhs);
  rep_ += rhs.rep_;
  return *this;
}

CyclotomicElement& CyclotomicElement::operator-=(const CyclotomicElement& rhs) {
  require_same_level(*this, rhs);
  rep_ -= rhs.rep_;
  return *this;
}

CyclotomicElement& CyclotomicElement::operator*=(const CyclotomicElement& rhs) {
  require_same_level(*this, rhs);
  rep_ = remainder_monic(rep_ * rhs.rep_, cyclotomic(level_));
  return *this;
}

CyclotomicElement operator+(CyclotomicElement a, const CyclotomicElement& b) { return a += b; }
CyclotomicElement operator-(CyclotomicElement a, const CyclotomicElement& b) { return a -= b; }
CyclotomicElement operator-(const CyclotomicElement& a) {
  return CyclotomicElement::integer(a.level(), 0) - a;
}
CyclotomicElement operator*(CyclotomicElement a, const CyclotomicElement& b) { return a *= b; }

CyclotomicElement zeta_power(std::int64_t level, std::int64_t k) {
  require_level(level);
  std::int64_t r = k % level;
  if (r < 0) r += level;
  return CyclotomicElement(level, IntegerPolynomial::monomial(1, static_cast<std::size_t>(r)));
}

CyclotomicElement embed(const CyclotomicElement& a, std::int64_t level) {
  require_level(level);
  if (level % a.level() != 0) {
    throw NotDivisible("cannot embed level " + std::to_string(a.level()) + " into level " +
                       std::to_string(level));
  }
  return CyclotomicElement(level, compose_power(a.rep(), static_cast<unsigned>(level / a.level())));
}

CyclotomicElement gauss_sum(std::int64_t p) {
  std::vector<BigInt> coeffs(static_cast<std::size_t>(p));
  for (std::int64_t a = 1; a < p; ++a) coeffs[static_cast<std::size_t>(a)] = legendre(a, p);
  return CyclotomicElement::from_cyclic(p, coeffs);
}

CyclotomicElement sqrt_two_elem() { return zeta_power(8, 1) + zeta_power(8, -1); }

CyclotomicElement sqrt_minus_two_elem() { return zeta_power(8, 1) + zeta_power(8, 3); }

QuadraticCoordinates descend_quadratic(const CyclotomicElement& a, const CyclotomicElement& root) {
  require_same_level(a, root);
  const auto& r = root.rep();
  if (r.degree() < 1) throw BadArguments("descend_quadratic: root is rational");

  // rad is fixed by any power-basis coordinate j >= 1 where the root is nonzero
  // (the constant 1 has no support there); rat then follows from coordinate 0.
  std::size_t pivot = 1;
  while (sgn(r.coeff(pivot)) == 0) ++pivot;
  const BigInt num = a.rep().coeff(pivot);
  const BigInt den = r.coeff(pivot);
  if (mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()) == 0) {
    throw NotInQuadraticSubring("coordinate not an integer multiple of the root");
  }
  QuadraticCoordinates out;
  mpz_divexact(out.rad.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  out.rat = a.rep().coeff(0) - out.rad * r.coeff(0);

  const IntegerPolynomial rebuilt = IntegerPolynomial::constant(out.rat) + out.rad * r;
  if (!(rebuilt == a.rep())) throw NotInQuadraticSubring("element is not of the form rat + rad*root");
  return out;
}

}  // namespace ssav
