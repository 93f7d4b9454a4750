#include "ssav/polyarith.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

#include "ssav/errors.hpp"

namespace ssav {

BigInt from_decimal(std::string_view text) {
  std::string s(text);
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size() ||
      !std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                   [](unsigned char ch) { return std::isdigit(ch) != 0; })) {
    throw BadArguments("not a decimal integer: '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return BigInt(s, 10);
}

bool fits_int64(const BigInt& x) {
  static const BigInt lo = BigInt("-9223372036854775808");
  static const BigInt hi = BigInt("9223372036854775807");
  return x >= lo && x <= hi;
}

std::int64_t to_int64(const BigInt& x) {
  if (!fits_int64(x)) throw OutOfRange("integer does not fit in 64 bits: " + to_decimal(x));
  return std::stoll(to_decimal(x));
}

IntegerPolynomial::IntegerPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) {
  normalize();
}

IntegerPolynomial::IntegerPolynomial(std::initializer_list<long> coeffs) {
  c_.reserve(coeffs.size());
  for (long v : coeffs) c_.emplace_back(v);
  normalize();
}

IntegerPolynomial IntegerPolynomial::constant(const BigInt& c) {
  return IntegerPolynomial(std::vector<BigInt>{c});
}

IntegerPolynomial IntegerPolynomial::monomial(const BigInt& c, std::size_t k) {
  std::vector<BigInt> v(k + 1);
  v[k] = c;
  return IntegerPolynomial(std::move(v));
}

void IntegerPolynomial::normalize() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

BigInt IntegerPolynomial::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }

const BigInt& IntegerPolynomial::leading() const {
  if (c_.empty()) throw BadArguments("leading coefficient of the zero polynomial");
  return c_.back();
}

bool IntegerPolynomial::is_monic() const { return !c_.empty() && c_.back() == 1; }

bool IntegerPolynomial::is_even() const {
  for (std::size_t i = 1; i < c_.size(); i += 2) {
    if (sgn(c_[i]) != 0) return false;
  }
  return true;
}

BigInt IntegerPolynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string IntegerPolynomial::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const BigInt& c = c_[k];
    if (sgn(c) == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << 'X';
    if (k > 1) os << '^' << k;
  }
  return os.str();
}

std::vector<std::string> IntegerPolynomial::to_decimal_strings() const {
  std::vector<std::string> out;
  out.reserve(c_.size());
  for (const auto& c : c_) out.push_back(to_decimal(c));
  return out;
}

IntegerPolynomial IntegerPolynomial::from_decimal_strings(std::span<const std::string> coeffs) {
  std::vector<BigInt> v;
  v.reserve(coeffs.size());
  for (const auto& s : coeffs) v.push_back(from_decimal(s));
  return IntegerPolynomial(std::move(v));
}

IntegerPolynomial& IntegerPolynomial::operator+=(const IntegerPolynomial& rhs) {
  if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size());
  for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
  normalize();
  return *this;
}

IntegerPolynomial& IntegerPolynomial::operator-=(const IntegerPolynomial& rhs) {
  if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size());
  for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] -= rhs.c_[i];
  normalize();
  return *this;
}

IntegerPolynomial& IntegerPolynomial::operator*=(const IntegerPolynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

IntegerPolynomial& IntegerPolynomial::operator*=(const BigInt& scalar) {
  for (auto& c : c_) c *= scalar;
  normalize();
  return *this;
}

bool operator==(const IntegerPolynomial& a, const IntegerPolynomial& b) {
  if (a.c_.size() != b.c_.size()) return false;
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] != b.c_[i]) return false;
  }
  return true;
}

IntegerPolynomial operator+(IntegerPolynomial a, const IntegerPolynomial& b) { return a += b; }

IntegerPolynomial operator-(IntegerPolynomial a, const IntegerPolynomial& b) { return a -= b; }

IntegerPolynomial operator-(IntegerPolynomial a) { return a *= BigInt(-1); }

IntegerPolynomial operator*(const IntegerPolynomial& a, const IntegerPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  auto ac = a.coeffs();
  auto bc = b.coeffs();
  std::vector<BigInt> out(ac.size() + bc.size() - 1);
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (sgn(ac[i]) == 0) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), ac[i].get_mpz_t(), bc[j].get_mpz_t());
    }
  }
  return IntegerPolynomial(std::move(out));
}

IntegerPolynomial operator*(const BigInt& scalar, IntegerPolynomial f) { return f *= scalar; }

std::ostream& operator<<(std::ostream& os, const IntegerPolynomial& f) { return os << f.to_string(); }

bool CanonicalLess::operator()(const IntegerPolynomial& a, const IntegerPolynomial& b) const {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  auto ac = a.coeffs();
  auto bc = b.coeffs();
  for (std::size_t i = 0; i < ac.size(); ++i) {
    int c = cmp(ac[i], bc[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

IntegerPolynomial divexact(const IntegerPolynomial& f, const IntegerPolynomial& g) {
  if (g.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (f.is_zero()) return {};
  if (f.degree() < g.degree()) throw InexactDivision("divisor degree exceeds dividend degree");

  std::vector<BigInt> rem(f.coeffs().begin(), f.coeffs().end());
  auto gc = g.coeffs();
  const std::size_t dg = gc.size() - 1;
  const BigInt& lead = gc.back();
  std::vector<BigInt> quot(rem.size() - dg);
  for (std::size_t k = quot.size(); k-- > 0;) {
    BigInt& top = rem[k + dg];
    if (sgn(top) == 0) continue;
    if (mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()) == 0) {
      throw InexactDivision("leading coefficient does not divide exactly");
    }
    BigInt qk;
    mpz_divexact(qk.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    for (std::size_t j = 0; j <= dg; ++j) {
      mpz_submul(rem[k + j].get_mpz_t(), qk.get_mpz_t(), gc[j].get_mpz_t());
    }
    quot[k] = std::move(qk);
  }
  for (const auto& r : rem) {
    if (sgn(r) != 0) throw InexactDivision("nonzero remainder");
  }
  return IntegerPolynomial(std::move(quot));
}

IntegerPolynomial remainder_monic(const IntegerPolynomial& f, const IntegerPolynomial& modulus) {
  if (!modulus.is_monic()) throw BadArguments("modulus must be monic");
  if (f.degree() < modulus.degree()) return f;
  std::vector<BigInt> rem(f.coeffs().begin(), f.coeffs().end());
  auto mc = modulus.coeffs();
  const std::size_t dm = mc.size() - 1;
  for (std::size_t k = rem.size(); k-- > dm;) {
    if (sgn(rem[k]) == 0) continue;
    BigInt top = rem[k];
    for (std::size_t j = 0; j <= dm; ++j) {
      mpz_submul(rem[k - dm + j].get_mpz_t(), top.get_mpz_t(), mc[j].get_mpz_t());
    }
  }
  rem.resize(dm);
  return IntegerPolynomial(std::move(rem));
}

IntegerPolynomial compose_power(const IntegerPolynomial& f, unsigned k) {
  if (k == 0) throw BadArguments("compose_power needs k >= 1");
  if (f.is_zero() || k == 1) return f;
  auto fc = f.coeffs();
  std::vector<BigInt> out((fc.size() - 1) * k + 1);
  for (std::size_t i = 0; i < fc.size(); ++i) out[i * k] = fc[i];
  return IntegerPolynomial(std::move(out));
}

IntegerPolynomial negate_variable(const IntegerPolynomial& f) {
  std::vector<BigInt> out(f.coeffs().begin(), f.coeffs().end());
  for (std::size_t i = 1; i < out.size(); i += 2) out[i] = -out[i];
  return IntegerPolynomial(std::move(out));
}

IntegerPolynomial x_pow_mod(std::uint64_t exponent, const IntegerPolynomial& modulus) {
  if (!modulus.is_monic() || modulus.degree() < 1) {
    throw BadArguments("x_pow_mod needs a monic modulus of degree >= 1");
  }
  IntegerPolynomial result = remainder_monic(IntegerPolynomial{1}, modulus);
  IntegerPolynomial base = remainder_monic(IntegerPolynomial{0, 1}, modulus);
  while (exponent != 0) {
    if (exponent & 1U) result = remainder_monic(result * base, modulus);
    exponent >>= 1U;
    if (exponent != 0) base = remainder_monic(base * base, modulus);
  }
  return result;
}

IntegerPolynomial pow(const IntegerPolynomial& f, unsigned exponent) {
  IntegerPolynomial result{1};
  IntegerPolynomial base = f;
  while (exponent != 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent != 0) base = base * base;
  }
  return result;
}

}  // namespace ssav
