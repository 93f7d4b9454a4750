#include "ssav/weilmin.hpp"

#include <string>

#include "ssav/errors.hpp"
#include "ssav/numthy.hpp"

namespace ssav {

namespace {

// Residue of a signed integer in [0, m).
long mod_floor(const BigInt& x, long m) {
  BigInt r;
  mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(m));
  return r.get_si();
}

}  // namespace

FieldParameters::FieldParameters(std::int64_t p, int n, Sign sign) : p_(p), n_(n), sign_(sign) {
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  if (n < 1) throw OutOfRange("exponent n must be >= 1, got " + std::to_string(n));
  q_ = ipow(big(p), static_cast<unsigned long>(n));
}

std::string_view to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::Normal: return "Normal";
    case CaseTag::ExcOddP: return "ExcOddP";
    case CaseTag::ExcTwoPlus: return "ExcTwoPlus";
    case CaseTag::ExcTwoMinus: return "ExcTwoMinus";
    case CaseTag::RealOdd: return "RealOdd";
    case CaseTag::EvenCyclotomic: return "EvenCyclotomic";
    case CaseTag::EvenReal: return "EvenReal";
  }
  return "?";
}

std::string_view to_string(Sign sign) { return sign == Sign::Plus ? "+" : "-"; }

IntegerPolynomial scale_sqrt(const IntegerPolynomial& f, const BigInt& s) {
  if (sgn(s) == 0) throw NonIntegralScaling("scaling by sqrt(0)");
  if (f.is_zero()) return f;
  const auto deg = static_cast<std::size_t>(f.degree());
  auto fc = f.coeffs();
  std::vector<BigInt> out(fc.size());
  if (is_perfect_square(s)) {
    const BigInt a = isqrt(s);
    BigInt scale = 1;
    for (std::size_t j = deg + 1; j-- > 0;) {
      out[j] = fc[j] * scale;
      scale *= a;
    }
  } else if (f.is_even() && deg % 2 == 0) {
    BigInt scale = 1;
    for (std::size_t j = deg + 1; j-- > 0;) {
      if (j % 2 == 1) continue;
      out[j] = fc[j] * scale;
      scale *= s;
    }
  } else {
    throw NonIntegralScaling("sqrt(" + to_decimal(s) + ") scaling of a polynomial with odd-exponent terms");
  }
  return IntegerPolynomial(std::move(out));
}

IntegerPolynomial scale_quad(const QuadraticPolynomial& psi, const BigInt& s) {
  const BigInt ds = big(psi.radicand()) * s;
  if (sgn(ds) <= 0 || !is_perfect_square(ds)) {
    throw NonIntegralScaling("radicand " + std::to_string(psi.radicand()) + " times " + to_decimal(s) +
                             " is not a positive square");
  }
  const BigInt root = isqrt(ds);
  const auto deg = static_cast<std::size_t>(psi.degree());
  std::vector<BigInt> out(deg + 1);
  // s^{(deg-j)/2} for even j, s^{(deg-j-1)/2} * sqrt(ds) for odd j.
  BigInt scale = 1;
  for (std::size_t j = deg + 1; j-- > 0;) {
    if (j % 2 == 0) {
      out[j] = psi.rat(j) * scale;
    } else {
      out[j] = psi.rad(j) * scale * root;
      scale *= s;
    }
  }
  return IntegerPolynomial(std::move(out));
}

CaseTag classify_odd(const FieldParameters& fp, std::int64_t t) {
  if (t < 1) throw OutOfRange("t must be >= 1");
  if (fp.n() % 2 == 0) throw BadArguments("classify_odd needs an odd exponent");
  const BigInt qs = fp.signed_q();
  if (fp.p() == 2) {
    if (t % 4 != 2) return CaseTag::Normal;
    return fp.sign() == Sign::Plus ? CaseTag::ExcTwoPlus : CaseTag::ExcTwoMinus;
  }
  if (t % 2 == 0 || t % fp.p() != 0 || mod_floor(qs, 4) == 1) return CaseTag::Normal;
  return CaseTag::ExcOddP;
}

OddMinimalPolynomial minimal_poly_odd(const FieldParameters& fp, std::int64_t t) {
  const CaseTag tag = classify_odd(fp, t);
  const BigInt qs = fp.signed_q();
  switch (tag) {
    case CaseTag::Normal:
      return {tag, {scale_sqrt(cyclotomic(4 * t), qs)}};
    case CaseTag::ExcOddP: {
      // sqrt(q') zeta_4t = +-sqrt(-q') zeta_t with -q' = 1 mod 4.
      const auto base = psi(fp.p(), t / fp.p());
      const BigInt s = -qs;
      return {tag, {scale_quad(base, s), scale_quad(psi_negate(base), s)}};
    }
    case CaseTag::ExcTwoPlus:
    case CaseTag::ExcTwoMinus: {
      const auto base = psi_two(t / 2, tag == CaseTag::ExcTwoPlus ? TwoSign::Plus : TwoSign::Minus);
      return {tag, {scale_quad(base, qs), scale_quad(psi_negate(base), qs)}};
    }
    default:
      break;
  }
  throw std::logic_error("unreachable case tag");
}

IntegerPolynomial minimal_poly_even(const FieldParameters& fp, std::int64_t m) {
  if (fp.n() % 2 != 0) throw BadArguments("minimal_poly_even needs an even exponent");
  if (m < 1) throw OutOfRange("m must be >= 1");
  return scale_sqrt(cyclotomic(m), fp.q());
}

}  // namespace ssav
