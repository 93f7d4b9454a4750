#include "ssav/oracle.hpp"

#include <algorithm>
#include <exception>
#include <string>

#include "ssav/errors.hpp"
#include "ssav/numthy.hpp"

namespace ssav {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kModulus = (u64{1} << 61) - 1;  // prime

u64 mulmod(u64 a, u64 b) { return static_cast<u64>(static_cast<u128>(a) * b % kModulus); }

u64 reduce(const BigInt& x) {
  return static_cast<u64>(mpz_fdiv_ui(x.get_mpz_t(), static_cast<unsigned long>(kModulus)));
}

u64 powmod(u64 a, u64 e) {
  u64 r = 1;
  for (; e != 0; e >>= 1, a = mulmod(a, a)) {
    if (e & 1) r = mulmod(r, a);
  }
  return r;
}

// Z/l[X] / (P) for a monic P, residues stored densely with deg P entries.
class ModRing {
 public:
  explicit ModRing(const IntegerPolynomial& P) : p_(static_cast<std::size_t>(P.degree())) {
    for (std::size_t i = 0; i < p_.size(); ++i) p_[i] = reduce(P.coeff(i));
  }

  std::size_t size() const noexcept { return p_.size(); }

  // r <- r X, using X^d = -sum p_i X^i.
  void times_x(std::vector<u64>& r) const {
    const std::size_t d = p_.size();
    const u64 top = r[d - 1];
    for (std::size_t i = d - 1; i > 0; --i) r[i] = r[i - 1];
    r[0] = 0;
    if (top == 0) return;
    for (std::size_t i = 0; i < d; ++i) r[i] = (r[i] + kModulus - mulmod(top, p_[i])) % kModulus;
  }

  std::vector<u64> mul(const std::vector<u64>& a, const std::vector<u64>& b) const {
    const std::size_t d = p_.size();
    std::vector<u64> acc(d, 0);
    // Horner over the coefficients of a, highest first.
    for (std::size_t i = d; i-- > 0;) {
      times_x(acc);
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < d; ++j) acc[j] = (acc[j] + mulmod(a[i], b[j])) % kModulus;
    }
    return acc;
  }

  // gcd(P, P') = 1 over Z/l; true implies P is squarefree over Q.
  bool separable() const {
    const std::size_t d = p_.size();
    std::vector<u64> f(p_);
    f.push_back(1);
    std::vector<u64> g(d);
    for (std::size_t i = 1; i <= d; ++i) g[i - 1] = mulmod(f[i], static_cast<u64>(i) % kModulus);
    auto trim = [](std::vector<u64>& v) {
      while (!v.empty() && v.back() == 0) v.pop_back();
    };
    trim(f);
    trim(g);
    while (!g.empty()) {
      const u64 inv = powmod(g.back(), kModulus - 2);
      while (f.size() >= g.size()) {
        const u64 factor = mulmod(f.back(), inv);
        const std::size_t shift = f.size() - g.size();
        for (std::size_t i = 0; i < g.size(); ++i) {
          f[i + shift] = (f[i + shift] + kModulus - mulmod(factor, g[i])) % kModulus;
        }
        trim(f);
        if (f.empty()) break;
      }
      std::swap(f, g);
    }
    return f.size() == 1;
  }

 private:
  std::vector<u64> p_;
};

void require_prime_power(const BigInt& q) {
  if (q < 2 || !fits_int64(q)) throw BadArguments("q must be a prime power, got " + to_decimal(q));
  if (factorize(to_int64(q)).size() != 1) throw BadArguments(to_decimal(q) + " is not a prime power");
}

// Candidate grid of monic degree-2g polynomials with the eps-twisted symmetry.
std::vector<IntegerPolynomial> weil_grid(const BigInt& q, int g) {
  std::vector<IntegerPolynomial> grid;
  if (g == 1) {
    const BigInt bound = isqrt(4 * q);  // |c_1| <= 2 sqrt q
    for (BigInt a = -bound; a <= bound; ++a) grid.push_back(IntegerPolynomial({q, a, 1}));
    grid.push_back(IntegerPolynomial({BigInt(-q), 0, 1}));
    return grid;
  }
  const BigInt q2 = q * q;
  const BigInt bound_a = isqrt(16 * q);  // |c_3| <= 4 sqrt q
  const BigInt bound_b = 6 * q;          // |c_2| <= 6 q
  for (BigInt a = -bound_a; a <= bound_a; ++a) {
    for (BigInt b = -bound_b; b <= bound_b; ++b) {
      grid.push_back(IntegerPolynomial({q2, BigInt(q * a), b, a, 1}));
    }
    grid.push_back(IntegerPolynomial({BigInt(-q2), BigInt(-q * a), 0, a, 1}));
  }
  return grid;
}

std::vector<IntegerPolynomial> brute_force_impl(const BigInt& q, int g, bool parallel) {
  if (g != 1 && g != 2) throw UnsupportedDegree("brute_force_weil supports g in {1, 2}, got " + std::to_string(g));
  require_prime_power(q);
  const auto grid = weil_grid(q, g);
  const std::int64_t n_max = default_n_max(2 * g);
  std::vector<char> keep(grid.size(), 0);
  const auto n = static_cast<std::int64_t>(grid.size());
#pragma omp parallel for schedule(dynamic, 16) if (parallel)
  for (std::int64_t i = 0; i < n; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    keep[idx] = is_supersingular_exact(grid[idx], q, n_max).has_value() ? 1 : 0;
  }
  std::vector<IntegerPolynomial> out;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (keep[i]) out.push_back(grid[i]);
  }
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

RecordCheck check_record(const IsogenyClassRecord& rec, double tol) {
  RecordCheck c;
  try {
    const BigInt& q = rec.field.q();
    c.dimension = rec.weil_poly.degree() * rec.e == 2 * rec.g &&
                  rec.char_poly == pow(rec.weil_poly, static_cast<unsigned>(rec.e));
    c.structured = is_weil_structured(rec.char_poly, q);
    c.supersingular = is_supersingular_exact(rec.weil_poly, q).has_value();
    c.modulus = root_modulus_check(rec.weil_poly, q, tol);
  } catch (const Error& err) {
    c.error = err.name() + ": " + err.what();
  }
  return c;
}

// Primitive part with a positive leading coefficient.
IntegerPolynomial primitive_part(const IntegerPolynomial& f) {
  BigInt content = 0;
  for (const auto& c : f.coeffs()) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
  if (sgn(f.leading()) < 0) content = -content;
  std::vector<BigInt> out(f.coeffs().begin(), f.coeffs().end());
  for (auto& c : out) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
  return IntegerPolynomial(std::move(out));
}

// Primitive gcd over Z via pseudo-remainders; both inputs nonzero.
IntegerPolynomial primitive_gcd(IntegerPolynomial a, IntegerPolynomial b) {
  a = primitive_part(a);
  b = primitive_part(b);
  while (!b.is_zero() && b.degree() > 0) {
    // lc(b)^(deg a - deg b + 1) a is divisible by b over Z.
    IntegerPolynomial r = ipow(b.leading(), static_cast<unsigned long>(a.degree() - b.degree() + 1)) * a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
      const BigInt factor = r.leading() / b.leading();
      r -= IntegerPolynomial::monomial(factor, static_cast<std::size_t>(r.degree() - b.degree())) * b;
    }
    a = std::move(b);
    b = r.is_zero() ? r : primitive_part(r);
  }
  return b.is_zero() ? a : IntegerPolynomial({1});
}

// Same roots as P, each once; double-precision roots of a multiple root only
// reach eps^(1/multiplicity), too coarse for a relative modulus test.
IntegerPolynomial squarefree_part(const IntegerPolynomial& P) {
  if (P.degree() < 1) return P;
  std::vector<BigInt> d(static_cast<std::size_t>(P.degree()));
  for (std::size_t j = 1; j <= d.size(); ++j) d[j - 1] = P.coeff(j) * static_cast<unsigned long>(j);
  const auto g = primitive_gcd(P, IntegerPolynomial(std::move(d)));
  return g.degree() == 0 ? P : divexact(P, g);
}

}  // namespace

bool is_weil_structured(const IntegerPolynomial& P, const BigInt& q) {
  const int d = P.degree();
  if (d < 0 || d % 2 != 0) throw OddDegree("Weil structure needs even degree, got " + std::to_string(d));
  if (!P.is_monic()) return false;
  const int g = d / 2;
  for (int i = 0; i <= g; ++i) {
    const BigInt expect = ipow(q, static_cast<unsigned long>(g - i)) * P.coeff(static_cast<std::size_t>(d - i));
    if (P.coeff(static_cast<std::size_t>(i)) != expect) return false;
  }
  return true;
}

std::int64_t default_n_max(int degree) {
  if (degree < 1) throw OutOfRange("degree must be >= 1");
  const std::int64_t k = 2 * static_cast<std::int64_t>(degree);
  std::int64_t largest = 1;
  for (std::int64_t m = 1; m <= inverse_phi_bound(k); ++m) {
    if (euler_phi(m) <= k) largest = m;
  }
  return 2 * largest * largest;
}

std::optional<std::int64_t> is_supersingular_exact(const IntegerPolynomial& P, const BigInt& q,
                                                   std::int64_t n_max) {
  const int d = P.degree();
  if (d < 1 || !P.is_monic()) throw BadArguments("is_supersingular_exact needs a monic nonconstant polynomial");

  // Track S = X^{2N} - q^N mod (P, l); confirm each hit exactly over Z.
  // With repeated roots the test is S^(2^k) = 0 mod P, 2^k >= deg P.
  const ModRing ring(P);
  const bool separable = ring.separable();
  unsigned squarings = 0;
  while ((1 << squarings) < d) ++squarings;

  std::vector<u64> r(ring.size(), 0);
  r[0] = 1;
  const u64 qm = reduce(q);
  u64 qn = 1;
  for (std::int64_t N = 1; N <= n_max; ++N) {
    ring.times_x(r);
    ring.times_x(r);
    qn = mulmod(qn, qm);
    std::vector<u64> s = r;
    s[0] = (s[0] + kModulus - qn) % kModulus;
    if (!separable) {
      for (unsigned i = 0; i < squarings; ++i) s = ring.mul(s, s);
    }
    if (std::any_of(s.begin(), s.end(), [](u64 c) { return c != 0; })) continue;

    IntegerPolynomial exact =
        x_pow_mod(static_cast<std::uint64_t>(2 * N), P) - IntegerPolynomial::constant(ipow(q, static_cast<unsigned long>(N)));
    if (!separable) {
      for (unsigned i = 0; i < squarings; ++i) exact = remainder_monic(exact * exact, P);
    }
    if (exact.is_zero()) return N;
  }
  return std::nullopt;
}

std::optional<std::int64_t> is_supersingular_exact(const IntegerPolynomial& P, const BigInt& q) {
  return is_supersingular_exact(P, q, default_n_max(std::max(P.degree(), 1)));
}

std::vector<IntegerPolynomial> brute_force_weil(const BigInt& q, int g) { return brute_force_impl(q, g, true); }

std::vector<IntegerPolynomial> brute_force_weil_serial(const BigInt& q, int g) {
  return brute_force_impl(q, g, false);
}

std::vector<IntegerPolynomial> weil_linear_factors(const BigInt& q) {
  if (!is_perfect_square(q)) return {};
  const BigInt r = isqrt(q);
  return {IntegerPolynomial({BigInt(-r), 1}), IntegerPolynomial({r, 1})};
}

std::vector<IntegerPolynomial> irreducible_members(const BigInt& q, int g,
                                                   const std::vector<IntegerPolynomial>& members) {
  if (g != 1 && g != 2) throw UnsupportedDegree("irreducible_members supports g in {1, 2}");
  // A reducible supersingular factor pair has factors of degree g each, and
  // those are again supersingular Weil polynomials of half the degree.
  const auto factors = g == 1 ? weil_linear_factors(q) : brute_force_weil(q, 1);
  std::vector<IntegerPolynomial> products;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    for (std::size_t j = i; j < factors.size(); ++j) products.push_back(factors[i] * factors[j]);
  }
  std::vector<IntegerPolynomial> out;
  for (const auto& m : members) {
    if (std::find(products.begin(), products.end(), m) == products.end()) out.push_back(m);
  }
  return out;
}

bool root_modulus_check(const IntegerPolynomial& P, const BigInt& q, double tol) {
  const double sq = std::sqrt(q.get_d());
  for (const auto& z : find_roots(squarefree_part(P))) {
    if (std::abs(std::abs(z) - sq) >= tol * sq) return false;
  }
  return true;
}

std::vector<RecordCheck> verify_records(const std::vector<IsogenyClassRecord>& records, double tol) {
  std::vector<RecordCheck> out(records.size());
  const auto n = static_cast<std::int64_t>(records.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] = check_record(records[static_cast<std::size_t>(i)], tol);
  }
  return out;
}

std::vector<RecordCheck> verify_records_serial(const std::vector<IsogenyClassRecord>& records, double tol) {
  std::vector<RecordCheck> out;
  out.reserve(records.size());
  for (const auto& rec : records) out.push_back(check_record(rec, tol));
  return out;
}

}  // namespace ssav
