#include "ssav/numthy.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <string>

#include "ssav/errors.hpp"

namespace ssav {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 base, u64 e, u64 m) {
  u64 r = 1 % m;
  base %= m;
  while (e != 0) {
    if (e & 1U) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    e >>= 1U;
  }
  return r;
}

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

void require_odd_prime(std::int64_t p, const char* what) {
  if (p <= 2 || !is_prime(p)) {
    throw BadArguments(std::string(what) + ": expected an odd prime, got " + std::to_string(p));
  }
}

// phi(0..bound) by sieve; grown on demand and shared read-only between callers.
class TotientTable {
 public:
  std::shared_ptr<const std::vector<std::int64_t>> at_least(std::int64_t bound) {
    {
      std::shared_lock lock(mu_);
      if (table_ && static_cast<std::int64_t>(table_->size()) > bound) return table_;
    }
    std::unique_lock lock(mu_);
    if (table_ && static_cast<std::int64_t>(table_->size()) > bound) return table_;
    std::int64_t size = std::max<std::int64_t>(bound + 1, 1024);
    if (table_) size = std::max<std::int64_t>(size, 2 * static_cast<std::int64_t>(table_->size()));
    auto phi = std::make_shared<std::vector<std::int64_t>>(static_cast<std::size_t>(size));
    auto& v = *phi;
    std::iota(v.begin(), v.end(), std::int64_t{0});
    for (std::int64_t i = 2; i < size; ++i) {
      if (v[static_cast<std::size_t>(i)] != i) continue;  // composite
      for (std::int64_t j = i; j < size; j += i) {
        auto& x = v[static_cast<std::size_t>(j)];
        x -= x / i;
      }
    }
    table_ = std::move(phi);
    return table_;
  }

 private:
  std::shared_mutex mu_;
  std::shared_ptr<const std::vector<std::int64_t>> table_;
};

TotientTable& totient_table() {
  static TotientTable t;
  return t;
}

}  // namespace

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  const u64 un = static_cast<u64>(n);
  u64 d = un - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod(a, d, un);
    if (x == 1 || x == un - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, un);
      if (x == un - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Factorization factorize(std::int64_t n) {
  if (n < 1) throw OutOfRange("factorize: n must be >= 1, got " + std::to_string(n));
  Factorization out;
  for (std::int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

int omega(std::int64_t n) { return static_cast<int>(factorize(n).size()); }

std::int64_t euler_phi(std::int64_t m) {
  std::int64_t phi = m;
  for (const auto& [p, e] : factorize(m)) phi -= phi / p;
  return phi;
}

int mobius(std::int64_t n) {
  int mu = 1;
  for (const auto& [p, e] : factorize(n)) {
    if (e > 1) return 0;
    mu = -mu;
  }
  return mu;
}

std::int64_t inverse_phi_bound(std::int64_t k) { return 2 * k * k + 1; }

std::vector<std::int64_t> inverse_phi(std::int64_t k) {
  if (k < 1) throw OutOfRange("inverse_phi: k must be >= 1");
  const std::int64_t bound = inverse_phi_bound(k);
  auto table = totient_table().at_least(bound);
  const auto& phi = *table;

  std::vector<std::int64_t> hits;
#pragma omp parallel
  {
    std::vector<std::int64_t> local;
#pragma omp for schedule(static) nowait
    for (std::int64_t m = 1; m <= bound; ++m) {
      if (phi[static_cast<std::size_t>(m)] == k) local.push_back(m);
    }
#pragma omp critical
    hits.insert(hits.end(), local.begin(), local.end());
  }
  std::sort(hits.begin(), hits.end());
  return hits;
}

std::vector<std::int64_t> inverse_phi_serial(std::int64_t k) {
  if (k < 1) throw OutOfRange("inverse_phi: k must be >= 1");
  std::vector<std::int64_t> hits;
  for (std::int64_t m = 1; m <= inverse_phi_bound(k); ++m) {
    if (euler_phi(m) == k) hits.push_back(m);
  }
  return hits;
}

std::int64_t multiplicative_order(std::int64_t a, std::int64_t m) {
  if (m < 1) throw OutOfRange("multiplicative_order: modulus must be >= 1");
  if (m == 1) return 1;
  const std::int64_t r = mod_floor(a, m);
  if (std::gcd(r, m) != 1) {
    throw NotCoprime(std::to_string(a) + " is not a unit modulo " + std::to_string(m));
  }
  std::int64_t order = euler_phi(m);
  for (const auto& [p, e] : factorize(order)) {
    for (int i = 0; i < e; ++i) {
      if (powmod(static_cast<u64>(r), static_cast<u64>(order / p), static_cast<u64>(m)) != 1) break;
      order /= p;
    }
  }
  return order;
}

int legendre(std::int64_t a, std::int64_t p) {
  require_odd_prime(p, "legendre");
  const std::int64_t r = mod_floor(a, p);
  if (r == 0) return 0;
  return powmod(static_cast<u64>(r), static_cast<u64>((p - 1) / 2), static_cast<u64>(p)) == 1 ? 1 : -1;
}

int char_eps(std::int64_t a) {
  if (a % 2 == 0) throw EvenArgument("char_eps of even " + std::to_string(a));
  return mod_floor(a, 4) == 1 ? 1 : -1;
}

int char_two(std::int64_t a) {
  if (a % 2 == 0) throw EvenArgument("char_two of even " + std::to_string(a));
  const std::int64_t r = mod_floor(a, 8);
  return (r == 1 || r == 7) ? 1 : -1;
}

int char_minus_two(std::int64_t a) {
  if (a % 2 == 0) throw EvenArgument("char_minus_two of even " + std::to_string(a));
  const std::int64_t r = mod_floor(a, 8);
  return (r == 1 || r == 3) ? 1 : -1;
}

std::int64_t p_star(std::int64_t p) {
  require_odd_prime(p, "p_star");
  return p % 4 == 1 ? p : -p;
}

IntegerPolynomial cyclotomic(std::int64_t m) {
  if (m < 1) throw OutOfRange("cyclotomic: m must be >= 1");
  static std::shared_mutex mu;
  static std::map<std::int64_t, IntegerPolynomial> memo;
  {
    std::shared_lock lock(mu);
    if (auto it = memo.find(m); it != memo.end()) return it->second;
  }
  // Phi_m = (X^m - 1) / prod_{d | m, d < m} Phi_d
  IntegerPolynomial phi = IntegerPolynomial::monomial(1, static_cast<std::size_t>(m)) - IntegerPolynomial{1};
  for (std::int64_t d = 1; d < m; ++d) {
    if (m % d == 0) phi = divexact(phi, cyclotomic(d));
  }
  std::unique_lock lock(mu);
  memo.emplace(m, phi);
  return phi;
}

}  // namespace ssav
