#include "ssav/htclassify.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <string>

#include "ssav/errors.hpp"
#include "ssav/numthy.hpp"

namespace ssav {

namespace {

void require_dimension(int g) {
  if (g < 1) throw OutOfRange("dimension g must be >= 1, got " + std::to_string(g));
}

// Evaluates build(i) for every index and concatenates the per-index results
// in index order, so the merged list does not depend on scheduling.
template <class Build>
std::vector<IsogenyClassRecord> gather(std::size_t count, bool parallel, Build build) {
  std::vector<std::vector<IsogenyClassRecord>> parts(count);
  std::exception_ptr failure;
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      parts[static_cast<std::size_t>(i)] = build(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(ssav_gather_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  std::vector<IsogenyClassRecord> out;
  for (auto& part : parts) {
    for (auto& rec : part) out.push_back(std::move(rec));
  }
  return out;
}

std::vector<IsogenyClassRecord> canonical(std::vector<IsogenyClassRecord> records) {
  // Input arrives in witness order, so the first copy of a weil_poly wins.
  std::vector<IsogenyClassRecord> unique;
  for (auto& rec : records) {
    const bool seen = std::any_of(unique.begin(), unique.end(),
                                  [&](const IsogenyClassRecord& u) { return u.weil_poly == rec.weil_poly; });
    if (!seen) unique.push_back(std::move(rec));
  }
  std::stable_sort(unique.begin(), unique.end(), [](const IsogenyClassRecord& a, const IsogenyClassRecord& b) {
    return CanonicalLess{}(a.char_poly, b.char_poly);
  });
  return unique;
}

IsogenyClassRecord make_record(const FieldParameters& fp, int g, CaseTag tag, std::int64_t param,
                               SignVariant variant, IntegerPolynomial weil, int e) {
  IntegerPolynomial chr = e == 1 ? weil : weil * weil;
  return IsogenyClassRecord{fp, g, tag, param, variant, std::move(weil), e, std::move(chr)};
}

std::vector<IsogenyClassRecord> enumerate_even_impl(std::int64_t p, int n, int g, bool parallel) {
  require_dimension(g);
  const FieldParameters fp(p, n);
  if (n % 2 != 0) throw BadArguments("enumerate_even needs an even exponent");

  struct Candidate {
    std::int64_t m;
    int e;
  };
  std::vector<Candidate> candidates;
  for (std::int64_t m : inverse_phi(2 * static_cast<std::int64_t>(g))) candidates.push_back({m, 1});
  for (std::int64_t m : inverse_phi(g)) candidates.push_back({m, 2});

  auto records = gather(candidates.size(), parallel, [&](std::size_t i) {
    const auto [m, want_e] = candidates[i];
    std::vector<IsogenyClassRecord> out;
    if (multiplicity_even(p, m).e != want_e) return out;
    const CaseTag tag = m <= 2 ? CaseTag::EvenReal : CaseTag::EvenCyclotomic;
    out.push_back(make_record(fp, g, tag, m, SignVariant::None, minimal_poly_even(fp, m), want_e));
    return out;
  });
  return canonical(std::move(records));
}

std::vector<IsogenyClassRecord> enumerate_odd_impl(std::int64_t p, int n, int g, bool parallel) {
  require_dimension(g);
  const FieldParameters plus(p, n, Sign::Plus);
  if (n % 2 == 0) throw BadArguments("enumerate_odd needs an odd exponent");

  // phi(4t) is 2g (normal), 4g (exceptional) or g (the real class at g = 2).
  std::vector<std::int64_t> ts;
  for (std::int64_t k : {static_cast<std::int64_t>(g), 2 * static_cast<std::int64_t>(g), 4 * static_cast<std::int64_t>(g)}) {
    for (std::int64_t m : inverse_phi(k)) {
      if (m % 4 == 0) ts.push_back(m / 4);
    }
  }
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());

  struct Candidate {
    Sign sign;
    std::int64_t t;
  };
  std::vector<Candidate> candidates;
  for (Sign s : {Sign::Plus, Sign::Minus}) {
    for (std::int64_t t : ts) candidates.push_back({s, t});
  }

  const BigInt minus_q = -plus.q();
  auto records = gather(candidates.size(), parallel, [&](std::size_t i) {
    const auto [sign, t] = candidates[i];
    const FieldParameters fp = plus.with_sign(sign);
    const auto mp = minimal_poly_odd(fp, t);
    std::vector<IsogenyClassRecord> out;
    for (std::size_t v = 0; v < mp.polys.size(); ++v) {
      const auto& poly = mp.polys[v];
      // X^2 - q is the only real-rooted minimal Weil polynomial for odd n.
      const bool real = poly.degree() == 2 && sgn(poly.coeff(1)) == 0 && poly.coeff(0) == minus_q;
      const int e = real ? 2 : 1;
      if (poly.degree() * e != 2 * g) continue;
      const SignVariant variant =
          mp.polys.size() == 1 ? SignVariant::None : (v == 0 ? SignVariant::A : SignVariant::B);
      out.push_back(make_record(fp, g, real ? CaseTag::RealOdd : mp.tag, t, variant, poly, e));
    }
    return out;
  });
  return canonical(std::move(records));
}

std::vector<IsogenyClassRecord> enumerate_impl(std::int64_t p, int n, int g, bool parallel) {
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  if (n < 1) throw OutOfRange("exponent n must be >= 1, got " + std::to_string(n));
  return n % 2 == 0 ? enumerate_even_impl(p, n, g, parallel) : enumerate_odd_impl(p, n, g, parallel);
}

}  // namespace

std::string_view to_string(SignVariant v) {
  switch (v) {
    case SignVariant::A: return "A";
    case SignVariant::B: return "B";
    case SignVariant::None: return "none";
  }
  return "?";
}

Multiplicity multiplicity_even(std::int64_t p, std::int64_t m) {
  if (m < 1) throw OutOfRange("m must be >= 1");
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  std::int64_t s = m;
  std::int64_t pk = 1;
  while (s % p == 0) {
    s /= p;
    pk *= p;
  }
  std::int64_t r = multiplicative_order(p, s);
  if (pk > 1) r *= pk - pk / p;
  return {r, r % 2 == 0 ? 1 : 2};
}

std::vector<IsogenyClassRecord> enumerate_even(std::int64_t p, int n, int g) {
  return enumerate_even_impl(p, n, g, true);
}

std::vector<IsogenyClassRecord> enumerate_odd(std::int64_t p, int n, int g) {
  return enumerate_odd_impl(p, n, g, true);
}

std::vector<IsogenyClassRecord> enumerate(std::int64_t p, int n, int g) { return enumerate_impl(p, n, g, true); }

std::vector<IsogenyClassRecord> enumerate_serial(std::int64_t p, int n, int g) {
  return enumerate_impl(p, n, g, false);
}

}  // namespace ssav
