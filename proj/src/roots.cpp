#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include "ssav/errors.hpp"
#include "ssav/oracle.hpp"

namespace ssav {

namespace {

using cd = std::complex<double>;

// log|x| for a nonzero integer, safe beyond the double range.
double log_abs(const BigInt& x) {
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, x.get_mpz_t());
  return std::log(std::abs(mant)) + static_cast<double>(exp) * std::numbers::ln2;
}

struct Eval {
  cd value;
  cd deriv;
  double magnitude;  // sum |a_j| |z|^j, the backward-error scale
};

Eval horner(const std::vector<double>& a, cd z) {
  Eval e{0.0, 0.0, 0.0};
  const double az = std::abs(z);
  for (std::size_t j = a.size(); j-- > 0;) {
    e.deriv = e.deriv * z + e.value;
    e.value = e.value * z + a[j];
    e.magnitude = e.magnitude * az + std::abs(a[j]);
  }
  return e;
}

bool backward_stable(const std::vector<double>& a, const std::vector<cd>& z) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  const double slack = 64.0 * static_cast<double>(a.size());
  for (const auto& zk : z) {
    const Eval e = horner(a, zk);
    if (std::abs(e.value) > slack * eps * e.magnitude) return false;
  }
  return true;
}

}  // namespace

std::vector<cd> find_roots(const IntegerPolynomial& P) {
  const int d = P.degree();
  if (d < 1) throw BadArguments("find_roots needs a nonconstant polynomial");
  // Zero roots are exact; the iteration only sees the part with P(0) != 0.
  std::size_t low = 0;
  while (sgn(P.coeff(low)) == 0) ++low;
  if (low > 0) {
    const auto c = P.coeffs();
    auto roots = low == static_cast<std::size_t>(d)
                     ? std::vector<cd>{}
                     : find_roots(IntegerPolynomial(std::vector<BigInt>(c.begin() + static_cast<std::ptrdiff_t>(low), c.end())));
    roots.resize(static_cast<std::size_t>(d), cd(0.0));
    return roots;
  }
  const auto du = static_cast<std::size_t>(d);

  // Substitute X = rho w with rho the geometric mean of the root moduli, so
  // the roots of the working polynomial cluster around the unit circle.
  const double log_lead = log_abs(P.leading());
  const double log_rho = (log_abs(P.coeff(0)) - log_lead) / static_cast<double>(du);
  std::vector<double> a(du + 1, 0.0);
  for (std::size_t j = 0; j <= du; ++j) {
    const BigInt c = P.coeff(j);
    if (sgn(c) == 0) continue;
    const double log_mag = log_abs(c) - log_lead + (static_cast<double>(j) - static_cast<double>(du)) * log_rho;
    a[j] = (sgn(c) * sgn(P.leading()) > 0 ? 1.0 : -1.0) * std::exp(log_mag);
  }
  const double rho = std::exp(log_rho);

  std::mt19937_64 rng(0x5eed);
  std::uniform_real_distribution<double> jitter(-0.05, 0.05);
  std::vector<cd> z(du);
  for (std::size_t k = 0; k < du; ++k) {
    const double angle = (2.0 * std::numbers::pi * (static_cast<double>(k) + 0.25 + jitter(rng))) / static_cast<double>(du);
    z[k] = std::polar(1.0 + jitter(rng), angle);
  }

  constexpr int kMaxIterations = 1000;
  constexpr int kPatience = 40;
  double best = std::numeric_limits<double>::infinity();
  int since_best = 0;
  for (int it = 0; it < kMaxIterations; ++it) {
    double largest_step = 0.0;
    for (std::size_t k = 0; k < du; ++k) {
      const Eval e = horner(a, z[k]);
      if (e.value == cd(0.0)) continue;
      const cd ratio = e.value / e.deriv;
      cd repulsion = 0.0;
      for (std::size_t j = 0; j < du; ++j) {
        if (j != k) repulsion += 1.0 / (z[k] - z[j]);
      }
      const cd step = ratio / (1.0 - ratio * repulsion);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) continue;
      z[k] -= step;
      largest_step = std::max(largest_step, std::abs(step));
    }
    if (largest_step <= 1e-15) break;
    if (largest_step < best) {
      best = largest_step;
      since_best = 0;
    } else if (++since_best > kPatience) {
      break;
    }
  }
  if (!backward_stable(a, z)) throw NoConvergence("Aberth iteration did not reach a backward-stable root set");
  for (auto& zk : z) zk *= rho;
  return z;
}

}  // namespace ssav
