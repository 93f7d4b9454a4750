#include "ssav/psipoly.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "ssav/cyclofield.hpp"
#include "ssav/errors.hpp"
#include "ssav/numthy.hpp"

namespace ssav {

namespace {

struct LinearRoot {
  int sign;           // +1 or -1
  std::int64_t expo;  // root is sign * zeta_N^expo
};

// prod (X - root) over the given roots, with coefficients in Z[Y]/(Y^N - 1)
// (multiplication by zeta_N is a rotation there), then each coefficient is
// reduced mod Phi_N and split as rat + rad * root_d.
QuadraticPolynomial product_of_linear_factors(std::int64_t level, const std::vector<LinearRoot>& roots,
                                              std::int64_t radicand, const CyclotomicElement& sqrt_d) {
  const auto n = static_cast<std::size_t>(level);
  std::vector<std::vector<BigInt>> coeffs(1, std::vector<BigInt>(n));
  coeffs[0][0] = 1;
  for (const auto& root : roots) {
    const auto shift = static_cast<std::size_t>(root.expo % level);
    std::vector<std::vector<BigInt>> next(coeffs.size() + 1, std::vector<BigInt>(n));
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const BigInt& c = coeffs[j][k];
        if (sgn(c) == 0) continue;
        next[j + 1][k] += c;
        // -(sign * zeta^shift) * c zeta^k
        if (root.sign > 0) {
          next[j][(k + shift) % n] -= c;
        } else {
          next[j][(k + shift) % n] += c;
        }
      }
    }
    coeffs = std::move(next);
  }

  std::vector<BigInt> rational(coeffs.size());
  std::vector<BigInt> radical(coeffs.size());
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    const auto elem = CyclotomicElement::from_cyclic(level, coeffs[j]);
    const auto [rat, rad] = descend_quadratic(elem, sqrt_d);
    if ((j % 2 == 0 && sgn(rad) != 0) || (j % 2 == 1 && sgn(rat) != 0)) {
      throw std::logic_error("half-cyclotomic coefficient violates the parity layout");
    }
    rational[j] = rat;
    radical[j] = rad;
  }
  return QuadraticPolynomial(radicand, IntegerPolynomial(std::move(rational)),
                             IntegerPolynomial(std::move(radical)));
}

template <class Key>
class Memo {
 public:
  template <class Build>
  QuadraticPolynomial get(const Key& key, Build&& build) {
    {
      std::lock_guard lock(mu_);
      if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    }
    QuadraticPolynomial value = build();
    std::lock_guard lock(mu_);
    cache_.emplace(key, value);
    return value;
  }

 private:
  std::mutex mu_;
  std::map<Key, QuadraticPolynomial> cache_;
};

void render_term(std::ostringstream& os, bool& first, const BigInt& c, bool with_root, std::size_t k) {
  if (sgn(c) == 0) return;
  const BigInt mag = abs(c);
  if (first) {
    if (sgn(c) < 0) os << '-';
  } else {
    os << (sgn(c) < 0 ? " - " : " + ");
  }
  first = false;
  bool need_star = false;
  if (mag != 1 || (!with_root && k == 0)) {
    os << mag.get_str();
    need_star = true;
  }
  if (with_root) {
    os << (need_star ? "*" : "") << 's';
    need_star = true;
  }
  if (k > 0) {
    os << (need_star ? "*" : "") << 'X';
    if (k > 1) os << '^' << k;
  }
}

}  // namespace

QuadraticPolynomial::QuadraticPolynomial(std::int64_t radicand, IntegerPolynomial rational,
                                         IntegerPolynomial radical)
    : radicand_(radicand), rational_(std::move(rational)), radical_(std::move(radical)) {
  if (radicand_ == 0) throw BadArguments("radicand must be nonzero");
  if (!rational_.is_monic() || rational_.degree() % 2 != 0) {
    throw BadArguments("rational part must be monic of even degree");
  }
  if (!rational_.is_even()) throw BadArguments("rational part has odd-exponent terms");
  const auto rc = radical_.coeffs();
  for (std::size_t j = 0; j < rc.size(); j += 2) {
    if (sgn(rc[j]) != 0) throw BadArguments("radical part has even-exponent terms");
  }
  if (radical_.degree() >= rational_.degree()) throw BadArguments("radical part reaches the leading term");
}

std::string QuadraticPolynomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = static_cast<std::size_t>(degree()) + 1; k-- > 0;) {
    if (k % 2 == 0) {
      render_term(os, first, rational_.coeff(k), false, k);
    } else {
      render_term(os, first, radical_.coeff(k), true, k);
    }
  }
  os << " where s^2 = " << radicand_;
  return os.str();
}

QuadraticPolynomial psi(std::int64_t p, std::int64_t t) {
  if (p <= 2 || !is_prime(p)) throw BadArguments("psi: p must be an odd prime");
  if (t < 1 || t % 2 == 0) throw BadArguments("psi: t must be odd and positive");
  static Memo<std::pair<std::int64_t, std::int64_t>> memo;
  return memo.get({p, t}, [p, t] {
    const std::int64_t level = p * t;
    std::vector<LinearRoot> roots;
    for (std::int64_t a = 1; a < level; ++a) {
      if (std::gcd(a, level) == 1) roots.push_back({legendre(a, p), a});
    }
    return product_of_linear_factors(level, roots, p_star(p), embed(gauss_sum(p), level));
  });
}

QuadraticPolynomial psi_two(std::int64_t t, TwoSign sign) {
  if (t < 1 || t % 2 == 0) throw BadArguments("psi_two: t must be odd and positive");
  static Memo<std::pair<std::int64_t, int>> memo;
  return memo.get({t, sign == TwoSign::Plus ? 1 : -1}, [t, sign] {
    // zeta_8 = zeta_8t^t and zeta_t = zeta_8t^8.
    const std::int64_t level = 8 * t;
    const std::int64_t partner = sign == TwoSign::Plus ? 7 : 3;
    std::vector<LinearRoot> roots;
    for (std::int64_t a = 0; a < t; ++a) {
      if (std::gcd(a, t) != 1) continue;
      roots.push_back({1, (t + 8 * a) % level});
      roots.push_back({1, (partner * t + 8 * a) % level});
    }
    const auto root = sign == TwoSign::Plus ? sqrt_two_elem() : sqrt_minus_two_elem();
    return product_of_linear_factors(level, roots, sign == TwoSign::Plus ? 2 : -2, embed(root, level));
  });
}

QuadraticPolynomial psi_negate(const QuadraticPolynomial& psi) {
  return QuadraticPolynomial(psi.radicand(), psi.rational_part(), -psi.radical_part());
}

QuadraticPolynomial operator*(const QuadraticPolynomial& a, const QuadraticPolynomial& b) {
  if (a.radicand() != b.radicand()) throw BadArguments("radicands differ");
  const BigInt d = big(a.radicand());
  const auto& e1 = a.rational_part();
  const auto& o1 = a.radical_part();
  const auto& e2 = b.rational_part();
  const auto& o2 = b.radical_part();
  return QuadraticPolynomial(a.radicand(), e1 * e2 + d * (o1 * o2), e1 * o2 + o1 * e2);
}

QuadraticPolynomial compose_power(const QuadraticPolynomial& psi, unsigned k) {
  if (k % 2 == 0) throw BadArguments("compose_power on a quadratic polynomial needs odd k");
  return QuadraticPolynomial(psi.radicand(), compose_power(psi.rational_part(), k),
                             compose_power(psi.radical_part(), k));
}

IntegerPolynomial norm_product(const QuadraticPolynomial& psi) {
  const auto& e = psi.rational_part();
  const auto& o = psi.radical_part();
  return e * e - big(psi.radicand()) * (o * o);
}

}  // namespace ssav
