#include "strang/polynomial.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "strang/field.hpp"

namespace strang {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::monomial(BigInt c, std::size_t k) {
  std::vector<BigInt> v(k + 1, 0);
  v[k] = std::move(c);
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::vector<int> IntPoly::mod2() const {
  std::vector<int> out(c_.size());
  for (std::size_t k = 0; k < c_.size(); ++k) out[k] = static_cast<int>(boost::multiprecision::abs(c_[k]) % 2);
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::size_t IntPoly::t_valuation() const {
  if (is_zero()) throw Error("zero-polynomial", "t-valuation of 0");
  std::size_t k = 0;
  while (c_[k] == 0) ++k;
  return k;
}

std::string IntPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const BigInt& v = c_[i];
    if (v == 0) continue;
    const BigInt mag = boost::multiprecision::abs(v);
    if (first) {
      if (v < 0) os << "-";
    } else {
      os << (v < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || i == 0) os << mag;
    if (i >= 1) os << "t";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

std::string IntPoly::coeff_list() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t k = 0; k < c_.size(); ++k) os << (k ? "," : "") << c_[k];
  os << "]";
  return os.str();
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<BigInt> v(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t k = 0; k < a.c_.size(); ++k) v[k] += a.c_[k];
  for (std::size_t k = 0; k < b.c_.size(); ++k) v[k] += b.c_[k];
  return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + BigInt(-1) * b; }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> v(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return IntPoly(std::move(v));
}

IntPoly operator*(const BigInt& k, const IntPoly& a) {
  std::vector<BigInt> v = a.c_;
  for (auto& x : v) x *= k;
  return IntPoly(std::move(v));
}

IntPoly minpoly_halfroot(int l) {
  if (l < 2) throw Error("bad-argument", "minpoly_halfroot needs l >= 2, got " + std::to_string(l));
  IntPoly q = IntPoly::t();
  for (int k = 3; k <= l; ++k) q = q * q - IntPoly::constant(2);
  return q;
}

IntPoly pd(int d) {
  if (d < 3) throw Error("bad-argument", "pd needs d >= 3, got " + std::to_string(d));
  IntPoly p = IntPoly::constant(1);
  IntPoly q = IntPoly::t();
  for (int l = 2; l <= d - 1; ++l) {
    p = p * q;
    q = q * q - IntPoly::constant(2);
  }
  return p;
}

std::vector<IntPoly> presentation_ideal(int d) {
  const IntPoly p = pd(d);
  return {IntPoly::t() * p, BigInt(2) * p};
}

std::size_t mod2_quotient_dim(int d) {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (const auto& g : presentation_ideal(d)) {
    const auto bits = g.mod2();
    if (bits.empty()) continue;
    const auto v = static_cast<std::size_t>(std::find(bits.begin(), bits.end(), 1) - bits.begin());
    best = std::min(best, v);
  }
  if (best == std::numeric_limits<std::size_t>::max()) throw Error("zero-polynomial", "ideal vanishes mod 2");
  return best;
}

BigInt resultant(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  const auto m = static_cast<std::size_t>(a.degree());
  const auto n = static_cast<std::size_t>(b.degree());
  const std::size_t size = m + n;
  if (size == 0) return 1;
  std::vector<std::vector<BigInt>> s(size, std::vector<BigInt>(size, 0));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k <= m; ++k) s[r][r + k] = a.coeff(m - k);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t k = 0; k <= n; ++k) s[n + r][r + k] = b.coeff(n - k);

  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < size; ++k) {
    if (s[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < size && s[r][k] == 0) ++r;
      if (r == size) return 0;
      std::swap(s[k], s[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < size; ++i) {
      for (std::size_t j = k + 1; j < size; ++j) s[i][j] = (s[i][j] * s[k][k] - s[i][k] * s[k][j]) / prev;
      s[i][k] = 0;
    }
    prev = s[k][k];
  }
  return sign * s[size - 1][size - 1];
}

namespace {

struct MpfrVar {
  mpfr_t v;
  explicit MpfrVar(mpfr_prec_t prec) { mpfr_init2(v, prec); }
  ~MpfrVar() { mpfr_clear(v); }
  MpfrVar(const MpfrVar&) = delete;
  MpfrVar& operator=(const MpfrVar&) = delete;
};

// max_k |q(2cos((2k+1)π/2^{l-1}))| at the given precision, as (mantissa double, exponent).
std::pair<double, long> residual_at(const IntPoly& q, int l, mpfr_prec_t prec) {
  const auto& c = q.coeffs();
  std::vector<std::string> digits;
  digits.reserve(c.size());
  for (const auto& x : c) digits.push_back(x.str());

  MpfrVar pi(prec), x(prec), acc(prec), coef(prec), worst(prec);
  mpfr_const_pi(pi.v, MPFR_RNDN);
  mpfr_set_zero(worst.v, 1);
  const unsigned long roots = 1UL << (l - 2);
  const unsigned long denom = 1UL << (l - 1);
  for (unsigned long k = 0; k < roots; ++k) {
    mpfr_mul_ui(x.v, pi.v, 2 * k + 1, MPFR_RNDN);
    mpfr_div_ui(x.v, x.v, denom, MPFR_RNDN);
    mpfr_cos(x.v, x.v, MPFR_RNDN);
    mpfr_mul_ui(x.v, x.v, 2, MPFR_RNDN);
    mpfr_set_zero(acc.v, 1);
    for (std::size_t i = digits.size(); i-- > 0;) {
      mpfr_mul(acc.v, acc.v, x.v, MPFR_RNDN);
      mpfr_set_str(coef.v, digits[i].c_str(), 10, MPFR_RNDN);
      mpfr_add(acc.v, acc.v, coef.v, MPFR_RNDN);
    }
    mpfr_abs(acc.v, acc.v, MPFR_RNDN);
    if (mpfr_cmp(acc.v, worst.v) > 0) mpfr_set(worst.v, acc.v, MPFR_RNDN);
  }
  if (mpfr_zero_p(worst.v)) return {0.0, 0};
  long e = 0;
  const double mant = mpfr_get_d_2exp(&e, worst.v, MPFR_RNDN);
  return {mant, e};
}

}  // namespace

RootSanity root_sanity(int l, unsigned bits) {
  const IntPoly q = minpoly_halfroot(l);
  unsigned prec = std::max({bits, 64U, 4U * (1U << (l - 2))});
  RootSanity r;
  for (int step = 0; step <= 6; ++step, prec *= 2) {
    const auto [mant, e] = residual_at(q, l, static_cast<mpfr_prec_t>(prec));
    r.precision = prec;
    if (mant == 0.0) {
      r.residual = 0;
      r.log2_residual = -std::numeric_limits<double>::infinity();
      r.stable = true;
      break;
    }
    r.residual = std::ldexp(mant, static_cast<int>(std::max<long>(e, -1100)));
    r.log2_residual = std::log2(mant) + static_cast<double>(e);
    if (r.log2_residual < -static_cast<double>(prec) / 2) {
      r.stable = true;
      break;
    }
  }
  return r;
}

}  // namespace strang
