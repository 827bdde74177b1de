#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <string>
#include <vector>

namespace strang {

using BigInt = boost::multiprecision::cpp_int;

/// Integer polynomial in t, coefficients ascending. The zero polynomial has no coefficients.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);
  static IntPoly monomial(BigInt c, std::size_t k);
  static IntPoly t() { return monomial(1, 1); }
  static IntPoly constant(BigInt c) { return monomial(std::move(c), 0); }

  bool is_zero() const noexcept { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const noexcept { return c_; }
  /// Coefficient of t^k (zero past the degree).
  BigInt coeff(std::size_t k) const { return k < c_.size() ? c_[k] : BigInt(0); }
  BigInt leading() const { return c_.empty() ? BigInt(0) : c_.back(); }
  bool is_monic() const { return leading() == 1; }

  /// Coefficients mod 2 (0/1), trailing zeros trimmed.
  std::vector<int> mod2() const;
  /// Largest k with t^k dividing the polynomial; throws Error("zero-polynomial") for 0.
  std::size_t t_valuation() const;

  /// "t^3 - 2t".
  std::string str() const;
  /// "[0,-2,0,1]".
  std::string coeff_list() const;

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const BigInt& k, const IntPoly& a);
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

 private:
  void trim();
  std::vector<BigInt> c_;
};

/// q_2 = t, q_l = q_{l-1}^2 - 2. Throws Error("bad-argument") for l < 2.
IntPoly minpoly_halfroot(int l);
/// p_d = q_2 ... q_{d-1}. Throws Error("bad-argument") for d < 3.
IntPoly pd(int d);

/// The generators t·p_d and 2·p_d of the presentation ideal.
std::vector<IntPoly> presentation_ideal(int d);
/// k-dimension of k[[t]] modulo the mod-2 reduction of presentation_ideal(d): the least
/// t-valuation among the nonzero reduced generators.
std::size_t mod2_quotient_dim(int d);

/// Determinant of the Sylvester matrix, by fraction-free elimination.
BigInt resultant(const IntPoly& a, const IntPoly& b);

struct RootSanity {
  /// max over the roots 2cos((2k+1)π/2^{l-1}) of |q_l(root)|, rounded to double.
  double residual = 0;
  /// log2 of the residual; -inf for an exact zero.
  double log2_residual = 0;
  unsigned precision = 0;
  /// The last doubling kept the residual below 2^{-precision/2}.
  bool stable = false;
};

/// Evaluates q_l at its roots with MPFR, starting at max(bits, 64, 4·2^{l-2}) bits and
/// doubling (at most 6 times) until the residual is below 2^{-precision/2}.
RootSanity root_sanity(int l, unsigned bits);

}  // namespace strang
