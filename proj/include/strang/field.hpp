#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace strang {

/// Error carrying a short machine-readable code ("zero-division", "defect-too-small", ...).
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

/// A GF(2^e) element: bit i is the coefficient of t^i. Every supported degree fits in a byte.
using Elem = std::uint8_t;

/// Nibble lookup tables for multiplication by a fixed coefficient:
/// c*x == lo[x & 15] ^ hi[x >> 4].
struct NibbleTables {
  std::array<Elem, 16> lo{};
  std::array<Elem, 16> hi{};
};

/// Arithmetic context for GF(2^e), e in {1,2,3,4,8}, with fixed moduli:
///   e=1: x,  e=2: x^2+x+1,  e=3: x^3+x+1,  e=4: x^4+x+1,  e=8: x^8+x^4+x^3+x^2+1.
/// Copies share the lookup tables.
class Field {
 public:
  /// Field of size 2^degree with the standard modulus.
  static Field gf(unsigned degree);
  /// Field from a field size (2, 4, 8, 16, 256).
  static Field of_size(unsigned size);

  /// Standard modulus for a supported degree; throws Error("unsupported-field") otherwise.
  static unsigned standard_modulus(unsigned degree);

  /// Builds the field, checking that `modulus` is irreducible of degree `degree`.
  Field(unsigned degree, unsigned modulus);

  unsigned degree() const noexcept { return degree_; }
  unsigned modulus() const noexcept { return modulus_; }
  unsigned size() const noexcept { return 1u << degree_; }

  bool valid(unsigned x) const noexcept { return x < size(); }

  static Elem add(Elem x, Elem y) noexcept { return static_cast<Elem>(x ^ y); }
  Elem mul(Elem x, Elem y) const noexcept { return tables_->mul[(std::size_t{x} << 8) | y]; }
  /// Throws Error("zero-division") for x == 0.
  Elem inv(Elem x) const;
  Elem pow(Elem x, unsigned n) const noexcept;

  const NibbleTables& nibbles(Elem coef) const noexcept { return tables_->nibbles[coef]; }

  /// Nonzero elements in increasing encoding order.
  std::vector<Elem> units() const;

  /// "F_4"-style name.
  std::string name() const { return "F_" + std::to_string(size()); }

  friend bool operator==(const Field& a, const Field& b) noexcept {
    return a.degree_ == b.degree_ && a.modulus_ == b.modulus_;
  }

 private:
  struct Tables {
    std::vector<Elem> mul;  // 256 x 256, only the low 2^e x 2^e block is meaningful
    std::array<Elem, 256> inv{};
    std::array<NibbleTables, 256> nibbles{};
  };

  unsigned degree_;
  unsigned modulus_;
  std::shared_ptr<const Tables> tables_;
};

/// Carry-less product of two GF(2)[x] polynomials reduced by `modulus`.
unsigned gf2_poly_mulmod(unsigned a, unsigned b, unsigned modulus) noexcept;

/// Remainder of GF(2)[x] polynomial division.
unsigned gf2_poly_mod(unsigned a, unsigned b) noexcept;

/// Irreducibility over GF(2) by trial division.
bool gf2_poly_irreducible(unsigned poly) noexcept;

}  // namespace strang
