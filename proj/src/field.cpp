#include "strang/field.hpp"

#include <bit>

namespace strang {

namespace {

int poly_degree(unsigned p) noexcept { return p == 0 ? -1 : static_cast<int>(std::bit_width(p)) - 1; }

}  // namespace

unsigned gf2_poly_mod(unsigned a, unsigned b) noexcept {
  const int db = poly_degree(b);
  while (poly_degree(a) >= db) {
    a ^= b << (poly_degree(a) - db);
  }
  return a;
}

unsigned gf2_poly_mulmod(unsigned a, unsigned b, unsigned modulus) noexcept {
  unsigned acc = 0;
  const int dm = poly_degree(modulus);
  while (b != 0) {
    if (b & 1u) acc ^= a;
    b >>= 1;
    a <<= 1;
    if (poly_degree(a) == dm) a ^= modulus;
  }
  return gf2_poly_mod(acc, modulus);
}

bool gf2_poly_irreducible(unsigned poly) noexcept {
  const int d = poly_degree(poly);
  if (d < 1) return false;
  for (unsigned g = 2; poly_degree(g) <= d / 2; ++g) {
    if (gf2_poly_mod(poly, g) == 0) return false;
  }
  return true;
}

unsigned Field::standard_modulus(unsigned degree) {
  switch (degree) {
    case 1: return 0b10;
    case 2: return 0b111;
    case 3: return 0b1011;
    case 4: return 0b10011;
    case 8: return 0b100011101;
    default:
      throw Error("unsupported-field", "GF(2^" + std::to_string(degree) + ") is not supported");
  }
}

Field Field::gf(unsigned degree) { return Field(degree, standard_modulus(degree)); }

Field Field::of_size(unsigned size) {
  if (size < 2 || !std::has_single_bit(size)) {
    throw Error("unsupported-field", "field size " + std::to_string(size) + " is not a power of 2");
  }
  return gf(static_cast<unsigned>(std::countr_zero(size)));
}

Field::Field(unsigned degree, unsigned modulus) : degree_(degree), modulus_(modulus) {
  if (degree == 0 || degree > 8) {
    throw Error("unsupported-field", "degree must lie in 1..8");
  }
  if (poly_degree(modulus) != static_cast<int>(degree) || !gf2_poly_irreducible(modulus)) {
    throw Error("reducible-modulus", "modulus " + std::to_string(modulus) +
                                         " is not irreducible of degree " + std::to_string(degree));
  }
  auto t = std::make_shared<Tables>();
  t->mul.assign(256 * 256, 0);
  const unsigned q = 1u << degree;
  for (unsigned x = 0; x < q; ++x) {
    for (unsigned y = 0; y < q; ++y) {
      const auto p = static_cast<Elem>(gf2_poly_mulmod(x, y, modulus));
      t->mul[(x << 8) | y] = p;
      if (p == 1) t->inv[x] = static_cast<Elem>(y);
    }
  }
  for (unsigned c = 0; c < q; ++c) {
    for (unsigned n = 0; n < 16; ++n) {
      t->nibbles[c].lo[n] = n < q ? t->mul[(c << 8) | n] : Elem{0};
      const unsigned high = n << 4;
      t->nibbles[c].hi[n] = high < q ? t->mul[(c << 8) | high] : Elem{0};
    }
  }
  tables_ = std::move(t);
}

Elem Field::inv(Elem x) const {
  if (x == 0) throw Error("zero-division", "inverse of 0 in " + name());
  return tables_->inv[x];
}

Elem Field::pow(Elem x, unsigned n) const noexcept {
  Elem acc = 1;
  while (n != 0) {
    if (n & 1u) acc = mul(acc, x);
    x = mul(x, x);
    n >>= 1;
  }
  return acc;
}

std::vector<Elem> Field::units() const {
  std::vector<Elem> out;
  for (unsigned x = 1; x < size(); ++x) out.push_back(static_cast<Elem>(x));
  return out;
}

}  // namespace strang
