#include <doctest.h>

#include "gen.hpp"
#include "strang/polynomial.hpp"

using namespace strang;

namespace {

/// Dickson recurrence D_0 = 2, D_1 = t, D_{n+1} = t D_n - D_{n-1}, i.e. D_n(t) = 2 T_n(t/2).
std::vector<BigInt> dickson(std::size_t n) {
  std::vector<BigInt> prev{2}, cur{0, 1};
  if (n == 0) return prev;
  for (std::size_t k = 1; k < n; ++k) {
    std::vector<BigInt> next(cur.size() + 1, 0);
    for (std::size_t j = 0; j < cur.size(); ++j) next[j + 1] += cur[j];
    for (std::size_t j = 0; j < prev.size(); ++j) next[j] -= prev[j];
    prev = std::move(cur);
    cur = std::move(next);
  }
  while (!cur.empty() && cur.back() == 0) cur.pop_back();
  return cur;
}

IntPoly random_poly(std::size_t maxdeg) {
  std::vector<BigInt> c(gen::below(maxdeg + 1) + 1);
  for (auto& x : c) x = static_cast<long>(gen::below(41)) - 20;
  return IntPoly(c);
}

}  // namespace

TEST_CASE("half-root minimal polynomials") {
  CHECK(minpoly_halfroot(2).str() == "t");
  CHECK(minpoly_halfroot(3).str() == "t^2 - 2");
  CHECK(minpoly_halfroot(4).str() == "t^4 - 4t^2 + 2");
  CHECK_THROWS_AS(minpoly_halfroot(1), Error);
}

TEST_CASE("p_d") {
  CHECK(pd(3).str() == "t");
  CHECK(pd(4).str() == "t^3 - 2t");
  CHECK(pd(4).coeff_list() == "[0,-2,0,1]");
  CHECK(pd(6).degree() == 15);
  CHECK_THROWS_AS(pd(2), Error);
  CHECK(mod2_quotient_dim(3) == 2);
  CHECK(mod2_quotient_dim(4) == 4);
}

TEST_CASE("p_d structure for 3 <= d <= 12") {
  for (int d = 3; d <= 12; ++d) {
    const IntPoly p = pd(d);
    const long deg = (1L << (d - 2)) - 1;
    REQUIRE(p.is_monic());
    REQUIRE(p.degree() == deg);
    for (long k = 0; k < deg; ++k) REQUIRE(p.coeff(static_cast<std::size_t>(k)) % 2 == 0);
    std::vector<int> want(static_cast<std::size_t>(deg) + 1, 0);
    want.back() = 1;
    REQUIRE(p.mod2() == want);
    REQUIRE(mod2_quotient_dim(d) == (std::size_t{1} << (d - 2)));
    const auto ideal = presentation_ideal(d);
    REQUIRE(ideal.size() == 2);
    REQUIRE(ideal[0] == IntPoly::t() * p);
    REQUIRE(ideal[1] == BigInt(2) * p);
  }
}

TEST_CASE("Chebyshev oracle") {
  for (int l = 2; l <= 8; ++l) REQUIRE(minpoly_halfroot(l).coeffs() == dickson(std::size_t{1} << (l - 2)));
}

TEST_CASE("pairwise coprime half-root polynomials") {
  for (int a = 2; a <= 6; ++a)
    for (int b = a + 1; b <= 6; ++b) REQUIRE(resultant(minpoly_halfroot(a), minpoly_halfroot(b)) != 0);
  const IntPoly t = IntPoly::t();
  CHECK(resultant(t, t * t - IntPoly::constant(2)) == -2);
  CHECK(resultant(t * t - IntPoly::constant(1), t - IntPoly::constant(1)) == 0);
}

TEST_CASE("root sanity") {
  const auto r3 = root_sanity(3, 128);
  CHECK(r3.log2_residual < -40);
  CHECK(r3.stable);
  CHECK(root_sanity(5, 256).log2_residual < -40);
  CHECK(minpoly_halfroot(2).coeff(0) == 0);
  CHECK(root_sanity(2, 64).log2_residual < -40);
  for (int l = 2; l <= 11; ++l) {
    const auto r = root_sanity(l, 64);
    REQUIRE(r.log2_residual < -40);
    REQUIRE(r.stable);
  }
}

TEST_CASE("ring identities on random polynomials") {
  for (int trial = 0; trial < 200; ++trial) {
    const IntPoly a = random_poly(6), b = random_poly(6), c = random_poly(6);
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(a * b == b * a);
    REQUIRE((a - a).is_zero());
    REQUIRE((a + b) - b == a);
    if (!a.is_zero() && !b.is_zero()) REQUIRE((a * b).degree() == a.degree() + b.degree());
  }
}

TEST_CASE("valuation") {
  CHECK(IntPoly::monomial(3, 4).t_valuation() == 4);
  CHECK_THROWS_AS(IntPoly().t_valuation(), Error);
  CHECK(IntPoly::constant(0).is_zero());
}
