#include <doctest.h>

#include <set>

#include "pcamce/errors.hpp"
#include "pcamce/gf2m.hpp"
#include "pcamce/rng.hpp"

using namespace pcamce;

namespace {

// Shift-and-add multiply with reduction; shares nothing with the log tables.
std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b, unsigned m, std::uint32_t poly) {
  std::uint32_t acc = 0;
  for (unsigned i = 0; i < m; ++i)
    if ((b >> i) & 1U) acc ^= a << i;
  for (int d = 2 * static_cast<int>(m) - 2; d >= static_cast<int>(m); --d)
    if ((acc >> d) & 1U) acc ^= poly << (d - static_cast<int>(m));
  return acc;
}

FieldPoly random_poly(const GaloisField& f, std::size_t max_deg, Rng& rng) {
  std::vector<GfElem> c(1 + rng.uniform(max_deg + 1));
  for (auto& x : c) x = static_cast<GfElem>(rng.uniform(f.order()));
  return FieldPoly(c);
}

}  // namespace

TEST_CASE("GF(2^4) example and the slow multiply oracle") {
  const GaloisField f(4, 0b10011);
  CHECK(f.mul(0b0010, 0b1000) == 0b0011);
  for (unsigned m : {3u, 4u, 8u, 10u, 13u}) {
    const GaloisField g(m);
    Rng rng(std::uint64_t{m});
    for (int i = 0; i < 500; ++i) {
      const auto a = static_cast<GfElem>(rng.uniform(g.order()));
      const auto b = static_cast<GfElem>(rng.uniform(g.order()));
      CHECK(g.mul(a, b) == slow_mul(a, b, m, g.reduction_poly()));
    }
  }
}

TEST_CASE("field axioms on random triples") {
  for (unsigned m : {3u, 4u, 8u, 10u}) {
    const GaloisField f(m);
    Rng rng(std::uint64_t{100 + m});
    for (int i = 0; i < 1000; ++i) {
      const auto a = static_cast<GfElem>(rng.uniform(f.order()));
      const auto b = static_cast<GfElem>(rng.uniform(f.order()));
      const auto c = static_cast<GfElem>(rng.uniform(f.order()));
      CHECK(GaloisField::add(a, a) == 0);
      CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
      CHECK(f.mul(a, GaloisField::add(b, c)) == GaloisField::add(f.mul(a, b), f.mul(a, c)));
      if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
      CHECK(f.square(f.sqrt(a)) == a);
    }
    CHECK_THROWS_AS(f.inv(0), DivisionByZero);
  }
}

TEST_CASE("field construction validates the reduction polynomial") {
  CHECK_THROWS_AS(GaloisField(4, 0b10001), ParameterError);  // x^4 + 1 = (x + 1)^4
  CHECK_THROWS_AS(GaloisField(4, 0b1011), ParameterError);   // wrong degree
  CHECK(GaloisField::is_irreducible_binary(0b10011));
  CHECK_FALSE(GaloisField::is_irreducible_binary(0b10101));  // (x^2 + x + 1)^2
  const GaloisField f(5);
  const auto elems = f.elements();
  CHECK(elems.size() == 32);
  CHECK(std::set<GfElem>(elems.begin(), elems.end()).size() == 32);
}

TEST_CASE("polynomial division and extended Euclid") {
  const GaloisField f(6);
  Rng rng(std::uint64_t{30});
  for (int i = 0; i < 300; ++i) {
    const FieldPoly a = random_poly(f, 20, rng);
    FieldPoly b = random_poly(f, 12, rng);
    if (b.is_zero()) b = FieldPoly::constant(1);
    auto [q, r] = poly_divmod(f, a, b);
    CHECK(poly_add(poly_mul(f, q, b), r) == a);
    CHECK(r.degree() < b.degree());
  }
  for (int i = 0; i < 200; ++i) {
    const FieldPoly a = random_poly(f, 8, rng), b = random_poly(f, 8, rng);
    const auto e = poly_eea(f, a, b);
    CHECK(poly_add(poly_mul(f, e.u, a), poly_mul(f, e.v, b)) == e.gcd);
  }
  const FieldPoly a({3, 5, 1});
  CHECK(poly_gcd(f, a, FieldPoly()) == poly_monic(f, a));
  CHECK(poly_gcd(f, a, a) == poly_monic(f, a));
  CHECK_THROWS_AS(poly_divmod(f, a, FieldPoly()), DivisionByZero);
}

TEST_CASE("eea_until stops at the degree bound with r = v b mod g") {
  const GaloisField f(5);
  Rng rng(std::uint64_t{31});
  const FieldPoly g = random_irreducible(8, f, rng);
  for (int i = 0; i < 100; ++i) {
    const FieldPoly b = poly_mod(f, random_poly(f, 7, rng), g);
    auto [r, v] = poly_eea_until(f, g, b, 4);
    CHECK(r.degree() <= 4);
    CHECK(poly_mod(f, poly_mul(f, v, b), g) == poly_mod(f, r, g));
  }
}

TEST_CASE("random irreducible polynomials have no roots") {
  for (unsigned m : {4u, 6u, 8u}) {
    const GaloisField f(m);
    Rng rng(std::uint64_t{40 + m});
    for (std::size_t t : {1u, 2u, 3u, 5u}) {
      const FieldPoly g = random_irreducible(t, f, rng);
      CHECK(g.degree() == static_cast<int>(t));
      CHECK(g.leading() == 1);
      if (t > 1)
        for (GfElem x : f.elements()) CHECK(poly_eval(f, g, x) != 0);
    }
  }
}

TEST_CASE("irreducibility test against trial division by monic linears and quadratics") {
  // For degree <= 3 (and degree 4 with no quadratic factor), no root means
  // irreducible; the oracle checks roots and divides by all monic quadratics.
  const GaloisField f(4);
  Rng rng(std::uint64_t{50});
  for (int i = 0; i < 60; ++i) {
    std::vector<GfElem> c(5);
    for (auto& x : c) x = static_cast<GfElem>(rng.uniform(16));
    c[4] = 1;
    const FieldPoly p(c);
    bool reducible = false;
    for (GfElem x : f.elements()) reducible |= poly_eval(f, p, x) == 0;
    for (GfElem a = 0; a < 16 && !reducible; ++a)
      for (GfElem b = 0; b < 16 && !reducible; ++b)
        reducible |= poly_mod(f, p, FieldPoly({b, a, 1})).is_zero();
    CHECK(poly_is_irreducible(f, p) == !reducible);
  }
  // t=2, m=4: a seeded draw checked against every monic linear factor.
  Rng seeded(std::uint64_t{2});
  const FieldPoly g = random_irreducible(2, f, seeded);
  for (GfElem a = 0; a < 16; ++a) CHECK_FALSE(poly_mod(f, g, FieldPoly({a, 1})).is_zero());
}

TEST_CASE("square roots modulo g") {
  const GaloisField f(6);
  Rng rng(std::uint64_t{60});
  const FieldPoly g = random_irreducible(5, f, rng);
  CHECK(poly_sqrt_mod_g(f, FieldPoly::constant(1), g) == FieldPoly::constant(1));
  const FieldPoly x2 = FieldPoly::monomial(2);
  CHECK(poly_square_mod(f, poly_sqrt_mod_g(f, x2, g), g) == x2);
  for (int i = 0; i < 100; ++i) {
    const FieldPoly p = poly_mod(f, random_poly(f, 4, rng), g);
    CHECK(poly_square_mod(f, poly_sqrt_mod_g(f, p, g), g) == p);
  }
}

TEST_CASE("inverse modulo g") {
  const GaloisField f(5);
  Rng rng(std::uint64_t{61});
  const FieldPoly g = random_irreducible(6, f, rng);
  for (int i = 0; i < 50; ++i) {
    const FieldPoly a = poly_mod(f, random_poly(f, 5, rng), g);
    if (a.is_zero()) continue;
    CHECK(poly_mulmod(f, a, poly_inv_mod(f, a, g), g) == FieldPoly::constant(1));
  }
  CHECK_THROWS_AS(poly_inv_mod(f, g, g), DivisionByZero);
}
