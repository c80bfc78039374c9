#include "pcamce/gf2m.hpp"

#include <bit>

#include "pcamce/errors.hpp"
#include "pcamce/rng.hpp"

namespace pcamce {
namespace {

// Shift-and-add multiply followed by reduction; only used to build tables.
std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b, unsigned m, std::uint32_t poly) {
  std::uint32_t acc = 0;
  while (b) {
    if (b & 1U) acc ^= a;
    b >>= 1;
    a <<= 1;
    if (a & (1U << m)) a ^= poly;
  }
  return acc;
}

int binary_degree(std::uint32_t p) { return p == 0 ? -1 : 31 - std::countl_zero(p); }

std::uint32_t binary_mod(std::uint32_t a, std::uint32_t b) {
  const int db = binary_degree(b);
  for (int da = binary_degree(a); da >= db; da = binary_degree(a)) a ^= b << (da - db);
  return a;
}

}  // namespace

std::uint32_t GaloisField::default_poly(unsigned m) {
  switch (m) {
    case 2: return 0x7;      // x^2+x+1
    case 3: return 0xB;      // x^3+x+1
    case 4: return 0x13;     // x^4+x+1
    case 5: return 0x25;     // x^5+x^2+1
    case 6: return 0x43;     // x^6+x+1
    case 7: return 0x83;     // x^7+x+1
    case 8: return 0x11D;    // x^8+x^4+x^3+x^2+1
    case 9: return 0x211;    // x^9+x^4+1
    case 10: return 0x409;   // x^10+x^3+1
    case 11: return 0x805;   // x^11+x^2+1
    case 12: return 0x1053;  // x^12+x^6+x^4+x+1
    case 13: return 0x201B;  // x^13+x^4+x^3+x+1
    default: throw ParameterError("no built-in reduction polynomial for m=" + std::to_string(m));
  }
}

bool GaloisField::is_irreducible_binary(std::uint32_t poly) {
  const int deg = binary_degree(poly);
  if (deg < 1) return false;
  for (int d = 1; d <= deg / 2; ++d)
    for (std::uint32_t div = 1U << d; div < (2U << d); ++div)
      if (binary_mod(poly, div) == 0) return false;
  return true;
}

GaloisField::GaloisField(unsigned m) : GaloisField(m, default_poly(m)) {}

GaloisField::GaloisField(unsigned m, std::uint32_t reduction_poly) : m_(m), poly_(reduction_poly) {
  if (m < 2 || m > 13) throw ParameterError("field degree m must be in [2, 13]");
  if (binary_degree(reduction_poly) != static_cast<int>(m))
    throw ParameterError("reduction polynomial must have degree m");
  if (!is_irreducible_binary(reduction_poly)) throw ParameterError("reduction polynomial is reducible");

  const std::uint32_t q = 1U << m;
  // The tables need a primitive element; x itself is primitive for every
  // built-in polynomial but a caller-supplied one may not be.
  std::uint32_t gen = 0;
  for (std::uint32_t cand = 2; cand < q && gen == 0; ++cand) {
    std::uint32_t v = cand;
    std::uint32_t order = 1;
    while (v != 1) {
      v = slow_mul(v, cand, m, reduction_poly);
      ++order;
    }
    if (order == q - 1) gen = cand;
  }
  if (gen == 0) gen = 1;  // q = 2 only; excluded by the range check above

  exp_.assign(2 * (q - 1), 0);
  log_.assign(q, 0);
  std::uint32_t v = 1;
  for (std::uint32_t i = 0; i < q - 1; ++i) {
    exp_[i] = static_cast<GfElem>(v);
    exp_[i + q - 1] = static_cast<GfElem>(v);
    log_[v] = i;
    v = slow_mul(v, gen, m, reduction_poly);
  }
}

GfElem GaloisField::inv(GfElem a) const {
  if (a == 0) throw DivisionByZero("inverse of zero field element");
  const std::uint32_t n = order() - 1;
  return exp_[(n - log_[a]) % n];
}

GfElem GaloisField::sqrt(GfElem a) const {
  if (a == 0) return 0;
  const std::uint64_t n = order() - 1;
  // 2^(m-1) is the inverse of 2 modulo the (odd) group order.
  return exp_[(static_cast<std::uint64_t>(log_[a]) << (m_ - 1)) % n];
}

GfElem GaloisField::pow(GfElem a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t n = order() - 1;
  return exp_[(static_cast<std::uint64_t>(log_[a]) * (e % n)) % n];
}

std::vector<GfElem> GaloisField::elements() const {
  std::vector<GfElem> out;
  out.reserve(order());
  out.push_back(0);
  for (std::uint32_t i = 0; i + 1 < order(); ++i) out.push_back(exp_[i]);
  return out;
}

FieldPoly FieldPoly::monomial(std::size_t power, GfElem c) {
  std::vector<GfElem> v(power + 1, 0);
  v[power] = c;
  return FieldPoly(std::move(v));
}

FieldPoly poly_add(const FieldPoly& a, const FieldPoly& b) {
  std::vector<GfElem> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = GaloisField::add(a.coeff(i), b.coeff(i));
  return FieldPoly(std::move(c));
}

FieldPoly poly_mul(const GaloisField& f, const FieldPoly& a, const FieldPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& ac = a.coeffs();
  const auto& bc = b.coeffs();
  std::vector<GfElem> c(ac.size() + bc.size() - 1, 0);
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (ac[i] == 0) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) c[i + j] ^= f.mul(ac[i], bc[j]);
  }
  return FieldPoly(std::move(c));
}

FieldPoly poly_scale(const GaloisField& f, const FieldPoly& a, GfElem c) {
  std::vector<GfElem> out(a.coeffs());
  for (auto& x : out) x = f.mul(x, c);
  return FieldPoly(std::move(out));
}

std::pair<FieldPoly, FieldPoly> poly_divmod(const GaloisField& f, const FieldPoly& a, const FieldPoly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (a.degree() < b.degree()) return {FieldPoly{}, a};
  std::vector<GfElem> rem(a.coeffs());
  const auto& bc = b.coeffs();
  const int db = b.degree();
  const GfElem lead_inv = f.inv(b.leading());
  std::vector<GfElem> quot(static_cast<std::size_t>(a.degree() - db + 1), 0);
  for (int i = a.degree(); i >= db; --i) {
    const GfElem top = rem[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    const GfElem factor = f.mul(top, lead_inv);
    quot[static_cast<std::size_t>(i - db)] = factor;
    for (int j = 0; j <= db; ++j)
      rem[static_cast<std::size_t>(i - db + j)] ^= f.mul(factor, bc[static_cast<std::size_t>(j)]);
  }
  rem.resize(static_cast<std::size_t>(db));
  return {FieldPoly(std::move(quot)), FieldPoly(std::move(rem))};
}

FieldPoly poly_mod(const GaloisField& f, const FieldPoly& a, const FieldPoly& b) {
  return poly_divmod(f, a, b).second;
}

FieldPoly poly_monic(const GaloisField& f, const FieldPoly& a) {
  if (a.is_zero()) return a;
  return poly_scale(f, a, f.inv(a.leading()));
}

FieldPoly poly_gcd(const GaloisField& f, const FieldPoly& a, const FieldPoly& b) {
  FieldPoly x = a;
  FieldPoly y = b;
  while (!y.is_zero()) {
    FieldPoly r = poly_mod(f, x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return poly_monic(f, x);
}

EeaResult poly_eea(const GaloisField& f, const FieldPoly& a, const FieldPoly& b) {
  FieldPoly r0 = a, r1 = b;
  FieldPoly s0 = FieldPoly::constant(1), s1;
  FieldPoly t0, t1 = FieldPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = poly_divmod(f, r0, r1);
    FieldPoly s2 = poly_add(s0, poly_mul(f, q, s1));
    FieldPoly t2 = poly_add(t0, poly_mul(f, q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {FieldPoly{}, FieldPoly{}, FieldPoly{}};
  const GfElem norm = f.inv(r0.leading());
  return {poly_scale(f, r0, norm), poly_scale(f, s0, norm), poly_scale(f, t0, norm)};
}

std::pair<FieldPoly, FieldPoly> poly_eea_until(const GaloisField& f, const FieldPoly& modulus,
                                               const FieldPoly& b, int max_remainder_degree) {
  FieldPoly r_prev = modulus;
  FieldPoly r = poly_mod(f, b, modulus);
  FieldPoly v_prev;
  FieldPoly v = FieldPoly::constant(1);
  while (r.degree() > max_remainder_degree) {
    auto [q, rem] = poly_divmod(f, r_prev, r);
    FieldPoly v_next = poly_add(v_prev, poly_mul(f, q, v));
    r_prev = std::move(r);
    r = std::move(rem);
    v_prev = std::move(v);
    v = std::move(v_next);
  }
  return {r, v};
}

GfElem poly_eval(const GaloisField& f, const FieldPoly& p, GfElem x) {
  GfElem acc = 0;
  const auto& c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = GaloisField::add(f.mul(acc, x), c[i]);
  return acc;
}

FieldPoly poly_mulmod(const GaloisField& f, const FieldPoly& a, const FieldPoly& b, const FieldPoly& mod) {
  return poly_mod(f, poly_mul(f, a, b), mod);
}

FieldPoly poly_square_mod(const GaloisField& f, const FieldPoly& a, const FieldPoly& mod) {
  // Squaring is linear in characteristic 2: (sum c_i x^i)^2 = sum c_i^2 x^(2i).
  if (a.is_zero()) return a;
  const auto& c = a.coeffs();
  std::vector<GfElem> sq(2 * c.size() - 1, 0);
  for (std::size_t i = 0; i < c.size(); ++i) sq[2 * i] = f.square(c[i]);
  return poly_mod(f, FieldPoly(std::move(sq)), mod);
}

FieldPoly poly_inv_mod(const GaloisField& f, const FieldPoly& a, const FieldPoly& g) {
  const FieldPoly reduced = poly_mod(f, a, g);
  if (reduced.is_zero()) throw DivisionByZero("inverse of zero modulo g");
  EeaResult e = poly_eea(f, reduced, g);
  if (e.gcd.degree() != 0) throw DivisionByZero("polynomial not invertible modulo g");
  return poly_mod(f, e.u, g);
}

FieldPoly poly_sqrt_mod_g(const GaloisField& f, const FieldPoly& p, const FieldPoly& g) {
  if (g.degree() < 1) throw ParameterError("sqrt modulus must have degree >= 1");
  const FieldPoly target = poly_mod(f, p, g);
  // The quotient ring is GF(2^(m*deg g)), where squaring m*deg(g) times is
  // the identity; so squaring one fewer time gives the square root.
  const std::size_t steps = static_cast<std::size_t>(f.m()) * static_cast<std::size_t>(g.degree()) - 1;
  FieldPoly s = target;
  for (std::size_t i = 0; i < steps; ++i) s = poly_square_mod(f, s, g);
  if (poly_square_mod(f, s, g) != target) throw NotInRingError("square root verification failed");
  return s;
}

bool poly_is_irreducible(const GaloisField& f, const FieldPoly& g) {
  if (g.degree() < 1) return false;
  if (g.degree() == 1) return true;
  const FieldPoly x = FieldPoly::monomial(1);
  FieldPoly h = poly_mod(f, x, g);
  for (int i = 1; i <= g.degree() / 2; ++i) {
    for (unsigned j = 0; j < f.m(); ++j) h = poly_square_mod(f, h, g);
    if (poly_gcd(f, poly_add(h, x), g).degree() != 0) return false;
  }
  return true;
}

FieldPoly random_irreducible(std::size_t t, const GaloisField& f, Rng& rng) {
  if (t < 1) throw ParameterError("irreducible polynomial degree must be >= 1");
  for (;;) {
    std::vector<GfElem> c(t + 1, 0);
    for (std::size_t i = 0; i < t; ++i) c[i] = static_cast<GfElem>(rng.uniform(f.order()));
    c[t] = 1;
    FieldPoly g(std::move(c));
    if (poly_is_irreducible(f, g)) return g;
  }
}

}  // namespace pcamce
