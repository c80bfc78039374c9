#pragma once

#include <cstdint>
#include <tuple>
#include <utility>
#include <vector>

namespace pcamce {

class Rng;

using GfElem = std::uint16_t;

/// GF(2^m) for 2 <= m <= 13, elements as m-bit integers (bit i = coefficient
/// of x^i). Multiplication goes through log/antilog tables built eagerly at
/// construction; the object is immutable afterwards and safe to share.
class GaloisField {
 public:
  /// Uses the built-in reduction polynomial for m (3 <= m <= 13).
  explicit GaloisField(unsigned m);
  /// reduction_poly includes the x^m term. Throws ParameterError unless it
  /// has degree m and is irreducible.
  GaloisField(unsigned m, std::uint32_t reduction_poly);

  unsigned m() const { return m_; }
  std::uint32_t order() const { return 1U << m_; }
  std::uint32_t reduction_poly() const { return poly_; }

  static GfElem add(GfElem a, GfElem b) { return static_cast<GfElem>(a ^ b); }
  GfElem mul(GfElem a, GfElem b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  /// Throws DivisionByZero for 0.
  GfElem inv(GfElem a) const;
  GfElem div(GfElem a, GfElem b) const { return mul(a, inv(b)); }
  GfElem square(GfElem a) const { return mul(a, a); }
  /// Unique square root (Frobenius is a bijection in characteristic 2).
  GfElem sqrt(GfElem a) const;
  GfElem pow(GfElem a, std::uint64_t e) const;

  /// Fixed primitive element raised to i, i in [0, 2^m - 1).
  GfElem generator_power(std::uint32_t i) const { return exp_[i % (order() - 1)]; }

  /// Every field element in the fixed order 0, 1, g, g^2, ..., g^(2^m-2).
  std::vector<GfElem> elements() const;

  /// Built-in low-weight irreducible polynomial for m, including x^m.
  static std::uint32_t default_poly(unsigned m);
  /// Trial division by every binary polynomial of degree 1..deg/2.
  static bool is_irreducible_binary(std::uint32_t poly);

  friend bool operator==(const GaloisField& a, const GaloisField& b) {
    return a.m_ == b.m_ && a.poly_ == b.poly_;
  }

 private:
  unsigned m_;
  std::uint32_t poly_;
  std::vector<GfElem> exp_;  // doubled so exp_[log a + log b] needs no reduction
  std::vector<std::uint32_t> log_;
};

/// Polynomial over GF(2^m), coefficients low degree first. The
/// representation is kept trimmed: no trailing zero coefficients, and the
/// zero polynomial is the empty vector.
class FieldPoly {
 public:
  FieldPoly() = default;
  explicit FieldPoly(std::vector<GfElem> coeffs) : c_(std::move(coeffs)) { trim(); }
  static FieldPoly constant(GfElem c) { return FieldPoly(std::vector<GfElem>{c}); }
  /// c * x^power
  static FieldPoly monomial(std::size_t power, GfElem c = 1);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  GfElem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : GfElem{0}; }
  GfElem leading() const { return c_.empty() ? GfElem{0} : c_.back(); }
  const std::vector<GfElem>& coeffs() const { return c_; }

  friend bool operator==(const FieldPoly&, const FieldPoly&) = default;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<GfElem> c_;
};

FieldPoly poly_add(const FieldPoly& a, const FieldPoly& b);
FieldPoly poly_mul(const GaloisField& f, const FieldPoly& a, const FieldPoly& b);
FieldPoly poly_scale(const GaloisField& f, const FieldPoly& a, GfElem c);
/// (quotient, remainder) with a = q*b + r, deg r < deg b. DivisionByZero if b = 0.
std::pair<FieldPoly, FieldPoly> poly_divmod(const GaloisField& f, const FieldPoly& a, const FieldPoly& b);
FieldPoly poly_mod(const GaloisField& f, const FieldPoly& a, const FieldPoly& b);
FieldPoly poly_monic(const GaloisField& f, const FieldPoly& a);
/// Monic gcd; gcd(0, 0) = 0.
FieldPoly poly_gcd(const GaloisField& f, const FieldPoly& a, const FieldPoly& b);

struct EeaResult {
  FieldPoly gcd;  // monic
  FieldPoly u;
  FieldPoly v;
};
/// u*a + v*b = gcd(a, b).
EeaResult poly_eea(const GaloisField& f, const FieldPoly& a, const FieldPoly& b);

/// Partial extended Euclid on (modulus, b): runs the remainder sequence
/// until deg(remainder) <= max_remainder_degree and returns (r, v) with
/// r = v*b (mod modulus).
std::pair<FieldPoly, FieldPoly> poly_eea_until(const GaloisField& f, const FieldPoly& modulus,
                                               const FieldPoly& b, int max_remainder_degree);

GfElem poly_eval(const GaloisField& f, const FieldPoly& p, GfElem x);
FieldPoly poly_mulmod(const GaloisField& f, const FieldPoly& a, const FieldPoly& b, const FieldPoly& mod);
FieldPoly poly_square_mod(const GaloisField& f, const FieldPoly& a, const FieldPoly& mod);
/// Inverse modulo an irreducible modulus; DivisionByZero if a = 0 mod g.
FieldPoly poly_inv_mod(const GaloisField& f, const FieldPoly& a, const FieldPoly& g);

/// s with s^2 = p (mod g), via p^(2^(m*deg g - 1)). Throws NotInRingError if
/// the result does not square back to p.
FieldPoly poly_sqrt_mod_g(const GaloisField& f, const FieldPoly& p, const FieldPoly& g);

/// Ben-Or test: gcd(x^(q^i) - x, g) = 1 for 1 <= i <= deg(g)/2, q = 2^m.
bool poly_is_irreducible(const GaloisField& f, const FieldPoly& g);
/// Random monic irreducible polynomial of degree t (rejection sampling).
FieldPoly random_irreducible(std::size_t t, const GaloisField& f, Rng& rng);

}  // namespace pcamce
