#include "pcamce/goppa.hpp"

#include <algorithm>

#include "pcamce/errors.hpp"
#include "pcamce/kernels.hpp"
#include "pcamce/rng.hpp"

namespace pcamce {
namespace {

constexpr std::size_t kMaxBruteForceRows = 16;

// sqrt of p mod g through the linear split p = even(x^2) + x * odd(x^2):
// sqrt(p) = sqrt-coeffs(even) + sqrt(x) * sqrt-coeffs(odd).
FieldPoly fast_sqrt_mod(const GaloisField& f, const FieldPoly& p, const FieldPoly& g, const FieldPoly& sqrt_x) {
  const auto& c = p.coeffs();
  std::vector<GfElem> even((c.size() + 1) / 2, 0);
  std::vector<GfElem> odd(c.size() / 2 + 1, 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i % 2 == 0)
      even[i / 2] = f.sqrt(c[i]);
    else
      odd[i / 2] = f.sqrt(c[i]);
  }
  return poly_mod(f, poly_add(FieldPoly(std::move(even)), poly_mul(f, sqrt_x, FieldPoly(std::move(odd)))), g);
}

}  // namespace

GoppaCode GoppaCode::generate(unsigned m, std::size_t t, Rng& rng) {
  if (m < 3) throw ParameterError("Goppa codes need m >= 3");
  if (t < 2)
    throw ParameterError(
        "full-support binary Goppa codes need t >= 2: a degree-1 Goppa polynomial has a root in the support");
  const std::size_t n = std::size_t{1} << m;
  if (m * t >= n) throw ParameterError("code dimension 2^m - m*t must be >= 1");
  GaloisField field(m);
  for (;;) {
    FieldPoly g = random_irreducible(t, field, rng);
    try {
      return from_polynomial(field, g);
    } catch (const ParameterError&) {
      // rank shortfall in the binary expansion; draw a fresh g
    }
  }
}

GoppaCode GoppaCode::from_polynomial(const GaloisField& field, const FieldPoly& g) {
  if (g.degree() < 2) throw ParameterError("Goppa polynomial degree must be >= 2");
  if (!poly_is_irreducible(field, g)) throw ParameterError("Goppa polynomial is reducible");

  GoppaCode code;
  code.field_ = field;
  code.g_ = poly_monic(field, g);
  code.t_ = static_cast<std::size_t>(g.degree());
  code.support_ = field.elements();
  const std::size_t n = code.support_.size();
  const std::size_t m = field.m();
  const std::size_t t = code.t_;
  if (m * t >= n) throw ParameterError("code dimension 2^m - m*t must be >= 1");

  BinMatrix h(m * t, n);
  for (std::size_t j = 0; j < n; ++j) {
    const GfElem alpha = code.support_[j];
    const GfElem gv = poly_eval(field, code.g_, alpha);
    if (gv == 0) throw ParameterError("Goppa polynomial vanishes on the support");
    GfElem entry = field.inv(gv);
    for (std::size_t i = 0; i < t; ++i) {
      for (std::size_t b = 0; b < m; ++b)
        if ((entry >> b) & 1U) h.set(i * m + b, j, true);
      entry = field.mul(entry, alpha);
    }
  }

  EchelonForm ef = row_reduce(h);
  if (ef.rank() != m * t) throw ParameterError("parity-check matrix is rank deficient");

  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : ef.pivot_cols) is_pivot[c] = true;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) code.info_positions_.push_back(c);

  const std::size_t k = code.info_positions_.size();
  BinMatrix gen(k, n);
  for (std::size_t a = 0; a < k; ++a) {
    const std::size_t col = code.info_positions_[a];
    gen.set(a, col, true);
    for (std::size_t r = 0; r < ef.rank(); ++r)
      if (ef.reduced.get(r, col)) gen.set(a, ef.pivot_cols[r], true);
  }

  code.parity_check_t_ = h.transpose();
  code.parity_check_ = std::move(h);
  code.generator_ = std::move(gen);
  code.sqrt_x_ = poly_sqrt_mod_g(field, FieldPoly::monomial(1), code.g_);
  return code;
}

BitString GoppaCode::syndrome(const BitString& word) const {
  if (word.size() != code_len()) throw LengthError("syndrome: word length != code length");
  return vec_mat_mul(word, parity_check_t_);
}

BitString GoppaCode::extract_message(const BitString& codeword) const {
  if (codeword.size() != code_len()) throw LengthError("extract_message: length != code length");
  BitString msg(info_positions_.size());
  for (std::size_t a = 0; a < info_positions_.size(); ++a) msg.set(a, codeword.get(info_positions_[a]));
  return msg;
}

std::optional<DecodeResult> decode(const GoppaCode& code, const BitString& word) {
  if (word.size() != code.code_len()) throw LengthError("decode: word length != code length");
  const GaloisField& f = code.field();
  const std::size_t m = f.m();
  const std::size_t t = code.t();
  const std::size_t n = code.code_len();

  const BitString synd = code.syndrome(word);
  if (synd.all_zero()) return DecodeResult{word, BitString(n)};

  // Power-sum syndromes s_i = sum_j w_j a_j^i / g(a_j), then
  // S(x) = sum_j w_j / (x - a_j) mod g has coefficients
  // S_i = sum_{k > i} g_k s_{k-1-i}.
  std::vector<GfElem> s(t, 0);
  for (std::size_t i = 0; i < t; ++i) {
    GfElem v = 0;
    for (std::size_t b = 0; b < m; ++b)
      if (synd.get(i * m + b)) v |= static_cast<GfElem>(1U << b);
    s[i] = v;
  }
  std::vector<GfElem> sc(t, 0);
  const FieldPoly& g = code.goppa_poly();
  for (std::size_t i = 0; i < t; ++i) {
    GfElem acc = 0;
    for (std::size_t k = i + 1; k <= t; ++k) acc ^= f.mul(g.coeff(k), s[k - 1 - i]);
    sc[i] = acc;
  }
  const FieldPoly syndrome_poly(std::move(sc));
  if (syndrome_poly.is_zero()) return std::nullopt;

  const FieldPoly inv_s = poly_inv_mod(f, syndrome_poly, g);
  const FieldPoly tau = fast_sqrt_mod(f, poly_add(inv_s, FieldPoly::monomial(1)), g, code.sqrt_x());
  auto [a, b] = poly_eea_until(f, g, tau, static_cast<int>(t / 2));
  const FieldPoly locator =
      poly_add(poly_mul(f, a, a), poly_mul(f, FieldPoly::monomial(1), poly_mul(f, b, b)));

  const int deg = locator.degree();
  if (deg < 1 || static_cast<std::size_t>(deg) > t) return std::nullopt;

  BitString error(n);
  std::size_t roots = 0;
  for (std::size_t j = 0; j < n; ++j)
    if (poly_eval(f, locator, code.support()[j]) == 0) {
      error.set(j, true);
      ++roots;
    }
  if (roots != static_cast<std::size_t>(deg)) return std::nullopt;

  BitString corrected = word ^ error;
  if (!code.syndrome(corrected).all_zero()) return std::nullopt;
  return DecodeResult{std::move(corrected), std::move(error)};
}

std::optional<BruteForceResult> brute_force_decode(const BinMatrix& gen, const BitString& word, std::size_t t) {
  if (gen.rows() > kMaxBruteForceRows)
    throw InfeasibleError("brute_force_decode: code dimension exceeds 16");
  auto hit = kernels::parallel::nearest_codeword(gen, word, t);
  if (!hit) return std::nullopt;
  BitString message = from_integer(mpz_class(static_cast<unsigned long>(hit->message)), gen.rows());
  BitString codeword = vec_mat_mul(message, gen);
  return BruteForceResult{std::move(message), std::move(codeword), hit->distance};
}

}  // namespace pcamce
