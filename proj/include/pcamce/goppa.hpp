#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pcamce/binmatrix.hpp"
#include "pcamce/bitstring.hpp"
#include "pcamce/gf2m.hpp"

namespace pcamce {

class Rng;

/// Binary irreducible Goppa code over the full support GF(2^m).
///
/// The support is every field element in GaloisField::elements() order.
/// The parity-check matrix has entries g(a_j)^-1 * a_j^i (i < t), each
/// expanded into m binary rows. The generator is systematic on
/// info_positions(): row r has a single 1 among those columns, at
/// info_positions()[r], so a codeword's message bits can be read straight
/// off those positions.
class GoppaCode {
 public:
  /// Random irreducible g of degree t; regenerates g on the rare
  /// binary-rank shortfall. ParameterError unless m >= 3, t >= 2 and
  /// 2^m - m*t >= 1.
  static GoppaCode generate(unsigned m, std::size_t t, Rng& rng);
  /// Deterministic reconstruction from a known field and Goppa polynomial.
  /// ParameterError if g is not irreducible or the binary rank is short.
  static GoppaCode from_polynomial(const GaloisField& field, const FieldPoly& g);

  const GaloisField& field() const { return field_; }
  const std::vector<GfElem>& support() const { return support_; }
  const FieldPoly& goppa_poly() const { return g_; }
  std::size_t t() const { return t_; }
  std::size_t code_len() const { return support_.size(); }
  std::size_t code_dim() const { return generator_.rows(); }

  const BinMatrix& parity_check() const { return parity_check_; }
  const BinMatrix& generator() const { return generator_; }
  const std::vector<std::size_t>& info_positions() const { return info_positions_; }

  /// word * H^T
  BitString syndrome(const BitString& word) const;
  /// Message bits of a codeword, read from the information positions.
  BitString extract_message(const BitString& codeword) const;
  /// sqrt(x) mod g, cached for the decoder.
  const FieldPoly& sqrt_x() const { return sqrt_x_; }

 private:
  GoppaCode() = default;

  GaloisField field_{3};
  std::vector<GfElem> support_;
  FieldPoly g_;
  std::size_t t_ = 0;
  BinMatrix parity_check_;
  BinMatrix parity_check_t_;
  BinMatrix generator_;
  std::vector<std::size_t> info_positions_;
  FieldPoly sqrt_x_;
};

struct DecodeResult {
  BitString codeword;
  BitString error;
};

/// Patterson decoding. Returns the unique codeword within distance t, or
/// nullopt when none exists or the error locator is inconsistent.
/// LengthError if |word| != code_len.
std::optional<DecodeResult> decode(const GoppaCode& code, const BitString& word);

struct BruteForceResult {
  BitString message;
  BitString codeword;
  std::size_t distance;
};

/// Exhaustive search over all 2^rows messages for one whose codeword lies
/// within distance t of `word` (the nearest; ties by message value).
/// InfeasibleError if gen has more than 16 rows.
std::optional<BruteForceResult> brute_force_decode(const BinMatrix& gen, const BitString& word, std::size_t t);

}  // namespace pcamce
