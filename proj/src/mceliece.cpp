#include "pcamce/mceliece.hpp"

#include "pcamce/errors.hpp"
#include "pcamce/rng.hpp"

namespace pcamce {

McElieceSecretKey::McElieceSecretKey(BinMatrix s_inv, GoppaCode code, BinMatrix p_inv)
    : s_inv_(std::move(s_inv)), code_(std::move(code)), p_inv_(std::move(p_inv)) {
  if (s_inv_.rows() != code_.code_dim() || s_inv_.cols() != code_.code_dim())
    throw DimensionError("S^-1 must be code_dim x code_dim");
  if (p_inv_.rows() != code_.code_len() || p_inv_.cols() != code_.code_len())
    throw DimensionError("P^-1 must be code_len x code_len");
  p_inv_cols_.resize(p_inv_.rows());
  std::vector<bool> seen(p_inv_.cols(), false);
  for (std::size_t r = 0; r < p_inv_.rows(); ++r) {
    if (p_inv_.weight_of_row(r) != 1) throw ParameterError("P^-1 is not a permutation matrix");
    const BitString row = p_inv_.row_bits(r);
    std::size_t c = 0;
    while (!row.get(c)) ++c;
    if (seen[c]) throw ParameterError("P^-1 is not a permutation matrix");
    seen[c] = true;
    p_inv_cols_[r] = c;
  }
}

BitString McElieceSecretKey::unpermute(const BitString& v) const {
  // (x * P^-1)_j = x_i where P^-1[i][j] = 1, so x_i = v_{col(i)}.
  BitString out(v.size());
  for (std::size_t i = 0; i < p_inv_cols_.size(); ++i) out.set(i, v.get(p_inv_cols_[i]));
  return out;
}

McElieceKeyPair mce_keygen(unsigned m, std::size_t t, Rng& rng) {
  GoppaCode code = GoppaCode::generate(m, t, rng);
  auto [s, s_inv] = random_invertible(code.code_dim(), rng);
  auto [p, p_inv] = random_permutation_matrix(code.code_len(), rng);
  return mce_keygen_with(std::move(code), s, std::move(s_inv), p, std::move(p_inv));
}

McElieceKeyPair mce_keygen_with(GoppaCode code, const BinMatrix& s, BinMatrix s_inv, const BinMatrix& p,
                                BinMatrix p_inv) {
  McEliecePublicKey pk{mat_mul(mat_mul(s, code.generator()), p), code.t()};
  McElieceSecretKey sk(std::move(s_inv), std::move(code), std::move(p_inv));
  return {std::move(pk), std::move(sk)};
}

McEliecePublicKey derive_public_key(const McElieceSecretKey& sk) {
  auto s = inverse(sk.s_inv());
  if (!s) throw ParameterError("S^-1 is singular");
  return {mat_mul(mat_mul(*s, sk.code().generator()), sk.p_inv().transpose()), sk.code().t()};
}

BitString mce_encrypt(const McEliecePublicKey& pk, const BitString& message, const BitString& error) {
  if (message.size() != pk.code_dim()) throw LengthError("mce_encrypt: message length != code_dim");
  if (error.size() != pk.code_len()) throw LengthError("mce_encrypt: error length != code_len");
  if (error.weight() != pk.t) throw WeightError("mce_encrypt: error weight must equal t");
  BitString c = vec_mat_mul(message, pk.g_pub);
  c ^= error;
  return c;
}

std::optional<McElieceDecryption> mce_decrypt(const McElieceSecretKey& sk, const BitString& c) {
  if (c.size() != sk.code().code_len()) throw LengthError("mce_decrypt: ciphertext length != code_len");
  const BitString permuted = vec_mat_mul(c, sk.p_inv());
  auto decoded = decode(sk.code(), permuted);
  if (!decoded) return std::nullopt;
  const BitString ms = sk.code().extract_message(decoded->codeword);
  return McElieceDecryption{vec_mat_mul(ms, sk.s_inv()), sk.unpermute(decoded->error)};
}

}  // namespace pcamce
