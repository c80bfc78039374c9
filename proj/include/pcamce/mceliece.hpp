#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pcamce/binmatrix.hpp"
#include "pcamce/goppa.hpp"

namespace pcamce {

class Rng;

struct McEliecePublicKey {
  BinMatrix g_pub;  // code_dim x code_len, = S * G * P
  std::size_t t = 0;

  std::size_t code_dim() const { return g_pub.rows(); }
  std::size_t code_len() const { return g_pub.cols(); }
  friend bool operator==(const McEliecePublicKey&, const McEliecePublicKey&) = default;
};

/// Secret side: S^-1, the Goppa code (which carries the decoder) and P^-1.
class McElieceSecretKey {
 public:
  /// DimensionError if the shapes disagree with the code, ParameterError
  /// if p_inv is not a permutation matrix.
  McElieceSecretKey(BinMatrix s_inv, GoppaCode code, BinMatrix p_inv);

  const BinMatrix& s_inv() const { return s_inv_; }
  const GoppaCode& code() const { return code_; }
  const BinMatrix& p_inv() const { return p_inv_; }

  /// Maps a vector in decoder coordinates back through P: v * P.
  BitString unpermute(const BitString& v) const;

 private:
  BinMatrix s_inv_;
  GoppaCode code_;
  BinMatrix p_inv_;
  std::vector<std::size_t> p_inv_cols_;  // column of the 1 in each row of p_inv
};

struct McElieceKeyPair {
  McEliecePublicKey pk;
  McElieceSecretKey sk;
};

McElieceKeyPair mce_keygen(unsigned m, std::size_t t, Rng& rng);
/// Assembles a key pair from explicit masks; used for tests with S = I, P = I.
McElieceKeyPair mce_keygen_with(GoppaCode code, const BinMatrix& s, BinMatrix s_inv, const BinMatrix& p,
                                BinMatrix p_inv);

/// Recomputes G_pub = S * G * P from the secret side.
McEliecePublicKey derive_public_key(const McElieceSecretKey& sk);

/// c = m * G_pub xor e. WeightError unless wt(e) = t; LengthError on size mismatch.
BitString mce_encrypt(const McEliecePublicKey& pk, const BitString& message, const BitString& error);

struct McElieceDecryption {
  BitString message;
  BitString error;  // in ciphertext coordinates: c = message * G_pub xor error
};

/// nullopt is the rejection symbol: the decoder found no codeword within t.
std::optional<McElieceDecryption> mce_decrypt(const McElieceSecretKey& sk, const BitString& c);

}  // namespace pcamce
