#pragma once

#include <cstddef>
#include <optional>

#include "pcamce/hashing.hpp"
#include "pcamce/mceliece.hpp"
#include "pcamce/pipeline.hpp"

namespace pcamce {

class Rng;

struct Cca2PublicKey {
  McEliecePublicKey mce;
  HashId hash_id = HashId::Sha256Ctr;
  PrgId prg_id = PrgId::Sha256Ctr;

  /// k: the coins r are the McEliece plaintext, so k = code_dim.
  std::size_t sec_param() const { return mce.code_dim(); }
  friend bool operator==(const Cca2PublicKey&, const Cca2PublicKey&) = default;
};

struct Cca2SecretKey {
  McElieceSecretKey mce;
  McEliecePublicKey mce_pk;  // to recompute e = C2 xor r*G_pub
  HashId hash_id = HashId::Sha256Ctr;
  PrgId prg_id = PrgId::Sha256Ctr;
};

struct Cca2KeyPair {
  Cca2PublicKey pk;
  Cca2SecretKey sk;
};

using Cca2Ciphertext = BlindedCiphertext;

Cca2KeyPair cca2_keygen(unsigned m, std::size_t t, Rng& rng);
Cca2KeyPair cca2_keygen_from(McElieceKeyPair mce);

struct Coins {
  BitString error;  // weight-t vector of code length
  BitString r;      // T(error), never all-zero or all-one
};

/// Samples weight-t error vectors until T(e) is non-degenerate.
Coins derive_coins(const Cca2PublicKey& pk, Rng& rng);

/// ParameterError if k < 3; LengthError if msg is empty.
Cca2Ciphertext cca2_encrypt(const Cca2PublicKey& pk, const BitString& msg, Rng& rng);

/// Uniform rejection: nullopt on any failed check.
std::optional<BitString> cca2_decrypt(const Cca2SecretKey& sk, const Cca2Ciphertext& ct);

namespace diagnostics {

// Test-only surface exposing intermediates and rejection reasons. The
// public decrypt above never reveals why a ciphertext was rejected.

struct Cca2EncryptTrace {
  Coins coins;
  EncodeTrace pipeline;
  Cca2Ciphertext ct;
};

/// Deterministic encryption with caller-chosen coins. The coins must satisfy
/// r = T(e) for the result to decrypt.
Cca2EncryptTrace encrypt_with_coins(const Cca2PublicKey& pk, const BitString& msg, const Coins& coins);
Cca2EncryptTrace encrypt_traced(const Cca2PublicKey& pk, const BitString& msg, Rng& rng);

struct Cca2DecryptTrace {
  Rejection reason = Rejection::None;
  std::optional<BitString> coins;  // r from McEliece decryption
  std::optional<BitString> error;  // e = C2 xor r*G_pub
  DecodeTrace pipeline;
  std::optional<BitString> message;
};

Cca2DecryptTrace decrypt_traced(const Cca2SecretKey& sk, const Cca2Ciphertext& ct);

}  // namespace diagnostics
}  // namespace pcamce
