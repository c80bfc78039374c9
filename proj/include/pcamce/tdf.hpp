#pragma once

// PKE[TDF]: the message-side pipeline of the McEliece scheme with the coins
// carried by a trapdoor function instead of a McEliece ciphertext.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>

#include <gmpxx.h>

#include "pcamce/bitstring.hpp"
#include "pcamce/mceliece.hpp"
#include "pcamce/pipeline.hpp"

namespace pcamce {

class Rng;

/// An injective function on k-bit strings. Instances built from a public
/// key only have no trapdoor; inverse() then throws ParameterError.
class TrapdoorFunction {
 public:
  virtual ~TrapdoorFunction() = default;

  virtual std::string name() const = 0;
  /// k
  virtual std::size_t domain_bits() const = 0;
  virtual std::size_t image_bits() const = 0;
  virtual bool has_trapdoor() const = 0;

  /// LengthError unless |x| = k.
  virtual BitString forward(const BitString& x) const = 0;
  /// nullopt if y has no k-bit preimage.
  virtual std::optional<BitString> inverse(const BitString& y) const = 0;
};

/// RSA-style permutation x -> x^e mod N restricted to [0, 2^k). Only a
/// correctness vehicle for the generic construction; the sizes are far too
/// small to be one-way in any practical sense.
class ToyModularTdf final : public TrapdoorFunction {
 public:
  static constexpr unsigned long kPublicExponent = 65537;

  /// Two primes of ceil((k+3)/2) bits with their top bit set, so N > 2^k.
  static ToyModularTdf generate(std::size_t k, Rng& rng);
  /// Public half only.
  ToyModularTdf(std::size_t k, mpz_class n, mpz_class e);
  /// Full key; ParameterError if d is not the inverse of e mod lcm(p-1, q-1).
  ToyModularTdf(std::size_t k, mpz_class n, mpz_class e, mpz_class d);

  std::string name() const override { return "toy-modular"; }
  std::size_t domain_bits() const override { return k_; }
  std::size_t image_bits() const override { return mpz_sizeinbase(n_.get_mpz_t(), 2); }
  bool has_trapdoor() const override { return d_.has_value(); }
  BitString forward(const BitString& x) const override;
  std::optional<BitString> inverse(const BitString& y) const override;

  const mpz_class& modulus() const { return n_; }
  const mpz_class& public_exponent() const { return e_; }
  const std::optional<mpz_class>& secret_exponent() const { return d_; }
  ToyModularTdf public_part() const { return ToyModularTdf(k_, n_, e_); }

 private:
  std::size_t k_;
  mpz_class n_;
  mpz_class e_;
  std::optional<mpz_class> d_;
};

/// McEliece with one fixed weight-t error vector: x -> x*G_pub xor e_fix.
/// Injective because the code corrects t errors; used as a second TDF for
/// cross-checking the generic construction.
class McElieceTdf final : public TrapdoorFunction {
 public:
  McElieceTdf(McEliecePublicKey pk, BitString fixed_error);
  McElieceTdf(McEliecePublicKey pk, McElieceSecretKey sk, BitString fixed_error);

  std::string name() const override { return "mceliece-fixed-e"; }
  std::size_t domain_bits() const override { return pk_.code_dim(); }
  std::size_t image_bits() const override { return pk_.code_len(); }
  bool has_trapdoor() const override { return sk_.has_value(); }
  BitString forward(const BitString& x) const override;
  std::optional<BitString> inverse(const BitString& y) const override;

 private:
  McEliecePublicKey pk_;
  std::optional<McElieceSecretKey> sk_;
  BitString fixed_error_;
};

using TdfCiphertext = BlindedCiphertext;

/// Uniform k-bit coins, resampled while all-zero or all-one.
BitString sample_tdf_coins(std::size_t k, Rng& rng);

/// ParameterError if k < 3; LengthError if msg is empty.
TdfCiphertext tdf_encrypt(const TrapdoorFunction& f, const BitString& msg, Rng& rng);
/// nullopt on inversion failure or a failed C1 or pad check. There is no
/// hash recheck: the coins are not derived from anything that could be
/// re-verified.
std::optional<BitString> tdf_decrypt(const TrapdoorFunction& f, const TdfCiphertext& ct);

namespace diagnostics {

struct TdfEncryptTrace {
  BitString r;
  EncodeTrace pipeline;
  TdfCiphertext ct;
};

struct TdfDecryptTrace {
  Rejection reason = Rejection::None;
  std::optional<BitString> coins;
  DecodeTrace pipeline;
  std::optional<BitString> message;
};

TdfEncryptTrace tdf_encrypt_with_coins(const TrapdoorFunction& f, const BitString& msg, const BitString& r);
TdfDecryptTrace tdf_decrypt_traced(const TrapdoorFunction& f, const TdfCiphertext& ct);

}  // namespace diagnostics

/// PTDF key files for the toy TDF (public: k, N, e; secret adds d).
std::vector<std::uint8_t> serialize_tdf_key(const ToyModularTdf& f);
ToyModularTdf deserialize_tdf_key(std::span<const std::uint8_t> bytes);

}  // namespace pcamce
