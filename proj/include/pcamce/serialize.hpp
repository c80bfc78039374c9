#pragma once

// Framed binary formats for keys and ciphertexts.
//
// Key file:   magic(4) "PMCE" | version u8 | key type u8 | fields...
// Field:      u32le byte length | u64le bit count | payload
// Ciphertext: magic(4) "PMCT" | version u8 | u64le msg_len |
//             u32le byte length | C1 big-endian magnitude |
//             u64le bit length | C2 packed MSB-first
//
// Matrices are a field whose payload is u32le rows | u32le cols | packed
// row-major bits; bit count = rows * cols. All multi-byte integers are
// little-endian except the C1 magnitude.

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "pcamce/cca2.hpp"
#include "pcamce/mceliece.hpp"

namespace pcamce {

using Bytes = std::vector<std::uint8_t>;

inline constexpr std::uint8_t kFormatVersion = 1;
inline constexpr std::array<std::uint8_t, 4> kKeyMagic{'P', 'M', 'C', 'E'};
inline constexpr std::array<std::uint8_t, 4> kCiphertextMagic{'P', 'M', 'C', 'T'};
inline constexpr std::array<std::uint8_t, 4> kTdfMagic{'P', 'T', 'D', 'F'};

enum class KeyType : std::uint8_t {
  McEliecePublic = 1,
  McElieceSecret = 2,
  Cca2Public = 3,
  Cca2Secret = 4,
  ToyTdfPublic = 5,
  ToyTdfSecret = 6,
};

Bytes serialize_key(const McEliecePublicKey& pk);
Bytes serialize_key(const McElieceSecretKey& sk);
Bytes serialize_key(const Cca2PublicKey& pk);
/// The McEliece public key is not stored; it is recomputed on load.
Bytes serialize_key(const Cca2SecretKey& sk);

/// FormatError on bad magic, version, type or field shape; IntegrityError on truncation.
McEliecePublicKey deserialize_mce_public_key(std::span<const std::uint8_t> bytes);
McElieceSecretKey deserialize_mce_secret_key(std::span<const std::uint8_t> bytes);
Cca2PublicKey deserialize_public_key(std::span<const std::uint8_t> bytes);
Cca2SecretKey deserialize_secret_key(std::span<const std::uint8_t> bytes);

/// Key type byte of a PMCE file; FormatError if the header is wrong.
KeyType peek_key_type(std::span<const std::uint8_t> bytes);

Bytes serialize_ct(const BlindedCiphertext& ct, const std::array<std::uint8_t, 4>& magic = kCiphertextMagic);
/// Rejects C1 magnitudes longer than msg_len + 3*|C2| + 64 bits.
BlindedCiphertext deserialize_ct(std::span<const std::uint8_t> bytes,
                                 const std::array<std::uint8_t, 4>& magic = kCiphertextMagic);

namespace wire {

// Low-level helpers shared with the TDF key format.

class Writer {
 public:
  void raw(std::span<const std::uint8_t> b) { out_.insert(out_.end(), b.begin(), b.end()); }
  void u8(std::uint8_t v) { out_.push_back(v); }
  void u32(std::uint32_t v);
  void u64(std::uint64_t v);
  /// u32 byte length | u64 bit count | payload
  void field(std::span<const std::uint8_t> payload, std::uint64_t bit_count);
  void field_u64(std::uint64_t v);
  void field_mpz(const mpz_class& v);
  void field_bits(const BitString& b);
  void field_matrix(const BinMatrix& m);
  Bytes take() { return std::move(out_); }

 private:
  Bytes out_;
};

class Reader {
 public:
  explicit Reader(std::span<const std::uint8_t> in) : in_(in) {}
  std::span<const std::uint8_t> raw(std::size_t n);
  std::uint8_t u8();
  std::uint32_t u32();
  std::uint64_t u64();
  struct Field {
    std::span<const std::uint8_t> payload;
    std::uint64_t bit_count;
  };
  Field field();
  std::uint64_t field_u64();
  mpz_class field_mpz();
  BitString field_bits();
  BinMatrix field_matrix();
  bool done() const { return pos_ == in_.size(); }
  /// FormatError if bytes remain.
  void expect_end() const;

 private:
  std::span<const std::uint8_t> in_;
  std::size_t pos_ = 0;
};

/// magic | version | type
void write_key_header(Writer& w, const std::array<std::uint8_t, 4>& magic, KeyType type);
KeyType read_key_header(Reader& r, const std::array<std::uint8_t, 4>& magic);

}  // namespace wire
}  // namespace pcamce
