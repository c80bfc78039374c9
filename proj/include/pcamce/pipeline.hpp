#pragma once

// Message-side pipeline shared by the McEliece-based scheme and PKE[TDF]:
// PRG masking, PCA block permutation, circular shift and the C1 blinding
// integer. Only the way the coins r travel (C2) differs between the two.

#include <cstddef>
#include <cstdint>
#include <optional>

#include <gmpxx.h>

#include "pcamce/bitstring.hpp"
#include "pcamce/pca.hpp"

namespace pcamce {

/// Ciphertext shape common to both schemes: C1 blinds the encoded message,
/// C2 carries the coins.
struct BlindedCiphertext {
  mpz_class c1;
  BitString c2;
  std::uint64_t msg_len = 0;

  friend bool operator==(const BlindedCiphertext& a, const BlindedCiphertext& b) {
    return a.c1 == b.c1 && a.c2 == b.c2 && a.msg_len == b.msg_len;
  }
};

struct CoinSchedule {
  FactorialCarry carry;  // u_i = (r + i) mod (l - i), u_l = 0
  mpz_class s;           // carry_to_s(carry)
  std::size_t z = 0;     // sum of the carry digits
};

/// Carry, s and z from the integer value of the coins. ParameterError if l < 2.
CoinSchedule derive_s_z(const mpz_class& r, std::size_t l);

/// Every intermediate of the encryption side, for white-box tests and KATs.
struct EncodeTrace {
  PcaLayout layout;
  CoinSchedule schedule;
  std::size_t shift = 0;  // q = r mod n
  BitString masked;       // m xor G(r)
  BitString encoded;      // y' = PCA(masked)
  BitString shifted;      // y = CS_q(y')
  mpz_class c1;           // (h*y + r_bar)*r + z
};

/// Runs the message-side pipeline for coins r (must be non-degenerate).
EncodeTrace blind_encode(const BitString& msg, const BitString& r);

/// C1 = (h*y + r_bar)*r + z.
mpz_class blind_value(const mpz_class& y, std::size_t h, const mpz_class& r, const mpz_class& r_bar, std::size_t z);

/// y = ((c1 - z)/r - r_bar)/h with exact division, accepted only if it fits
/// in expected_bits bits. nullopt on any divisibility, sign or range failure.
std::optional<BitString> recover_y(const mpz_class& c1, const mpz_class& r, const mpz_class& r_bar, std::size_t h,
                                   std::size_t z, std::size_t expected_bits);

/// Why a decryption returned the rejection symbol.
enum class Rejection : std::uint8_t {
  None = 0,
  DecodeFail,     // McEliece decoding failed
  Eq2Fail,        // r != T(e)
  DegenerateR,    // r is all-zero or all-one
  Eq3Fail,        // C1 does not unblind to an l*v-bit integer
  Eq4Fail,        // pad region does not match msb(r)
  InversionFail,  // TDF inverse produced no k-bit preimage
};

const char* rejection_name(Rejection r);

struct DecodeTrace {
  Rejection reason = Rejection::None;
  std::optional<PcaLayout> layout;
  std::optional<CoinSchedule> schedule;
  std::size_t shift = 0;
  std::optional<BitString> shifted;  // recovered y
  std::optional<BitString> encoded;  // y'
  std::optional<BitString> padded;   // PCA^-1(y'): masked message || pad region
  std::optional<BitString> message;
};

/// Message-side decryption for known coins r: the degenerate-r check, then
/// unblinding (C1 consistency), unshift, PCA^-1, unmasking and the pad check.
DecodeTrace blind_decode(const mpz_class& c1, const BitString& r, std::size_t msg_len);

}  // namespace pcamce
