#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "pcamce/bitstring.hpp"

namespace pcamce {

/// Block layout that the coins r impose on an n-bit message.
struct PcaLayout {
  std::size_t msg_len = 0;    // n
  std::size_t sec_param = 0;  // k = |r|
  std::size_t weight = 0;     // h = wt(r)
  std::size_t blocks = 0;     // l = h if 2h >= k, else k - h
  std::size_t block_len = 0;  // v = ceil(n / l)
  std::size_t pad_len = 0;    // l*v - n
  BitString rbs;              // msb(r, pad_len)

  std::size_t encoded_len() const { return blocks * block_len; }
  friend bool operator==(const PcaLayout&, const PcaLayout&) = default;
};

/// Lehmer code (u_1, ..., u_l) with 0 <= u_i <= l - i, so u_l = 0.
struct FactorialCarry {
  std::vector<std::size_t> digits;

  std::size_t size() const { return digits.size(); }
  /// Throws CarryRangeError if some u_i exceeds l - i.
  void validate() const;
  friend bool operator==(const FactorialCarry&, const FactorialCarry&) = default;
};

/// DegenerateRandomnessError if r is all zeros or all ones; ParameterError if n = 0.
PcaLayout derive_layout(std::size_t msg_len, const BitString& r);

/// Factorial-base digits of s for l positions. RangeError unless 0 <= s < l!.
FactorialCarry s_to_carry(const mpz_class& s, std::size_t l);
/// sum u_i (l - i)!; inverse of s_to_carry.
mpz_class carry_to_s(const FactorialCarry& u);

/// Zero-based source index for each output slot: at step i take the entry at
/// position u_i of the still-unused list and remove it.
std::vector<std::size_t> carry_permutation(const FactorialCarry& u);

std::vector<BitString> permute_blocks(const std::vector<BitString>& blocks, const FactorialCarry& u);
std::vector<BitString> unpermute_blocks(const std::vector<BitString>& permuted, const FactorialCarry& u);

/// Pads msg with the layout's RBS, splits into l blocks of v bits and
/// reorders them by the carry of s.
BitString pca_encode(const BitString& msg, const BitString& r, const mpz_class& s);
/// Same, with the carry supplied directly (skips the s -> carry conversion).
BitString pca_encode(const BitString& msg, const PcaLayout& layout, const FactorialCarry& u);

/// Inverse permutation; returns the padded l*v-bit string (pad not checked).
/// LengthError if |encoded| != l*v for the layout of (msg_len, r).
BitString pca_decode(const BitString& encoded, std::size_t msg_len, const BitString& r, const mpz_class& s);
BitString pca_decode(const BitString& encoded, const PcaLayout& layout, const FactorialCarry& u);

/// Left rotation: output position i holds input position (i + q) mod |x|.
/// RangeError unless q < |x|.
BitString circular_shift(const BitString& x, std::size_t q);
BitString circular_unshift(const BitString& x, std::size_t q);

}  // namespace pcamce
