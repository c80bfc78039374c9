#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace pcamce {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

/// Ordered sequence of bits with an explicit length.
///
/// Position 0 is the first (leftmost) bit. When a bit string is read as a
/// number, the first bit is the most significant one:
/// x = sum_i x_i * 2^(n-1-i) for zero-based i.
///
/// Storage packs position i into word i / 64 at bit i % 64. Bits beyond
/// size() in the last word are always zero, so word-wise comparison and
/// popcount are exact.
class BitString {
 public:
  BitString() = default;
  explicit BitString(std::size_t length) : size_(length), words_(words_for(length), 0) {}

  /// Parses a string of '0'/'1' characters.
  static BitString from_string(std::string_view bits);

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  bool get(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(std::size_t i, bool value) {
    const Word mask = Word{1} << (i % kWordBits);
    Word& w = words_[i / kWordBits];
    w = (w & ~mask) | (-static_cast<Word>(value) & mask);
  }
  void flip(std::size_t i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

  std::span<const Word> words() const { return words_; }
  std::span<Word> words() { return words_; }

  std::size_t weight() const;
  bool all_zero() const;
  bool all_one() const;

  /// Substring [pos, pos + len).
  BitString slice(std::size_t pos, std::size_t len) const;
  void append(const BitString& tail);
  /// Copies `src` into positions [pos, pos + src.size()).
  void assign(std::size_t pos, const BitString& src);

  std::string to_string() const;

  BitString& operator^=(const BitString& other);
  friend BitString operator^(BitString a, const BitString& b) { return a ^= b; }
  friend bool operator==(const BitString& a, const BitString& b) = default;

  /// Clears the padding bits past size() in the last word.
  void trim();

 private:
  std::size_t size_ = 0;
  std::vector<Word> words_;
};

/// Decimal value: first bit most significant; empty string -> 0.
mpz_class to_integer(const BitString& x);
/// Inverse of to_integer with leading-zero padding to exactly `length` bits.
/// Throws OverflowError if value >= 2^length or value < 0.
BitString from_integer(const mpz_class& value, std::size_t length);

/// Rightmost `count` bits. Throws LengthError if count > |x|.
BitString lsb(const BitString& x, std::size_t count);
/// Leftmost `count` bits. Throws LengthError if count > |x|.
BitString msb(const BitString& x, std::size_t count);

std::size_t hamming_weight(const BitString& x);
/// 2^|r| - 1 - to_integer(r).
mpz_class complement_value(const BitString& r);

/// a || b
BitString concat(const BitString& a, const BitString& b);
/// Throws DimensionError on length mismatch.
BitString xor_bits(const BitString& a, const BitString& b);

/// Packs bits MSB-first into bytes; the last byte is zero-padded on the right.
std::vector<std::uint8_t> pack_bytes(const BitString& x);
/// Inverse of pack_bytes. Throws LengthError if the buffer is too short and
/// FormatError if padding bits are nonzero.
BitString unpack_bytes(std::span<const std::uint8_t> bytes, std::size_t bit_length);

std::string to_hex(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> from_hex(std::string_view hex);

}  // namespace pcamce
