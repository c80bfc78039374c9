#include "pcamce/bitstring.hpp"

#include <algorithm>
#include <array>
#include <bit>

#include "pcamce/errors.hpp"

namespace pcamce {

BitString BitString::from_string(std::string_view bits) {
  BitString out(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1')
      out.set(i, true);
    else if (bits[i] != '0')
      throw FormatError("bit string may only contain '0' and '1'");
  }
  return out;
}

std::size_t BitString::weight() const {
  std::size_t w = 0;
  for (Word word : words_) w += static_cast<std::size_t>(std::popcount(word));
  return w;
}

bool BitString::all_zero() const {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

bool BitString::all_one() const { return weight() == size_; }

BitString BitString::slice(std::size_t pos, std::size_t len) const {
  if (pos > size_ || len > size_ - pos) throw LengthError("slice out of range");
  BitString out(len);
  if (pos % kWordBits == 0) {
    std::copy_n(words_.begin() + static_cast<std::ptrdiff_t>(pos / kWordBits), out.words_.size(),
                out.words_.begin());
    out.trim();
    return out;
  }
  const std::size_t shift = pos % kWordBits;
  const std::size_t base = pos / kWordBits;
  for (std::size_t w = 0; w < out.words_.size(); ++w) {
    Word lo = words_[base + w] >> shift;
    Word hi = base + w + 1 < words_.size() ? words_[base + w + 1] << (kWordBits - shift) : 0;
    out.words_[w] = lo | hi;
  }
  out.trim();
  return out;
}

void BitString::assign(std::size_t pos, const BitString& src) {
  if (pos > size_ || src.size_ > size_ - pos) throw LengthError("assign out of range");
  if (src.size_ == 0) return;
  const std::size_t shift = pos % kWordBits;
  const std::size_t base = pos / kWordBits;
  const std::size_t end = pos + src.size_;
  for (std::size_t w = 0; w < src.words_.size(); ++w) {
    const std::size_t seg_begin = pos + w * kWordBits;
    const std::size_t seg_len = std::min(kWordBits, end - seg_begin);
    const Word mask = seg_len == kWordBits ? ~Word{0} : ((Word{1} << seg_len) - 1);
    const Word bits = src.words_[w] & mask;
    // low part lands in words_[base + w]
    words_[base + w] = (words_[base + w] & ~(mask << shift)) | (bits << shift);
    if (shift != 0 && seg_len > kWordBits - shift) {
      const Word hi_mask = mask >> (kWordBits - shift);
      words_[base + w + 1] = (words_[base + w + 1] & ~hi_mask) | (bits >> (kWordBits - shift));
    }
  }
}

void BitString::append(const BitString& tail) {
  const std::size_t old = size_;
  size_ += tail.size_;
  words_.resize(words_for(size_), 0);
  assign(old, tail);
}

std::string BitString::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i)
    if (get(i)) s[i] = '1';
  return s;
}

BitString& BitString::operator^=(const BitString& other) {
  if (other.size_ != size_) throw DimensionError("xor of bit strings with different lengths");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

void BitString::trim() {
  if (size_ % kWordBits != 0 && !words_.empty())
    words_.back() &= (Word{1} << (size_ % kWordBits)) - 1;
}

namespace {

// Storage keeps position i at bit i % 64 of its word, while packed bytes put
// the first bit in the MSB, so each storage byte is bit-reversed on the way.
constexpr std::array<std::uint8_t, 256> make_reverse_table() {
  std::array<std::uint8_t, 256> t{};
  for (unsigned v = 0; v < 256; ++v) {
    unsigned r = 0;
    for (unsigned b = 0; b < 8; ++b)
      if (v & (1U << b)) r |= 0x80U >> b;
    t[v] = static_cast<std::uint8_t>(r);
  }
  return t;
}
constexpr auto kReverse = make_reverse_table();

}  // namespace

mpz_class to_integer(const BitString& x) {
  mpz_class v;
  if (x.empty()) return v;
  const auto bytes = pack_bytes(x);
  mpz_import(v.get_mpz_t(), bytes.size(), 1, 1, 1, 0, bytes.data());
  mpz_tdiv_q_2exp(v.get_mpz_t(), v.get_mpz_t(), bytes.size() * 8 - x.size());
  return v;
}

BitString from_integer(const mpz_class& value, std::size_t length) {
  if (sgn(value) < 0) throw OverflowError("from_integer: negative value");
  if (sgn(value) == 0) return BitString(length);
  if (mpz_sizeinbase(value.get_mpz_t(), 2) > length)
    throw OverflowError("from_integer: value does not fit in " + std::to_string(length) + " bits");
  // Left-align the value in whole bytes, then unpack MSB-first.
  const std::size_t nbytes = (length + 7) / 8;
  mpz_class aligned;
  mpz_mul_2exp(aligned.get_mpz_t(), value.get_mpz_t(), nbytes * 8 - length);
  std::vector<std::uint8_t> bytes(nbytes, 0);
  std::size_t written = 0;
  std::vector<std::uint8_t> tmp(nbytes);
  mpz_export(tmp.data(), &written, 1, 1, 1, 0, aligned.get_mpz_t());
  std::copy_n(tmp.begin(), written, bytes.end() - static_cast<std::ptrdiff_t>(written));
  return unpack_bytes(bytes, length);
}

BitString lsb(const BitString& x, std::size_t count) {
  if (count > x.size()) throw LengthError("lsb: count exceeds length");
  return x.slice(x.size() - count, count);
}

BitString msb(const BitString& x, std::size_t count) {
  if (count > x.size()) throw LengthError("msb: count exceeds length");
  return x.slice(0, count);
}

std::size_t hamming_weight(const BitString& x) { return x.weight(); }

mpz_class complement_value(const BitString& r) {
  mpz_class all_ones;
  mpz_ui_pow_ui(all_ones.get_mpz_t(), 2, r.size());
  all_ones -= 1;
  return all_ones - to_integer(r);
}

BitString concat(const BitString& a, const BitString& b) {
  BitString out = a;
  out.append(b);
  return out;
}

BitString xor_bits(const BitString& a, const BitString& b) { return a ^ b; }

std::vector<std::uint8_t> pack_bytes(const BitString& x) {
  std::vector<std::uint8_t> out((x.size() + 7) / 8, 0);
  const auto words = x.words();
  for (std::size_t j = 0; j < out.size(); ++j)
    out[j] = kReverse[(words[j / 8] >> (8 * (j % 8))) & 0xFFU];
  return out;
}

BitString unpack_bytes(std::span<const std::uint8_t> bytes, std::size_t bit_length) {
  const std::size_t need = (bit_length + 7) / 8;
  if (bytes.size() < need) throw LengthError("unpack_bytes: buffer too short");
  if (bit_length % 8 != 0) {
    const std::uint8_t pad_mask = static_cast<std::uint8_t>(0xFFU >> (bit_length % 8));
    if (bytes[need - 1] & pad_mask) throw FormatError("nonzero padding bits");
  }
  BitString out(bit_length);
  auto words = out.words();
  for (std::size_t j = 0; j < need; ++j) words[j / 8] |= Word{kReverse[bytes[j]]} << (8 * (j % 8));
  return out;
}

std::string to_hex(std::span<const std::uint8_t> bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string s;
  s.reserve(bytes.size() * 2);
  for (std::uint8_t b : bytes) {
    s.push_back(kDigits[b >> 4]);
    s.push_back(kDigits[b & 0xF]);
  }
  return s;
}

std::vector<std::uint8_t> from_hex(std::string_view hex) {
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
  };
  if (hex.size() % 2 != 0) throw FormatError("odd-length hex string");
  std::vector<std::uint8_t> out(hex.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i) {
    int hi = nibble(hex[2 * i]);
    int lo = nibble(hex[2 * i + 1]);
    if (hi < 0 || lo < 0) throw FormatError("invalid hex digit");
    out[i] = static_cast<std::uint8_t>((hi << 4) | lo);
  }
  return out;
}

}  // namespace pcamce
