#include "pcamce/hashing.hpp"

#include <openssl/evp.h>
#include <openssl/sha.h>

#include <array>
#include <cstring>
#include <string_view>
#include <vector>

namespace pcamce {
namespace {

using Digest = std::array<std::uint8_t, SHA256_DIGEST_LENGTH>;

// Fetching the algorithm once avoids a provider lookup on every call.
const EVP_MD* sha256_md() {
  static const EVP_MD* md = EVP_MD_fetch(nullptr, "SHA256", nullptr);
  return md;
}

void digest(const std::uint8_t* data, std::size_t len, std::uint8_t* out) {
  if (EVP_Digest(data, len, out, nullptr, sha256_md(), nullptr) != 1) SHA256(data, len, out);
}

void put_u64(std::vector<std::uint8_t>& buf, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) buf.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

// SHA-256 over label || u64le(bit length) || packed bits.
Digest framed_digest(std::string_view label, const BitString& input) {
  std::vector<std::uint8_t> buf(label.begin(), label.end());
  put_u64(buf, input.size());
  const auto packed = pack_bytes(input);
  buf.insert(buf.end(), packed.begin(), packed.end());
  Digest d{};
  digest(buf.data(), buf.size(), d.data());
  return d;
}

BitString counter_expand(const Digest& seed, std::size_t out_len) {
  std::vector<std::uint8_t> stream;
  stream.reserve((out_len + 7) / 8 + SHA256_DIGEST_LENGTH);
  std::array<std::uint8_t, SHA256_DIGEST_LENGTH + 8> block{};
  std::memcpy(block.data(), seed.data(), seed.size());
  for (std::uint64_t ctr = 0; stream.size() * 8 < out_len; ++ctr) {
    for (int i = 0; i < 8; ++i) block[SHA256_DIGEST_LENGTH + static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(ctr >> (8 * i));
    Digest d{};
    digest(block.data(), block.size(), d.data());
    stream.insert(stream.end(), d.begin(), d.end());
  }
  stream.resize((out_len + 7) / 8);
  if (out_len % 8 != 0) stream.back() &= static_cast<std::uint8_t>(0xFFU << (8 - out_len % 8));
  return unpack_bytes(stream, out_len);
}

}  // namespace

BitString tcr_hash(const BitString& input, std::size_t k) {
  return counter_expand(framed_digest("pcamce/T/sha256-ctr", input), k);
}

BitString prg_expand(const BitString& seed, std::size_t out_len) {
  return counter_expand(framed_digest("pcamce/G/sha256-ctr", seed), out_len);
}

std::array<std::uint8_t, 32> sha256(std::span<const std::uint8_t> data) {
  std::array<std::uint8_t, 32> d{};
  digest(data.data(), data.size(), d.data());
  return d;
}

}  // namespace pcamce
