#include "pcamce/rng.hpp"

#include <openssl/evp.h>
#include <openssl/rand.h>
#include <openssl/sha.h>

#include <cstring>
#include <memory>

#include "pcamce/errors.hpp"

namespace pcamce {
namespace {

constexpr std::size_t kBufferBytes = 4096;

std::array<std::uint8_t, 32> sha256(std::span<const std::uint8_t> data) {
  std::array<std::uint8_t, 32> out{};
  SHA256(data.data(), data.size(), out.data());
  return out;
}

}  // namespace

Rng::Rng(std::span<const std::uint8_t> seed) : key_(sha256(seed)) {}

Rng::Rng(std::string_view seed_text)
    : Rng(std::span<const std::uint8_t>(reinterpret_cast<const std::uint8_t*>(seed_text.data()),
                                        seed_text.size())) {}

Rng::Rng(std::uint64_t seed) {
  std::array<std::uint8_t, 8> le{};
  for (int i = 0; i < 8; ++i) le[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(seed >> (8 * i));
  key_ = sha256(le);
}

Rng Rng::from_os() {
  std::array<std::uint8_t, 32> seed{};
  if (RAND_bytes(seed.data(), static_cast<int>(seed.size())) != 1)
    throw Error("RAND_bytes failed");
  return Rng(std::span<const std::uint8_t>(seed));
}

void Rng::refill() {
  // 16-byte IV: 4-byte little-endian block counter + 12-byte nonce. The
  // counter in the IV selects the starting block of the keystream.
  std::array<std::uint8_t, 16> iv{};
  const std::uint64_t first_block = block_counter_;
  for (int i = 0; i < 4; ++i) iv[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(first_block >> (8 * i));
  for (int i = 0; i < 4; ++i)
    iv[4 + static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(first_block >> (32 + 8 * i));

  std::unique_ptr<EVP_CIPHER_CTX, decltype(&EVP_CIPHER_CTX_free)> ctx(EVP_CIPHER_CTX_new(),
                                                                      &EVP_CIPHER_CTX_free);
  if (!ctx || EVP_EncryptInit_ex(ctx.get(), EVP_chacha20(), nullptr, key_.data(), iv.data()) != 1)
    throw Error("chacha20 init failed");
  buffer_.assign(kBufferBytes, 0);
  int outl = 0;
  if (EVP_EncryptUpdate(ctx.get(), buffer_.data(), &outl, buffer_.data(), static_cast<int>(kBufferBytes)) != 1)
    throw Error("chacha20 keystream failed");
  block_counter_ += kBufferBytes / 64;
  pos_ = 0;
}

void Rng::fill(std::span<std::uint8_t> out) {
  std::size_t done = 0;
  while (done < out.size()) {
    if (pos_ >= buffer_.size()) refill();
    const std::size_t take = std::min(out.size() - done, buffer_.size() - pos_);
    std::memcpy(out.data() + done, buffer_.data() + pos_, take);
    pos_ += take;
    done += take;
  }
}

std::uint64_t Rng::next_u64() {
  std::array<std::uint8_t, 8> b{};
  fill(b);
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | b[static_cast<std::size_t>(i)];
  return v;
}

std::uint64_t Rng::uniform(std::uint64_t bound) {
  if (bound == 0) throw RangeError("uniform: zero bound");
  // Rejection on the top of the range keeps the result exactly uniform.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  for (;;) {
    std::uint64_t v = next_u64();
    if (v < limit) return v % bound;
  }
}

BitString Rng::bits(std::size_t count) {
  BitString out(count);
  for (auto& w : out.words()) w = next_u64();
  out.trim();
  return out;
}

mpz_class Rng::uniform_mpz(const mpz_class& bound) {
  if (sgn(bound) <= 0) throw RangeError("uniform_mpz: bound must be positive");
  const std::size_t nbits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  for (;;) {
    mpz_class v = to_integer(bits(nbits));
    if (v < bound) return v;
  }
}

Rng Rng::fork(std::uint64_t stream) const {
  std::array<std::uint8_t, 41> material{};
  std::memcpy(material.data(), key_.data(), key_.size());
  material[32] = 'F';
  for (int i = 0; i < 8; ++i) material[33 + static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(stream >> (8 * i));
  return Rng(std::span<const std::uint8_t>(material));
}

BitString random_weight_vector(std::size_t length, std::size_t weight, Rng& rng) {
  if (weight > length) throw WeightError("weight exceeds length");
  // Partial Fisher-Yates over positions.
  std::vector<std::uint32_t> pos(length);
  for (std::size_t i = 0; i < length; ++i) pos[i] = static_cast<std::uint32_t>(i);
  BitString out(length);
  for (std::size_t i = 0; i < weight; ++i) {
    std::size_t j = i + static_cast<std::size_t>(rng.uniform(length - i));
    std::swap(pos[i], pos[j]);
    out.set(pos[i], true);
  }
  return out;
}

}  // namespace pcamce
