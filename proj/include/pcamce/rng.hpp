#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "pcamce/bitstring.hpp"

namespace pcamce {

/// Deterministic random source: ChaCha20 keystream keyed by SHA-256(seed).
///
/// Every sampler in the library takes an Rng& explicitly. A given seed
/// produces the same stream on every platform, which is what makes key
/// generation and the KAT files reproducible.
class Rng {
 public:
  explicit Rng(std::span<const std::uint8_t> seed);
  explicit Rng(std::string_view seed_text);
  explicit Rng(std::uint64_t seed);

  /// Seeded from the operating system.
  static Rng from_os();

  void fill(std::span<std::uint8_t> out);
  std::uint64_t next_u64();
  /// Uniform in [0, bound). bound must be nonzero.
  std::uint64_t uniform(std::uint64_t bound);
  bool next_bit() { return (next_u64() & 1U) != 0; }
  BitString bits(std::size_t count);
  /// Uniform integer in [0, bound) for arbitrary-precision bound > 0.
  mpz_class uniform_mpz(const mpz_class& bound);

  /// Independent child stream; the parent is not advanced.
  Rng fork(std::uint64_t stream) const;

  const std::array<std::uint8_t, 32>& key() const { return key_; }

 private:
  void refill();

  std::array<std::uint8_t, 32> key_{};
  std::uint64_t block_counter_ = 0;
  std::vector<std::uint8_t> buffer_;
  std::size_t pos_ = 0;
};

/// Uniformly random vector of the given length and exact Hamming weight.
BitString random_weight_vector(std::size_t length, std::size_t weight, Rng& rng);

}  // namespace pcamce
