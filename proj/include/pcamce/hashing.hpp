#pragma once

#include <cstddef>
#include <array>
#include <cstdint>
#include <span>

#include "pcamce/bitstring.hpp"

namespace pcamce {

/// Identifiers stored in key files for the fixed T and G instantiations.
enum class HashId : std::uint8_t { Sha256Ctr = 1 };
enum class PrgId : std::uint8_t { Sha256Ctr = 1 };

/// T: arbitrary-length input -> k bits. SHA-256 of the length-framed input,
/// stretched by counter-mode rehashing and truncated.
BitString tcr_hash(const BitString& input, std::size_t k);

/// G: k-bit seed -> out_len bits; block i = SHA-256(SHA-256(seed) || i).
/// Output for a shorter length is always a prefix of a longer one.
BitString prg_expand(const BitString& seed, std::size_t out_len);

/// Plain SHA-256, used for key fingerprints.
std::array<std::uint8_t, 32> sha256(std::span<const std::uint8_t> data);

}  // namespace pcamce
