#include <doctest.h>

#include <cmath>
#include <set>
#include <string>

#include "pcamce/hashing.hpp"
#include "pcamce/rng.hpp"

using namespace pcamce;

// Vectors computed with Python's hashlib from the documented framing:
// seed = SHA-256(label || u64le(bits) || packed), block i = SHA-256(seed || u64le(i)).
TEST_CASE("T and G against an independent SHA-256 implementation") {
  CHECK(tcr_hash(BitString(), 8) == BitString::from_string("00010100"));
  CHECK(tcr_hash(BitString::from_string("1"), 8) == BitString::from_string("01100110"));
  CHECK(tcr_hash(BitString::from_string("10110101"), 8) == BitString::from_string("11010101"));
  CHECK(tcr_hash(BitString(100), 8) == BitString::from_string("01010001"));
  CHECK(to_integer(tcr_hash(BitString::from_string("10110101"), 300)) ==
        mpz_class("0xd5d85f18074c0d5c625df55befa76bf50cc16eb517fd8cce0838fe2ee775986cda714df9267"));
  CHECK(to_integer(tcr_hash(BitString(), 300)) ==
        mpz_class("0x1430911101dbf4e4170bf65d6b321a23dadf5b1c5b16fd20bb554d8a3ecc6d6f84512d0c8eb"));
  CHECK(prg_expand(BitString(), 20) == BitString::from_string("10010110111011011100"));
  CHECK(prg_expand(BitString::from_string("1"), 20) == BitString::from_string("01101001000000110001"));
  CHECK(prg_expand(BitString::from_string("10110101"), 20) == BitString::from_string("01100110001000101111"));
  CHECK(prg_expand(BitString(100), 20) == BitString::from_string("10101001110001011001"));

  const std::string abc = "abc";
  const auto d = sha256({reinterpret_cast<const std::uint8_t*>(abc.data()), abc.size()});
  CHECK(to_hex(d) == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("T is deterministic, length exact, and separates inputs by length") {
  Rng rng(std::uint64_t{1});
  const BitString x = rng.bits(1024);
  for (std::size_t k : {1u, 8u, 255u, 256u, 257u, 524u}) {
    CHECK(tcr_hash(x, k).size() == k);
    CHECK(tcr_hash(x, k) == tcr_hash(x, k));
  }
  // "0" and "00" pack to the same byte; the length frame tells them apart.
  CHECK(tcr_hash(BitString::from_string("0"), 64) != tcr_hash(BitString::from_string("00"), 64));
  // T and G use different labels.
  CHECK(tcr_hash(x, 64) != prg_expand(x, 64));
}

TEST_CASE("no T collisions over 10^4 random inputs at k = 64") {
  Rng rng(std::uint64_t{2});
  std::set<std::string> seen;
  for (int i = 0; i < 10000; ++i) seen.insert(tcr_hash(rng.bits(1024), 64).to_string());
  CHECK(seen.size() == 10000);
}

TEST_CASE("G is prefix consistent") {
  Rng rng(std::uint64_t{3});
  for (int i = 0; i < 50; ++i) {
    const BitString r = rng.bits(8 + rng.uniform(600));
    const BitString longer = prg_expand(r, 1000);
    CHECK(prg_expand(r, 64) == msb(prg_expand(r, 128), 64));
    for (std::size_t n : {1u, 7u, 255u, 256u, 513u}) CHECK(prg_expand(r, n) == msb(longer, n));
  }
}

TEST_CASE("G monobit sanity within 3 sigma") {
  Rng rng(std::uint64_t{4});
  for (int i = 0; i < 10; ++i) {
    const BitString out = prg_expand(rng.bits(524), 10000);
    const double dev = std::abs(static_cast<double>(out.weight()) - 5000.0);
    CHECK(dev <= 3.0 * std::sqrt(10000.0 * 0.25));
  }
}
