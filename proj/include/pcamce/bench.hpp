#pragma once

#include <cstddef>
#include <string>

namespace pcamce {

class Rng;

struct BenchResult {
  unsigned m = 0;
  std::size_t t = 0;
  std::size_t trials = 0;
  std::size_t msg_bits = 0;

  // Median wall time per call, microseconds.
  double mce_encrypt_us = 0;
  double mce_decrypt_us = 0;
  double cca2_encrypt_us = 0;
  double cca2_decrypt_us = 0;

  // Serialized sizes in bytes.
  std::size_t mce_pk_bytes = 0;
  std::size_t mce_sk_bytes = 0;
  std::size_t cca2_pk_bytes = 0;
  std::size_t cca2_sk_bytes = 0;

  double encrypt_ratio() const { return cca2_encrypt_us / mce_encrypt_us; }
  double decrypt_ratio() const { return cca2_decrypt_us / mce_decrypt_us; }
};

/// Times the bare McEliece operations against the CCA2 ones on one key
/// pair. mce_encrypt includes sampling its error vector, as cca2_encrypt
/// does. msg_bits = 0 selects the code dimension k, the amount of plaintext
/// a single McEliece encryption carries. ParameterError if trials = 0.
BenchResult run_bench(unsigned m, std::size_t t, std::size_t trials, Rng& rng, std::size_t msg_bits = 0);

std::string format_text(const BenchResult& r);
std::string format_table(const BenchResult& r);

}  // namespace pcamce
