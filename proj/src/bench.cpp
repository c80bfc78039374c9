#include "pcamce/bench.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <vector>

#include "pcamce/cca2.hpp"
#include "pcamce/errors.hpp"
#include "pcamce/rng.hpp"
#include "pcamce/serialize.hpp"

namespace pcamce {
namespace {

using Clock = std::chrono::steady_clock;

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

template <typename F>
double time_us(F&& f) {
  const auto t0 = Clock::now();
  f();
  return std::chrono::duration<double, std::micro>(Clock::now() - t0).count();
}

// Keeps results observable so the timed calls are not optimised away.
volatile std::size_t g_sink = 0;

}  // namespace

BenchResult run_bench(unsigned m, std::size_t t, std::size_t trials, Rng& rng, std::size_t msg_bits) {
  if (trials == 0) throw ParameterError("trials must be >= 1");
  const Cca2KeyPair kp = cca2_keygen(m, t, rng);
  const McEliecePublicKey& pk = kp.pk.mce;
  const McElieceSecretKey& sk = kp.sk.mce;

  BenchResult res;
  res.m = m;
  res.t = t;
  res.trials = trials;
  res.msg_bits = msg_bits ? msg_bits : pk.code_dim();

  std::vector<double> me, md, ce, cd;
  // Interleaved so clock drift and cache state affect all four alike.
  for (std::size_t i = 0; i < trials; ++i) {
    const BitString mce_msg = rng.bits(pk.code_dim());
    const BitString msg = rng.bits(res.msg_bits);
    BitString c;
    me.push_back(time_us([&] { c = mce_encrypt(pk, mce_msg, random_weight_vector(pk.code_len(), pk.t, rng)); }));
    md.push_back(time_us([&] { g_sink = g_sink + mce_decrypt(sk, c).has_value(); }));
    Cca2Ciphertext ct;
    ce.push_back(time_us([&] { ct = cca2_encrypt(kp.pk, msg, rng); }));
    cd.push_back(time_us([&] { g_sink = g_sink + cca2_decrypt(kp.sk, ct).has_value(); }));
  }
  res.mce_encrypt_us = median(me);
  res.mce_decrypt_us = median(md);
  res.cca2_encrypt_us = median(ce);
  res.cca2_decrypt_us = median(cd);

  res.mce_pk_bytes = serialize_key(pk).size();
  res.mce_sk_bytes = serialize_key(sk).size();
  res.cca2_pk_bytes = serialize_key(kp.pk).size();
  res.cca2_sk_bytes = serialize_key(kp.sk).size();
  return res;
}

std::string format_text(const BenchResult& r) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(1);
  os << "params        m=" << r.m << " t=" << r.t << "  trials=" << r.trials << "  msg_bits=" << r.msg_bits << "\n"
     << "mce_encrypt   " << r.mce_encrypt_us << " us\n"
     << "mce_decrypt   " << r.mce_decrypt_us << " us\n"
     << "cca2_encrypt  " << r.cca2_encrypt_us << " us\n"
     << "cca2_decrypt  " << r.cca2_decrypt_us << " us\n";
  os.precision(3);
  os << "enc ratio     " << r.encrypt_ratio() << "\n"
     << "dec ratio     " << r.decrypt_ratio() << "\n"
     << "pk bytes      mce " << r.mce_pk_bytes << "  cca2 " << r.cca2_pk_bytes << "\n"
     << "sk bytes      mce " << r.mce_sk_bytes << "  cca2 " << r.cca2_sk_bytes << "\n";
  return os.str();
}

std::string format_table(const BenchResult& r) {
  std::ostringstream os;
  os << "m\tt\ttrials\tmsg_bits\tmce_enc_us\tmce_dec_us\tcca2_enc_us\tcca2_dec_us\tenc_ratio\tdec_ratio\t"
        "mce_pk\tmce_sk\tcca2_pk\tcca2_sk\n"
     << r.m << '\t' << r.t << '\t' << r.trials << '\t' << r.msg_bits << '\t' << r.mce_encrypt_us << '\t'
     << r.mce_decrypt_us << '\t' << r.cca2_encrypt_us << '\t' << r.cca2_decrypt_us << '\t' << r.encrypt_ratio()
     << '\t' << r.decrypt_ratio() << '\t' << r.mce_pk_bytes << '\t' << r.mce_sk_bytes << '\t' << r.cca2_pk_bytes
     << '\t' << r.cca2_sk_bytes << '\n';
  return os.str();
}

}  // namespace pcamce
