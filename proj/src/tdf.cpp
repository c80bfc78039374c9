#include "pcamce/tdf.hpp"

#include "pcamce/errors.hpp"
#include "pcamce/rng.hpp"
#include "pcamce/serialize.hpp"

namespace pcamce {
namespace {

mpz_class random_prime(std::size_t bits, Rng& rng) {
  mpz_class top;
  mpz_ui_pow_ui(top.get_mpz_t(), 2, bits - 1);
  for (;;) {
    mpz_class p = rng.uniform_mpz(top) + top;
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    if (mpz_sizeinbase(p.get_mpz_t(), 2) == bits) return p;
  }
}

}  // namespace

ToyModularTdf ToyModularTdf::generate(std::size_t k, Rng& rng) {
  if (k < 3) throw ParameterError("toy TDF needs k >= 3");
  const std::size_t bits = (k + 3 + 1) / 2;
  const mpz_class e = kPublicExponent;
  for (;;) {
    const mpz_class p = random_prime(bits, rng);
    const mpz_class q = random_prime(bits, rng);
    if (p == q) continue;
    const mpz_class lambda = lcm(mpz_class(p - 1), mpz_class(q - 1));
    mpz_class d;
    if (mpz_invert(d.get_mpz_t(), e.get_mpz_t(), lambda.get_mpz_t()) == 0) continue;
    return ToyModularTdf(k, p * q, e, d);
  }
}

ToyModularTdf::ToyModularTdf(std::size_t k, mpz_class n, mpz_class e) : k_(k), n_(std::move(n)), e_(std::move(e)) {
  if (k_ < 1) throw ParameterError("k must be positive");
  if (mpz_sizeinbase(n_.get_mpz_t(), 2) <= k_) throw ParameterError("modulus must exceed 2^k");
  if (e_ < 3) throw ParameterError("bad public exponent");
}

ToyModularTdf::ToyModularTdf(std::size_t k, mpz_class n, mpz_class e, mpz_class d)
    : ToyModularTdf(k, std::move(n), std::move(e)) {
  // Spot check the exponent pair on a fixed base instead of factoring N.
  const mpz_class base = 2;
  mpz_class t;
  mpz_powm(t.get_mpz_t(), base.get_mpz_t(), e_.get_mpz_t(), n_.get_mpz_t());
  mpz_powm(t.get_mpz_t(), t.get_mpz_t(), d.get_mpz_t(), n_.get_mpz_t());
  if (t != base) throw ParameterError("secret exponent does not invert the public one");
  d_ = std::move(d);
}

BitString ToyModularTdf::forward(const BitString& x) const {
  if (x.size() != k_) throw LengthError("toy TDF input must have k bits");
  const mpz_class xv = to_integer(x);
  mpz_class y;
  mpz_powm(y.get_mpz_t(), xv.get_mpz_t(), e_.get_mpz_t(), n_.get_mpz_t());
  return from_integer(y, image_bits());
}

std::optional<BitString> ToyModularTdf::inverse(const BitString& y) const {
  if (!d_) throw ParameterError("toy TDF has no trapdoor");
  if (y.size() != image_bits()) return std::nullopt;
  const mpz_class yv = to_integer(y);
  if (yv >= n_) return std::nullopt;
  mpz_class x;
  mpz_powm(x.get_mpz_t(), yv.get_mpz_t(), d_->get_mpz_t(), n_.get_mpz_t());
  if (x != 0 && mpz_sizeinbase(x.get_mpz_t(), 2) > k_) return std::nullopt;
  return from_integer(x, k_);
}

McElieceTdf::McElieceTdf(McEliecePublicKey pk, BitString fixed_error)
    : pk_(std::move(pk)), fixed_error_(std::move(fixed_error)) {
  if (fixed_error_.size() != pk_.code_len()) throw LengthError("fixed error must have code length");
  if (fixed_error_.weight() != pk_.t) throw WeightError("fixed error must have weight t");
}

McElieceTdf::McElieceTdf(McEliecePublicKey pk, McElieceSecretKey sk, BitString fixed_error)
    : McElieceTdf(std::move(pk), std::move(fixed_error)) {
  sk_ = std::move(sk);
}

BitString McElieceTdf::forward(const BitString& x) const { return mce_encrypt(pk_, x, fixed_error_); }

std::optional<BitString> McElieceTdf::inverse(const BitString& y) const {
  if (!sk_) throw ParameterError("McEliece TDF has no trapdoor");
  if (y.size() != pk_.code_len()) return std::nullopt;
  auto dec = mce_decrypt(*sk_, y);
  if (!dec || dec->error != fixed_error_) return std::nullopt;
  return dec->message;
}

BitString sample_tdf_coins(std::size_t k, Rng& rng) {
  for (;;) {
    BitString r = rng.bits(k);
    if (!r.all_zero() && !r.all_one()) return r;
  }
}

TdfCiphertext tdf_encrypt(const TrapdoorFunction& f, const BitString& msg, Rng& rng) {
  if (f.domain_bits() < 3) throw ParameterError("security parameter k must be >= 3");
  if (msg.empty()) throw LengthError("message must be at least one bit");
  return diagnostics::tdf_encrypt_with_coins(f, msg, sample_tdf_coins(f.domain_bits(), rng)).ct;
}

std::optional<BitString> tdf_decrypt(const TrapdoorFunction& f, const TdfCiphertext& ct) {
  return diagnostics::tdf_decrypt_traced(f, ct).message;
}

namespace diagnostics {

TdfEncryptTrace tdf_encrypt_with_coins(const TrapdoorFunction& f, const BitString& msg, const BitString& r) {
  if (f.domain_bits() < 3) throw ParameterError("security parameter k must be >= 3");
  if (msg.empty()) throw LengthError("message must be at least one bit");
  if (r.size() != f.domain_bits()) throw LengthError("coins must have k bits");
  if (r.all_zero() || r.all_one()) throw DegenerateRandomnessError("coins must not be all-zero or all-one");
  TdfEncryptTrace tr{r, blind_encode(msg, r), {}};
  tr.ct.c1 = tr.pipeline.c1;
  tr.ct.c2 = f.forward(r);
  tr.ct.msg_len = msg.size();
  return tr;
}

TdfDecryptTrace tdf_decrypt_traced(const TrapdoorFunction& f, const TdfCiphertext& ct) {
  TdfDecryptTrace tr;
  tr.coins = f.inverse(ct.c2);
  if (!tr.coins) {
    tr.reason = Rejection::InversionFail;
    return tr;
  }
  tr.pipeline = blind_decode(ct.c1, *tr.coins, static_cast<std::size_t>(ct.msg_len));
  tr.reason = tr.pipeline.reason;
  tr.message = tr.pipeline.message;
  return tr;
}

}  // namespace diagnostics

std::vector<std::uint8_t> serialize_tdf_key(const ToyModularTdf& f) {
  wire::Writer w;
  wire::write_key_header(w, kTdfMagic, f.has_trapdoor() ? KeyType::ToyTdfSecret : KeyType::ToyTdfPublic);
  w.field_u64(f.domain_bits());
  w.field_mpz(f.modulus());
  w.field_mpz(f.public_exponent());
  if (f.has_trapdoor()) w.field_mpz(*f.secret_exponent());
  return w.take();
}

ToyModularTdf deserialize_tdf_key(std::span<const std::uint8_t> bytes) {
  wire::Reader r(bytes);
  const KeyType type = wire::read_key_header(r, kTdfMagic);
  if (type != KeyType::ToyTdfPublic && type != KeyType::ToyTdfSecret) throw FormatError("not a TDF key");
  const std::uint64_t k = r.field_u64();
  mpz_class n = r.field_mpz();
  mpz_class e = r.field_mpz();
  try {
    if (type == KeyType::ToyTdfPublic) {
      r.expect_end();
      return ToyModularTdf(k, std::move(n), std::move(e));
    }
    mpz_class d = r.field_mpz();
    r.expect_end();
    return ToyModularTdf(k, std::move(n), std::move(e), std::move(d));
  } catch (const ParameterError& err) {
    throw FormatError(std::string("inconsistent TDF key: ") + err.what());
  }
}

}  // namespace pcamce
