#include "pcamce/cca2.hpp"

#include "pcamce/errors.hpp"
#include "pcamce/rng.hpp"

namespace pcamce {
namespace {

void check_params(const Cca2PublicKey& pk, const BitString& msg) {
  if (pk.sec_param() < 3) throw ParameterError("security parameter k = code_dim must be >= 3");
  if (msg.empty()) throw LengthError("message must be at least one bit");
}

}  // namespace

Cca2KeyPair cca2_keygen(unsigned m, std::size_t t, Rng& rng) { return cca2_keygen_from(mce_keygen(m, t, rng)); }

Cca2KeyPair cca2_keygen_from(McElieceKeyPair mce) {
  Cca2PublicKey pk{mce.pk, HashId::Sha256Ctr, PrgId::Sha256Ctr};
  Cca2SecretKey sk{std::move(mce.sk), std::move(mce.pk), HashId::Sha256Ctr, PrgId::Sha256Ctr};
  return {std::move(pk), std::move(sk)};
}

Coins derive_coins(const Cca2PublicKey& pk, Rng& rng) {
  for (;;) {
    BitString e = random_weight_vector(pk.mce.code_len(), pk.mce.t, rng);
    BitString r = tcr_hash(e, pk.sec_param());
    if (!r.all_zero() && !r.all_one()) return {std::move(e), std::move(r)};
  }
}

Cca2Ciphertext cca2_encrypt(const Cca2PublicKey& pk, const BitString& msg, Rng& rng) {
  return diagnostics::encrypt_traced(pk, msg, rng).ct;
}

std::optional<BitString> cca2_decrypt(const Cca2SecretKey& sk, const Cca2Ciphertext& ct) {
  return diagnostics::decrypt_traced(sk, ct).message;
}

namespace diagnostics {

Cca2EncryptTrace encrypt_with_coins(const Cca2PublicKey& pk, const BitString& msg, const Coins& coins) {
  check_params(pk, msg);
  if (coins.r.size() != pk.sec_param()) throw LengthError("coins must have k bits");
  Cca2EncryptTrace tr{coins, blind_encode(msg, coins.r), {}};
  tr.ct.c1 = tr.pipeline.c1;
  tr.ct.c2 = mce_encrypt(pk.mce, coins.r, coins.error);
  tr.ct.msg_len = msg.size();
  return tr;
}

Cca2EncryptTrace encrypt_traced(const Cca2PublicKey& pk, const BitString& msg, Rng& rng) {
  check_params(pk, msg);
  return encrypt_with_coins(pk, msg, derive_coins(pk, rng));
}

Cca2DecryptTrace decrypt_traced(const Cca2SecretKey& sk, const Cca2Ciphertext& ct) {
  Cca2DecryptTrace tr;
  if (ct.c2.size() != sk.mce_pk.code_len()) throw LengthError("C2 length != code length");
  auto dec = mce_decrypt(sk.mce, ct.c2);
  if (!dec) {
    tr.reason = Rejection::DecodeFail;
    return tr;
  }
  tr.coins = dec->message;
  tr.error = ct.c2 ^ vec_mat_mul(*tr.coins, sk.mce_pk.g_pub);
  if (tcr_hash(*tr.error, sk.mce_pk.code_dim()) != *tr.coins) {
    tr.reason = Rejection::Eq2Fail;
    return tr;
  }
  tr.pipeline = blind_decode(ct.c1, *tr.coins, static_cast<std::size_t>(ct.msg_len));
  tr.reason = tr.pipeline.reason;
  tr.message = tr.pipeline.message;
  return tr;
}

}  // namespace diagnostics
}  // namespace pcamce
