#include <doctest.h>

#include "pcamce/cca2.hpp"
#include "pcamce/errors.hpp"
#include "pcamce/rng.hpp"
#include "pcamce/serialize.hpp"
#include "pcamce/tdf.hpp"

using namespace pcamce;
using diagnostics::tdf_decrypt_traced;
using diagnostics::tdf_encrypt_with_coins;

TEST_CASE("toy TDF law and key shape") {
  Rng rng(std::uint64_t{1});
  for (std::size_t k : {8u, 16u, 32u, 64u}) {
    const auto f = ToyModularTdf::generate(k, rng);
    CHECK(f.has_trapdoor());
    CHECK(f.modulus() > mpz_class(1) << k);
    CHECK(f.public_exponent() == 65537);
    for (int i = 0; i < 200; ++i) {
      const BitString x = rng.bits(k);
      const BitString y = f.forward(x);
      CHECK(y.size() == f.image_bits());
      // Independent check of the forward map with mpz_powm.
      mpz_class want;
      const mpz_class xv = to_integer(x);
      mpz_powm(want.get_mpz_t(), xv.get_mpz_t(), f.public_exponent().get_mpz_t(), f.modulus().get_mpz_t());
      CHECK(to_integer(y) == want);
      CHECK(f.inverse(y) == x);
    }
    CHECK_THROWS_AS(f.forward(BitString(k + 1)), LengthError);
    CHECK_FALSE(f.inverse(from_integer(f.modulus(), f.image_bits())).has_value());
    const auto pub = f.public_part();
    CHECK_FALSE(pub.has_trapdoor());
    CHECK_THROWS_AS(pub.inverse(f.forward(rng.bits(k))), ParameterError);
  }
  const auto f = ToyModularTdf::generate(16, rng);
  CHECK_THROWS_AS(ToyModularTdf(16, f.modulus(), f.public_exponent(), *f.secret_exponent() + 2), ParameterError);
}

TEST_CASE("McEliece with a fixed error is a TDF") {
  Rng rng(std::uint64_t{2});
  const auto kp = mce_keygen(6, 4, rng);
  const BitString e = random_weight_vector(64, 4, rng);
  const McElieceTdf f(kp.pk, kp.sk, e);
  CHECK(f.domain_bits() == kp.pk.code_dim());
  for (int i = 0; i < 300; ++i) {
    const BitString x = rng.bits(f.domain_bits());
    CHECK(f.inverse(f.forward(x)) == x);
  }
  // A word carrying a different error has no preimage.
  const BitString other = random_weight_vector(64, 4, rng);
  if (other != e) CHECK_FALSE(f.inverse(vec_mat_mul(rng.bits(f.domain_bits()), kp.pk.g_pub) ^ other).has_value());
}

TEST_CASE("PKE[TDF] completeness at k = 32, n = 256") {
  Rng rng(std::uint64_t{3});
  const auto f = ToyModularTdf::generate(32, rng);
  for (int i = 0; i < 500; ++i) {
    const BitString msg = rng.bits(256);
    REQUIRE(tdf_decrypt(f, tdf_encrypt(f, msg, rng)) == msg);
  }
  const BitString msg = rng.bits(256);
  const auto a = tdf_encrypt(f, msg, rng), b = tdf_encrypt(f, msg, rng);
  CHECK(a.c1 != b.c1);
  CHECK(a.c2 != b.c2);
  CHECK_THROWS_AS(tdf_encrypt(f, BitString(), rng), LengthError);
  CHECK_THROWS_AS(tdf_encrypt(ToyModularTdf(2, 33, 65537), rng.bits(4), rng), ParameterError);
}

TEST_CASE("coins with an all-zero carry (s = 0) round trip") {
  Rng rng(std::uint64_t{4});
  const auto f = ToyModularTdf::generate(8, rng);
  int found = 0;
  for (unsigned v = 1; v < 255; ++v) {
    const BitString r = from_integer(v, 8);
    const auto tr = tdf_encrypt_with_coins(f, rng.bits(20), r);
    if (tr.pipeline.schedule.s != 0) continue;
    ++found;
    const auto d = tdf_decrypt_traced(f, tr.ct);
    CHECK(d.reason == Rejection::None);
  }
  CHECK(found > 0);
}

TEST_CASE("C1 + 1 is rejected, corrupted C2 never yields the message") {
  Rng rng(std::uint64_t{5});
  const auto f = ToyModularTdf::generate(32, rng);
  std::size_t rejected = 0;
  double bound = 0;
  for (int i = 0; i < 300; ++i) {
    const BitString msg = rng.bits(128);
    const auto tr = tdf_encrypt_with_coins(f, msg, sample_tdf_coins(32, rng));
    auto ct = tr.ct;
    ct.c1 += 1;
    if (!tdf_decrypt(f, ct)) ++rejected;
    bound += 1.0 - 1.0 / to_integer(tr.r).get_d();

    auto ct2 = tr.ct;
    ct2.c2.flip(rng.uniform(ct2.c2.size()));
    const auto d = tdf_decrypt_traced(f, ct2);
    CHECK(d.message != msg);
    if (d.coins) CHECK(*d.coins != tr.r);
  }
  CHECK(static_cast<double>(rejected) >= bound - 3.0);
}

TEST_CASE("PKE[TDF] and the McEliece scheme share the pipeline") {
  Rng rng(std::uint64_t{6});
  const auto kp = cca2_keygen(6, 4, rng);
  const McElieceTdf f(kp.pk.mce, kp.sk.mce, random_weight_vector(64, 4, rng));
  for (int i = 0; i < 100; ++i) {
    const BitString msg = rng.bits(1 + rng.uniform(200));
    const Coins coins = derive_coins(kp.pk, rng);
    const auto a = diagnostics::encrypt_with_coins(kp.pk, msg, coins);
    const auto b = tdf_encrypt_with_coins(f, msg, coins.r);
    CHECK(a.pipeline.layout == b.pipeline.layout);
    CHECK(a.pipeline.encoded == b.pipeline.encoded);
    CHECK(a.pipeline.shifted == b.pipeline.shifted);
    CHECK(a.ct.c1 == b.ct.c1);
    CHECK(tdf_decrypt(f, b.ct) == msg);
  }
}

TEST_CASE("inversion failure is its own rejection") {
  Rng rng(std::uint64_t{7});
  const auto f = ToyModularTdf::generate(16, rng);
  auto ct = tdf_encrypt(f, rng.bits(30), rng);
  ct.c2 = from_integer(f.modulus(), f.image_bits());
  CHECK(tdf_decrypt_traced(f, ct).reason == Rejection::InversionFail);
}

TEST_CASE("TDF key files") {
  Rng rng(std::uint64_t{8});
  const auto f = ToyModularTdf::generate(32, rng);
  const auto back = deserialize_tdf_key(serialize_tdf_key(f));
  CHECK(back.modulus() == f.modulus());
  CHECK(back.secret_exponent() == f.secret_exponent());
  const auto pub = deserialize_tdf_key(serialize_tdf_key(f.public_part()));
  CHECK_FALSE(pub.has_trapdoor());
  auto bytes = serialize_tdf_key(f);
  bytes[0] ^= 1;
  CHECK_THROWS_AS(deserialize_tdf_key(bytes), FormatError);
  bytes = serialize_tdf_key(f);
  bytes.pop_back();
  CHECK_THROWS_AS(deserialize_tdf_key(bytes), IntegrityError);
}
