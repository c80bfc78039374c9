#include <doctest.h>

#include "pcamce/errors.hpp"
#include "pcamce/goppa.hpp"
#include "pcamce/harness.hpp"
#include "pcamce/hashing.hpp"
#include "pcamce/rng.hpp"

using namespace pcamce;

namespace {

class ChallengeQuerier final : public Cca2Adversary {
 public:
  std::pair<BitString, BitString> choose(const PublicEncryptor&, DecryptionOracle&, Rng& rng) override {
    return {rng.bits(8), rng.bits(8)};
  }
  int guess(const PublicEncryptor&, const Bytes& challenge, DecryptionOracle& oracle, Rng&) override {
    oracle.query(challenge);
    return 0;
  }
};

class UnequalLengths final : public Cca2Adversary {
 public:
  std::pair<BitString, BitString> choose(const PublicEncryptor&, DecryptionOracle&, Rng& rng) override {
    return {rng.bits(8), rng.bits(9)};
  }
  int guess(const PublicEncryptor&, const Bytes&, DecryptionOracle&, Rng&) override { return 0; }
};

bool within_3_sigma(const Cca2Result& r) { return r.advantage() <= 3.0 * r.null_sigma(); }

}  // namespace

TEST_CASE("identity scheme is fully broken by the bit reader") {
  Rng rng(std::uint64_t{1});
  const auto r = run_cca2_experiment(IdentityPke(), bit_reading_adversary(64), 500, rng);
  CHECK(r.wins == 500);
  CHECK(r.advantage() == doctest::Approx(0.5));
  CHECK(r.log_clean);
}

TEST_CASE("random guessing against the scheme calibrates to zero advantage") {
  Rng rng(std::uint64_t{2});
  const auto r = run_cca2_experiment(Cca2Pke(4, 2), random_guess_adversary(16), 10000, rng);
  CHECK(r.trials == 10000);
  CHECK(within_3_sigma(r));
  CHECK(r.null_sigma() == doctest::Approx(0.005));
  const auto [lo, hi] = r.win_rate_ci();
  CHECK(lo < r.win_rate());
  CHECK(hi > r.win_rate());
  CHECK(lo < 0.5);
  CHECK(hi > 0.5);
}

TEST_CASE("maul-replay gets only rejections at k = 40") {
  Rng rng(std::uint64_t{3});
  const auto r = run_cca2_experiment(Cca2Pke(6, 4), maul_replay_adversary(16, 30), 300, rng);
  CHECK(r.oracle_queries == 9000);
  CHECK(r.oracle_accepts == 0);
  CHECK(within_3_sigma(r));
  CHECK(r.log_clean);
}

TEST_CASE("maul-replay exploits T collisions at k = 8") {
  // Only 120 weight-2 error vectors exist, so the 8-bit T has fixed
  // colliding pairs and some bit swaps pass the hash recheck.
  Rng rng(std::uint64_t{3});
  const auto r = run_cca2_experiment(Cca2Pke(4, 2), maul_replay_adversary(16, 120), 2000, rng);
  CHECK(r.oracle_accepts > 0);
  CHECK(r.advantage() > 3.0 * r.null_sigma());
  CHECK(r.log_clean);
}

TEST_CASE("bit reader against the scheme and PKE[TDF] stays near zero") {
  Rng rng(std::uint64_t{4});
  CHECK(within_3_sigma(run_cca2_experiment(Cca2Pke(4, 2), bit_reading_adversary(32), 2000, rng)));
  CHECK(within_3_sigma(run_cca2_experiment(TdfPke(16), bit_reading_adversary(32), 2000, rng)));
}

TEST_CASE("experiment misuse surfaces as errors") {
  Rng rng(std::uint64_t{5});
  CHECK_THROWS_AS(run_cca2_experiment(Cca2Pke(4, 2), [] { return std::make_unique<ChallengeQuerier>(); }, 3, rng),
                  ForbiddenQueryError);
  CHECK_THROWS_AS(run_cca2_experiment(Cca2Pke(4, 2), [] { return std::make_unique<UnequalLengths>(); }, 3, rng),
                  LengthError);
  CHECK_THROWS_AS(run_cca2_experiment(IdentityPke(), random_guess_adversary(8), 0, rng), ParameterError);
}

TEST_CASE("oracle log hygiene") {
  Rng rng(std::uint64_t{6});
  auto inst = Cca2Pke(4, 2).keygen(rng);
  DecryptionOracle oracle(*inst);
  const BitString msg = rng.bits(8);
  const Bytes ct = inst->encrypt(msg, rng);
  CHECK(oracle.query(ct) == msg);  // phase 1 may ask anything
  oracle.begin_phase2(ct);
  CHECK_THROWS_AS(oracle.query(ct), ForbiddenQueryError);
  CHECK_FALSE(oracle.query(Bytes{1, 2, 3}).has_value());
  CHECK(oracle.log().size() == 2);
  CHECK(oracle.accepted_count() == 1);
  CHECK(oracle.log_clean());
}

TEST_CASE("transcripts replay under a fixed seed") {
  Rng a(std::uint64_t{7}), b(std::uint64_t{7}), c(std::uint64_t{8});
  const auto ra = run_cca2_experiment(Cca2Pke(4, 2), maul_replay_adversary(8, 4), 200, a);
  const auto rb = run_cca2_experiment(Cca2Pke(4, 2), maul_replay_adversary(8, 4), 200, b);
  const auto rc = run_cca2_experiment(Cca2Pke(4, 2), maul_replay_adversary(8, 4), 200, c);
  CHECK(ra.transcript == rb.transcript);
  CHECK(ra.wins == rb.wins);
  CHECK(ra.transcript != rc.transcript);
}

TEST_CASE("one-wayness experiments") {
  Rng rng(std::uint64_t{9});
  const auto f16 = ToyModularTdf::generate(16, rng);
  CHECK(run_ow_experiment(f16, trapdoor_inverter(f16), 1000, rng).rate() == 1.0);
  const auto guess = run_ow_experiment(f16.public_part(), random_inverter(), 10000, rng);
  CHECK(guess.trials == 10000);
  CHECK(guess.rate() <= 10.0 / 65536.0);
  const auto f8 = ToyModularTdf::generate(8, rng);
  CHECK(run_ow_experiment(f8.public_part(), brute_force_inverter(), 300, rng).rate() == 1.0);
  CHECK_THROWS_AS(run_ow_experiment(ToyModularTdf::generate(32, rng).public_part(), brute_force_inverter(), 1, rng),
                  InfeasibleError);
  CHECK_THROWS_AS(trapdoor_inverter(f16.public_part()), ParameterError);
}

TEST_CASE("general decoding experiment") {
  Rng rng(std::uint64_t{10});
  const GoppaCode code = GoppaCode::generate(4, 2, rng);
  const BinMatrix& g = code.generator();
  GdpSolver brute = [](const BinMatrix& gen, const BitString& w) -> std::optional<BitString> {
    auto r = brute_force_decode(gen, w, 2);
    if (!r) return std::nullopt;
    return r->message;
  };
  GdpSolver zero = [](const BinMatrix& gen, const BitString&) -> std::optional<BitString> {
    return BitString(gen.rows());
  };
  for (int i = 0; i < 200; ++i) {
    const BitString u = rng.bits(8);
    const BitString w = vec_mat_mul(u, g) ^ random_weight_vector(16, rng.uniform(3), rng);
    CHECK(run_gdp_experiment(g, 2, brute, w) == 1);
    GdpSolver planted = [u](const BinMatrix&, const BitString&) -> std::optional<BitString> { return u; };
    CHECK(run_gdp_experiment(g, 2, planted, w) == 1);
  }
  const BitString far = BitString::from_string("1111100000000000");
  CHECK(run_gdp_experiment(g, 2, zero, far) == 0);
  GdpSolver none = [](const BinMatrix&, const BitString&) -> std::optional<BitString> { return std::nullopt; };
  CHECK(run_gdp_experiment(g, 2, none, far) == 0);
}

TEST_CASE("maul classification") {
  Rng rng(std::uint64_t{11});
  const auto kp = cca2_keygen(4, 2, rng);
  MaulReport bitswap{"c2-bitswap"};
  MaulReport additive{"c1-additive"};
  MaulReport shift{"c1-shift"};
  for (int c = 0; c < 20; ++c) {
    const BitString msg = rng.bits(24);
    const auto tr = diagnostics::encrypt_traced(kp.pk, msg, rng);
    const BitString& e = tr.coins.error;
    for (std::size_t i = 0; i < 16; ++i)
      for (std::size_t j = 0; j < 16; ++j)
        if (e.get(i) && !e.get(j)) {
          // With k = 8, T has colliding weight-2 inputs; exactly those pass.
          BitString e2 = e;
          e2.flip(i);
          e2.flip(j);
          const bool collides = tcr_hash(e2, 8) == tr.coins.r;
          const MaulClass k = classify_maul(kp.sk, msg, maul_c2_bitswap(tr.ct, i, j));
          CHECK(k == (collides ? MaulClass::AcceptUnchanged : MaulClass::RejectEq2));
          bitswap.add(k);
        }
    for (int i = 0; i < 100; ++i) additive.add(classify_maul(kp.sk, msg, maul_c1_additive(tr.ct, 1 + rng.uniform_mpz(to_integer(tr.coins.r) - 1))));
    const BitString& y = tr.pipeline.shifted;
    for (std::size_t i = 0; i < y.size(); ++i) {
      if (y.get(y.size() - 1 - i)) continue;
      const auto mauled = whitebox::maul_c1_shift(tr.ct, i, 1, tr.coins.r.weight(), to_integer(tr.coins.r));
      const MaulClass k = classify_maul(kp.sk, msg, mauled);
      CHECK((k == MaulClass::AcceptChanged || k == MaulClass::RejectEq4));
      shift.add(k);
    }
  }
  CHECK(bitswap.total() == 20 * 2 * 14);
  CHECK(additive.total() == 2000);
  CHECK(additive.accepted() == 0);
  CHECK(additive.count(MaulClass::RejectEq3) == additive.total());
  CHECK(shift.count(MaulClass::AcceptChanged) > 0);
  std::size_t sum = 0;
  for (std::size_t c = 0; c < kMaulClassCount; ++c) sum += shift.counts[c];
  CHECK(sum == shift.total());
  CHECK(format_text(shift).find("c1-shift") != std::string::npos);
  CHECK(format_table(bitswap).find('\t') != std::string::npos);
}

TEST_CASE("maul preconditions") {
  Rng rng(std::uint64_t{12});
  const auto kp = cca2_keygen(4, 2, rng);
  const auto ct = cca2_encrypt(kp.pk, rng.bits(8), rng);
  CHECK_THROWS_AS(maul_c2_bitswap(ct, 3, 3), RangeError);
  CHECK_THROWS_AS(maul_c2_bitswap(ct, 0, 16), RangeError);
  CHECK_THROWS_AS(maul_c1_additive(ct, 0), RangeError);
  CHECK_THROWS_AS(maul_c1_additive(ct, -ct.c1 - 1), RangeError);
  CHECK_THROWS_AS(whitebox::maul_c1_shift(ct, 0, 2, 1, 1), RangeError);
  CHECK(maul_c2_bitswap(ct, 0, 1) != ct);
}

TEST_CASE("reports") {
  Rng rng(std::uint64_t{13});
  const auto r = run_cca2_experiment(IdentityPke(), random_guess_adversary(8), 50, rng);
  const std::string text = format_text(r), table = format_table(r);
  CHECK(text.find("identity") != std::string::npos);
  CHECK(table.find("identity\t50\t") != std::string::npos);
}
