#pragma once

// Executable security experiments: IND-CCA2, one-wayness of a TDF, the
// general decoding problem, and a library of ciphertext mauls.

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pcamce/binmatrix.hpp"
#include "pcamce/bitstring.hpp"
#include "pcamce/cca2.hpp"
#include "pcamce/serialize.hpp"
#include "pcamce/tdf.hpp"

namespace pcamce {

class Rng;

// ---- schemes -------------------------------------------------------------

/// One generated key pair of some PKE, over serialized ciphertexts so the
/// experiment can compare queries against the challenge byte for byte.
class PkeInstance {
 public:
  virtual ~PkeInstance() = default;
  virtual Bytes encrypt(const BitString& msg, Rng& rng) const = 0;
  /// nullopt is the rejection symbol; malformed bytes are rejected, not thrown.
  virtual std::optional<BitString> decrypt(const Bytes& ct) const = 0;
};

class PkeScheme {
 public:
  virtual ~PkeScheme() = default;
  virtual std::string name() const = 0;
  virtual std::unique_ptr<PkeInstance> keygen(Rng& rng) const = 0;
};

/// The McEliece-based CCA2 scheme at (m, t).
class Cca2Pke final : public PkeScheme {
 public:
  Cca2Pke(unsigned m, std::size_t t) : m_(m), t_(t) {}
  std::string name() const override;
  std::unique_ptr<PkeInstance> keygen(Rng& rng) const override;

 private:
  unsigned m_;
  std::size_t t_;
};

/// PKE[TDF] over the toy modular TDF with k-bit coins.
class TdfPke final : public PkeScheme {
 public:
  explicit TdfPke(std::size_t k) : k_(k) {}
  std::string name() const override;
  std::unique_ptr<PkeInstance> keygen(Rng& rng) const override;

 private:
  std::size_t k_;
};

/// Deliberately broken: the ciphertext is the message itself.
class IdentityPke final : public PkeScheme {
 public:
  std::string name() const override { return "identity"; }
  std::unique_ptr<PkeInstance> keygen(Rng& rng) const override;
};

// ---- IND-CCA2 --------------------------------------------------------------

/// Decryption oracle for one experiment run. In phase 2 it refuses the
/// challenge with ForbiddenQueryError.
class DecryptionOracle {
 public:
  explicit DecryptionOracle(const PkeInstance& inst) : inst_(inst) {}

  std::optional<BitString> query(const Bytes& ct);

  struct Entry {
    int phase;
    Bytes ct;
    bool accepted;
  };
  const std::vector<Entry>& log() const { return log_; }
  std::size_t accepted_count() const;
  /// True iff no phase-2 entry equals the challenge.
  bool log_clean() const;

  void begin_phase2(Bytes challenge);

 private:
  const PkeInstance& inst_;
  int phase_ = 1;
  std::optional<Bytes> challenge_;
  std::vector<Entry> log_;
};

/// Public side handed to the adversary: encryption under the experiment's key.
class PublicEncryptor {
 public:
  explicit PublicEncryptor(const PkeInstance& inst) : inst_(inst) {}
  Bytes encrypt(const BitString& msg, Rng& rng) const { return inst_.encrypt(msg, rng); }

 private:
  const PkeInstance& inst_;
};

/// Two-phase adversary. A fresh object is built for each trial, so state
/// may be kept in members between choose() and guess().
class Cca2Adversary {
 public:
  virtual ~Cca2Adversary() = default;
  virtual std::pair<BitString, BitString> choose(const PublicEncryptor& pk, DecryptionOracle& oracle, Rng& rng) = 0;
  virtual int guess(const PublicEncryptor& pk, const Bytes& challenge, DecryptionOracle& oracle, Rng& rng) = 0;
};

using AdversaryFactory = std::function<std::unique_ptr<Cca2Adversary>()>;

/// Random messages, random guess.
AdversaryFactory random_guess_adversary(std::size_t msg_bits);
/// Submits 0^n and 1^n; guesses 1 iff more than half the challenge bits are set.
AdversaryFactory bit_reading_adversary(std::size_t msg_bits);
/// Flips pairs of C2 bits of the challenge and asks the oracle, up to
/// max_queries pairs. Any accepted answer equal to m0 or m1 decides the guess.
AdversaryFactory maul_replay_adversary(std::size_t msg_bits, std::size_t max_queries);

struct Cca2TrialRecord {
  int b;
  int guess;
  std::size_t queries;
  std::size_t accepted;
  friend bool operator==(const Cca2TrialRecord&, const Cca2TrialRecord&) = default;
};

struct Cca2Result {
  std::string scheme;
  std::size_t trials = 0;
  std::size_t wins = 0;
  std::size_t oracle_queries = 0;
  std::size_t oracle_accepts = 0;
  bool log_clean = true;
  std::vector<Cca2TrialRecord> transcript;

  double win_rate() const { return trials ? static_cast<double>(wins) / trials : 0.0; }
  /// |Pr[b' = b] - 1/2|
  double advantage() const;
  /// Standard deviation of the win rate under the null hypothesis p = 1/2.
  double null_sigma() const;
  /// 95% Wilson interval for the win rate.
  std::pair<double, double> win_rate_ci() const;
};

/// One key pair per trial; trials run in parallel, each with its own stream
/// forked from rng, so the transcript depends only on the seed.
Cca2Result run_cca2_experiment(const PkeScheme& scheme, const AdversaryFactory& adversary, std::size_t trials,
                               Rng& rng);

// ---- one-wayness and GDP -------------------------------------------------

/// Returns a candidate preimage of y under f (which may lack a trapdoor).
using Inverter = std::function<BitString(const TrapdoorFunction& f, const BitString& y, Rng& rng)>;

Inverter trapdoor_inverter(const TrapdoorFunction& with_trapdoor);
Inverter random_inverter();
/// Exhaustive search over {0,1}^k; InfeasibleError above 24 bits.
Inverter brute_force_inverter();

struct OwResult {
  std::size_t trials = 0;
  std::size_t successes = 0;
  double rate() const { return trials ? static_cast<double>(successes) / trials : 0.0; }
};

/// Samples x uniformly from {0,1}^k, hands f(x) to the inverter, counts x' = x.
OwResult run_ow_experiment(const TrapdoorFunction& f, const Inverter& inverter, std::size_t trials, Rng& rng);

/// Returns a candidate message for the word.
using GdpSolver = std::function<std::optional<BitString>(const BinMatrix& gen, const BitString& word)>;

/// 1 iff the solver's message c satisfies wt(word - c*G) <= t.
int run_gdp_experiment(const BinMatrix& gen, std::size_t t, const GdpSolver& solver, const BitString& word);

// ---- mauls -----------------------------------------------------------------

/// C2 xor e_i xor e_j. RangeError unless i != j and both are in range.
BlindedCiphertext maul_c2_bitswap(const BlindedCiphertext& ct, std::size_t i, std::size_t j);
/// C1 + delta. RangeError if delta = 0 or the result is negative.
BlindedCiphertext maul_c1_additive(const BlindedCiphertext& ct, const mpz_class& delta);

struct MaulStrategy {
  std::string name;
  std::function<BlindedCiphertext(const BlindedCiphertext&)> transform;
};

namespace whitebox {

// Mauls that need the secret coins; never available to a CCA2 adversary.

/// C1 + sign * 2^i * h * r, with sign = +1 or -1.
BlindedCiphertext maul_c1_shift(const BlindedCiphertext& ct, std::size_t i, int sign, std::size_t h,
                                const mpz_class& r);

}  // namespace whitebox

enum class MaulClass : std::uint8_t {
  RejectEq2,
  RejectEq3,
  RejectEq4,
  RejectDecode,
  RejectDegenerate,
  RejectInversion,
  AcceptChanged,
  AcceptUnchanged,
};
inline constexpr std::size_t kMaulClassCount = 8;

const char* maul_class_name(MaulClass c);

MaulClass classify_maul(const Cca2SecretKey& sk, const BitString& original, const BlindedCiphertext& mauled);
MaulClass classify_maul(const TrapdoorFunction& f, const BitString& original, const BlindedCiphertext& mauled);

struct MaulReport {
  std::string strategy;
  std::array<std::size_t, kMaulClassCount> counts{};

  void add(MaulClass c) { ++counts[static_cast<std::size_t>(c)]; }
  std::size_t total() const;
  std::size_t accepted() const;
  std::size_t count(MaulClass c) const { return counts[static_cast<std::size_t>(c)]; }
};

// ---- reports ---------------------------------------------------------------

std::string format_text(const Cca2Result& r);
std::string format_table(const Cca2Result& r);
std::string format_text(const MaulReport& r);
std::string format_table(const MaulReport& r);

}  // namespace pcamce
