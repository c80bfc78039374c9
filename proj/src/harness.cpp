#include "pcamce/harness.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "pcamce/errors.hpp"
#include "pcamce/rng.hpp"

namespace pcamce {
namespace {

class Cca2Instance final : public PkeInstance {
 public:
  explicit Cca2Instance(Cca2KeyPair kp) : kp_(std::move(kp)) {}
  Bytes encrypt(const BitString& msg, Rng& rng) const override { return serialize_ct(cca2_encrypt(kp_.pk, msg, rng)); }
  std::optional<BitString> decrypt(const Bytes& ct) const override {
    try {
      return cca2_decrypt(kp_.sk, deserialize_ct(ct));
    } catch (const Error&) {
      return std::nullopt;
    }
  }

 private:
  Cca2KeyPair kp_;
};

class TdfInstance final : public PkeInstance {
 public:
  explicit TdfInstance(ToyModularTdf f) : f_(std::move(f)) {}
  Bytes encrypt(const BitString& msg, Rng& rng) const override {
    return serialize_ct(tdf_encrypt(f_, msg, rng), kTdfMagic);
  }
  std::optional<BitString> decrypt(const Bytes& ct) const override {
    try {
      return tdf_decrypt(f_, deserialize_ct(ct, kTdfMagic));
    } catch (const Error&) {
      return std::nullopt;
    }
  }

 private:
  ToyModularTdf f_;
};

class IdentityInstance final : public PkeInstance {
 public:
  Bytes encrypt(const BitString& msg, Rng&) const override {
    wire::Writer w;
    w.u64(msg.size());
    w.raw(pack_bytes(msg));
    return w.take();
  }
  std::optional<BitString> decrypt(const Bytes& ct) const override {
    try {
      wire::Reader r(ct);
      const std::uint64_t n = r.u64();
      if (n > 8 * ct.size()) return std::nullopt;
      BitString m = unpack_bytes(r.raw((n + 7) / 8), n);
      r.expect_end();
      return m;
    } catch (const Error&) {
      return std::nullopt;
    }
  }
};

class RandomGuess final : public Cca2Adversary {
 public:
  explicit RandomGuess(std::size_t n) : n_(n) {}
  std::pair<BitString, BitString> choose(const PublicEncryptor&, DecryptionOracle&, Rng& rng) override {
    BitString m0 = rng.bits(n_);
    return {m0, rng.bits(n_)};
  }
  int guess(const PublicEncryptor&, const Bytes&, DecryptionOracle&, Rng& rng) override {
    return rng.next_bit() ? 1 : 0;
  }

 private:
  std::size_t n_;
};

class BitReading final : public Cca2Adversary {
 public:
  explicit BitReading(std::size_t n) : n_(n) {}
  std::pair<BitString, BitString> choose(const PublicEncryptor&, DecryptionOracle&, Rng&) override {
    BitString ones(n_);
    for (std::size_t i = 0; i < n_; ++i) ones.set(i, true);
    return {BitString(n_), ones};
  }
  int guess(const PublicEncryptor&, const Bytes& challenge, DecryptionOracle&, Rng&) override {
    std::size_t set = 0;
    for (std::uint8_t b : challenge) set += static_cast<std::size_t>(__builtin_popcount(b));
    return 2 * set > 8 * challenge.size() ? 1 : 0;
  }

 private:
  std::size_t n_;
};

class MaulReplay final : public Cca2Adversary {
 public:
  MaulReplay(std::size_t n, std::size_t max_queries) : n_(n), max_queries_(max_queries) {}
  std::pair<BitString, BitString> choose(const PublicEncryptor&, DecryptionOracle&, Rng& rng) override {
    m0_ = rng.bits(n_);
    do {
      m1_ = rng.bits(n_);
    } while (m1_ == m0_);
    return {m0_, m1_};
  }
  int guess(const PublicEncryptor&, const Bytes& challenge, DecryptionOracle& oracle, Rng& rng) override {
    BlindedCiphertext ct;
    try {
      ct = deserialize_ct(challenge);
    } catch (const Error&) {
      return rng.next_bit() ? 1 : 0;
    }
    const std::size_t len = ct.c2.size();
    std::size_t asked = 0;
    for (std::size_t i = 0; i < len && asked < max_queries_; ++i) {
      for (std::size_t j = i + 1; j < len && asked < max_queries_; ++j, ++asked) {
        auto answer = oracle.query(serialize_ct(maul_c2_bitswap(ct, i, j)));
        if (answer && *answer == m0_) return 0;
        if (answer && *answer == m1_) return 1;
      }
    }
    return rng.next_bit() ? 1 : 0;
  }

 private:
  std::size_t n_;
  std::size_t max_queries_;
  BitString m0_, m1_;
};

}  // namespace

std::string Cca2Pke::name() const { return "cca2-mceliece(m=" + std::to_string(m_) + ",t=" + std::to_string(t_) + ")"; }

std::unique_ptr<PkeInstance> Cca2Pke::keygen(Rng& rng) const {
  return std::make_unique<Cca2Instance>(cca2_keygen(m_, t_, rng));
}

std::string TdfPke::name() const { return "pke-tdf(toy,k=" + std::to_string(k_) + ")"; }

std::unique_ptr<PkeInstance> TdfPke::keygen(Rng& rng) const {
  return std::make_unique<TdfInstance>(ToyModularTdf::generate(k_, rng));
}

std::unique_ptr<PkeInstance> IdentityPke::keygen(Rng&) const { return std::make_unique<IdentityInstance>(); }

std::optional<BitString> DecryptionOracle::query(const Bytes& ct) {
  if (phase_ == 2 && challenge_ && ct == *challenge_) throw ForbiddenQueryError("the challenge ciphertext may not be queried");
  auto out = inst_.decrypt(ct);
  log_.push_back({phase_, ct, out.has_value()});
  return out;
}

std::size_t DecryptionOracle::accepted_count() const {
  return static_cast<std::size_t>(std::count_if(log_.begin(), log_.end(), [](const Entry& e) { return e.accepted; }));
}

bool DecryptionOracle::log_clean() const {
  if (!challenge_) return true;
  return std::none_of(log_.begin(), log_.end(), [&](const Entry& e) { return e.phase == 2 && e.ct == *challenge_; });
}

void DecryptionOracle::begin_phase2(Bytes challenge) {
  phase_ = 2;
  challenge_ = std::move(challenge);
}

AdversaryFactory random_guess_adversary(std::size_t msg_bits) {
  return [msg_bits] { return std::make_unique<RandomGuess>(msg_bits); };
}

AdversaryFactory bit_reading_adversary(std::size_t msg_bits) {
  return [msg_bits] { return std::make_unique<BitReading>(msg_bits); };
}

AdversaryFactory maul_replay_adversary(std::size_t msg_bits, std::size_t max_queries) {
  return [msg_bits, max_queries] { return std::make_unique<MaulReplay>(msg_bits, max_queries); };
}

double Cca2Result::advantage() const { return std::fabs(win_rate() - 0.5); }

double Cca2Result::null_sigma() const { return trials ? 0.5 / std::sqrt(static_cast<double>(trials)) : 0.0; }

std::pair<double, double> Cca2Result::win_rate_ci() const {
  if (trials == 0) return {0.0, 1.0};
  const double z = 1.959963984540054;
  const double n = static_cast<double>(trials);
  const double p = win_rate();
  const double denom = 1.0 + z * z / n;
  const double centre = (p + z * z / (2 * n)) / denom;
  const double half = z * std::sqrt(p * (1 - p) / n + z * z / (4 * n * n)) / denom;
  return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

Cca2Result run_cca2_experiment(const PkeScheme& scheme, const AdversaryFactory& adversary, std::size_t trials,
                               Rng& rng) {
  if (trials == 0) throw ParameterError("trials must be >= 1");
  Cca2Result res;
  res.scheme = scheme.name();
  res.trials = trials;
  res.transcript.resize(trials);
  std::vector<char> clean(trials, 1);
  const Rng base = rng.fork(0x63636132);
  rng.next_u64();

  // Exceptions cannot cross the parallel region, so the first one is parked.
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < trials; ++i) {
    try {
      Rng trial_rng = base.fork(i);
      auto inst = scheme.keygen(trial_rng);
      auto adv = adversary();
      PublicEncryptor pk(*inst);
      DecryptionOracle oracle(*inst);
      auto [m0, m1] = adv->choose(pk, oracle, trial_rng);
      if (m0.size() != m1.size()) throw LengthError("challenge messages must have equal length");
      const int b = trial_rng.next_bit() ? 1 : 0;
      Bytes challenge = inst->encrypt(b ? m1 : m0, trial_rng);
      oracle.begin_phase2(challenge);
      const int g = adv->guess(pk, challenge, oracle, trial_rng);
      res.transcript[i] = {b, g, oracle.log().size(), oracle.accepted_count()};
      clean[i] = oracle.log_clean() ? 1 : 0;
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  for (std::size_t i = 0; i < trials; ++i) {
    const auto& t = res.transcript[i];
    res.wins += t.b == t.guess ? 1 : 0;
    res.oracle_queries += t.queries;
    res.oracle_accepts += t.accepted;
    res.log_clean = res.log_clean && clean[i];
  }
  return res;
}

Inverter trapdoor_inverter(const TrapdoorFunction& with_trapdoor) {
  if (!with_trapdoor.has_trapdoor()) throw ParameterError("trapdoor inverter needs the trapdoor");
  return [&with_trapdoor](const TrapdoorFunction& f, const BitString& y, Rng&) {
    auto x = with_trapdoor.inverse(y);
    return x ? *x : BitString(f.domain_bits());
  };
}

Inverter random_inverter() {
  return [](const TrapdoorFunction& f, const BitString&, Rng& rng) { return rng.bits(f.domain_bits()); };
}

Inverter brute_force_inverter() {
  return [](const TrapdoorFunction& f, const BitString& y, Rng&) {
    const std::size_t k = f.domain_bits();
    if (k > 24) throw InfeasibleError("brute-force inversion is limited to 24 bits");
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << k); ++v) {
      BitString x = from_integer(mpz_class(static_cast<unsigned long>(v)), k);
      if (f.forward(x) == y) return x;
    }
    return BitString(k);
  };
}

OwResult run_ow_experiment(const TrapdoorFunction& f, const Inverter& inverter, std::size_t trials, Rng& rng) {
  OwResult res;
  res.trials = trials;
  for (std::size_t i = 0; i < trials; ++i) {
    const BitString x = rng.bits(f.domain_bits());
    const BitString guess = inverter(f, f.forward(x), rng);
    if (guess == x) ++res.successes;
  }
  return res;
}

int run_gdp_experiment(const BinMatrix& gen, std::size_t t, const GdpSolver& solver, const BitString& word) {
  if (word.size() != gen.cols()) throw LengthError("word length must equal the code length");
  auto c = solver(gen, word);
  if (!c || c->size() != gen.rows()) return 0;
  return (word ^ vec_mat_mul(*c, gen)).weight() <= t ? 1 : 0;
}

BlindedCiphertext maul_c2_bitswap(const BlindedCiphertext& ct, std::size_t i, std::size_t j) {
  if (i == j || i >= ct.c2.size() || j >= ct.c2.size()) throw RangeError("bitswap needs two distinct in-range positions");
  BlindedCiphertext out = ct;
  out.c2.flip(i);
  out.c2.flip(j);
  return out;
}

BlindedCiphertext maul_c1_additive(const BlindedCiphertext& ct, const mpz_class& delta) {
  if (delta == 0) throw RangeError("delta must be nonzero");
  BlindedCiphertext out = ct;
  out.c1 += delta;
  if (out.c1 < 0) throw RangeError("mauled C1 would be negative");
  return out;
}

namespace whitebox {

BlindedCiphertext maul_c1_shift(const BlindedCiphertext& ct, std::size_t i, int sign, std::size_t h,
                                const mpz_class& r) {
  if (sign != 1 && sign != -1) throw RangeError("sign must be +1 or -1");
  if (h == 0 || r <= 0) throw RangeError("h and r must be positive");
  mpz_class delta;
  mpz_mul_2exp(delta.get_mpz_t(), r.get_mpz_t(), i);
  delta *= static_cast<unsigned long>(h);
  return maul_c1_additive(ct, sign > 0 ? delta : mpz_class(-delta));
}

}  // namespace whitebox

const char* maul_class_name(MaulClass c) {
  switch (c) {
    case MaulClass::RejectEq2: return "reject-eq2";
    case MaulClass::RejectEq3: return "reject-eq3";
    case MaulClass::RejectEq4: return "reject-eq4";
    case MaulClass::RejectDecode: return "reject-decode";
    case MaulClass::RejectDegenerate: return "reject-degenerate";
    case MaulClass::RejectInversion: return "reject-inversion";
    case MaulClass::AcceptChanged: return "accept-changed";
    case MaulClass::AcceptUnchanged: return "accept-unchanged";
  }
  return "unknown";
}

namespace {

MaulClass classify(Rejection reason, const std::optional<BitString>& msg, const BitString& original) {
  switch (reason) {
    case Rejection::DecodeFail: return MaulClass::RejectDecode;
    case Rejection::Eq2Fail: return MaulClass::RejectEq2;
    case Rejection::DegenerateR: return MaulClass::RejectDegenerate;
    case Rejection::Eq3Fail: return MaulClass::RejectEq3;
    case Rejection::Eq4Fail: return MaulClass::RejectEq4;
    case Rejection::InversionFail: return MaulClass::RejectInversion;
    case Rejection::None: break;
  }
  return *msg == original ? MaulClass::AcceptUnchanged : MaulClass::AcceptChanged;
}

}  // namespace

MaulClass classify_maul(const Cca2SecretKey& sk, const BitString& original, const BlindedCiphertext& mauled) {
  auto tr = diagnostics::decrypt_traced(sk, mauled);
  return classify(tr.reason, tr.message, original);
}

MaulClass classify_maul(const TrapdoorFunction& f, const BitString& original, const BlindedCiphertext& mauled) {
  auto tr = diagnostics::tdf_decrypt_traced(f, mauled);
  return classify(tr.reason, tr.message, original);
}

std::size_t MaulReport::total() const {
  std::size_t s = 0;
  for (auto c : counts) s += c;
  return s;
}

std::size_t MaulReport::accepted() const {
  return count(MaulClass::AcceptChanged) + count(MaulClass::AcceptUnchanged);
}

std::string format_text(const Cca2Result& r) {
  const auto [lo, hi] = r.win_rate_ci();
  std::ostringstream os;
  os << "scheme      " << r.scheme << "\n"
     << "trials      " << r.trials << "\n"
     << "wins        " << r.wins << "\n"
     << "win rate    " << r.win_rate() << "  (95% CI " << lo << " .. " << hi << ")\n"
     << "advantage   " << r.advantage() << "  (null sigma " << r.null_sigma() << ")\n"
     << "queries     " << r.oracle_queries << "  accepted " << r.oracle_accepts << "\n"
     << "log clean   " << (r.log_clean ? "yes" : "NO") << "\n";
  return os.str();
}

std::string format_table(const Cca2Result& r) {
  const auto [lo, hi] = r.win_rate_ci();
  std::ostringstream os;
  os << "scheme\ttrials\twins\tadvantage\tsigma\tci_lo\tci_hi\tqueries\taccepted\n"
     << r.scheme << '\t' << r.trials << '\t' << r.wins << '\t' << r.advantage() << '\t' << r.null_sigma() << '\t' << lo
     << '\t' << hi << '\t' << r.oracle_queries << '\t' << r.oracle_accepts << '\n';
  return os.str();
}

std::string format_text(const MaulReport& r) {
  std::ostringstream os;
  os << "strategy " << r.strategy << " (" << r.total() << " mauls)\n";
  for (std::size_t i = 0; i < kMaulClassCount; ++i)
    os << "  " << maul_class_name(static_cast<MaulClass>(i)) << ": " << r.counts[i] << "\n";
  return os.str();
}

std::string format_table(const MaulReport& r) {
  std::ostringstream os;
  os << "strategy";
  for (std::size_t i = 0; i < kMaulClassCount; ++i) os << '\t' << maul_class_name(static_cast<MaulClass>(i));
  os << "\n" << r.strategy;
  for (auto c : r.counts) os << '\t' << c;
  os << "\n";
  return os.str();
}

}  // namespace pcamce
