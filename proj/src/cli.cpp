#include "pcamce/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>

#include "pcamce/bench.hpp"
#include "pcamce/cca2.hpp"
#include "pcamce/errors.hpp"
#include "pcamce/harness.hpp"
#include "pcamce/kat.hpp"
#include "pcamce/params.hpp"
#include "pcamce/rng.hpp"
#include "pcamce/serialize.hpp"
#include "pcamce/tdf.hpp"

namespace pcamce::cli {
namespace {

namespace fs = std::filesystem;

class IoError : public Error {
 public:
  using Error::Error;
};

class RejectSignal : public Error {
 public:
  RejectSignal() : Error("decryption failed") {}
};

Bytes read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  Bytes data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("cannot read " + path);
  return data;
}

void write_file(const std::string& path, std::span<const std::uint8_t> data, bool force) {
  if (!force && fs::exists(path)) throw IoError(path + " exists (use --force to overwrite)");
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
  if (!out) throw IoError("cannot write " + path);
}

void write_text(const std::string& path, const std::string& text, bool force) {
  write_file(path, std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()), force);
}

Rng make_rng(const std::string& seed_hex) {
  if (seed_hex.empty()) return Rng::from_os();
  return Rng(from_hex(seed_hex));
}

std::string default_param_set() {
  const char* env = std::getenv(kParamSetEnv);
  return env && *env ? env : "classic";
}

ParameterSet resolve_params(const std::string& name, std::optional<unsigned> m, std::optional<std::size_t> t) {
  if (m || t) {
    if (!m || !t) throw ParameterError("--m and --t must be given together");
    const ParameterSet p{"custom", *m, *t, ""};
    if (*m < 3 || *m > 13 || p.m * p.t >= p.code_len() || p.code_dim() < 3)
      throw ParameterError("need 3 <= m <= 13 and 2^m - m*t >= 3");
    return p;
  }
  auto p = find_parameter_set(name);
  if (!p) throw ParameterError("unknown parameter set '" + name + "'");
  return *p;
}

struct Options {
  std::string param_set;
  std::optional<unsigned> m;
  std::optional<std::size_t> t;
  std::string out, in, pk, sk, seed, verify, format = "text", scheme = "cca2", adversary = "random";
  std::size_t count = 8, trials = 0, msg_bits = 0, k = 32, queries = 64;
  bool force = false;
};

void cmd_keygen(const Options& o, std::ostream& out) {
  const ParameterSet p = resolve_params(o.param_set, o.m, o.t);
  const std::string pk_path = o.out + ".pk", sk_path = o.out + ".sk";
  if (!o.force)
    for (const auto& path : {pk_path, sk_path})
      if (fs::exists(path)) throw IoError(path + " exists (use --force to overwrite)");
  Rng rng = make_rng(o.seed);
  const Cca2KeyPair kp = cca2_keygen(p.m, p.t, rng);
  write_file(pk_path, serialize_key(kp.pk), true);
  write_file(sk_path, serialize_key(kp.sk), true);
  out << "wrote " << pk_path << " and " << sk_path << " (m=" << p.m << " t=" << p.t << " n=" << p.code_len()
      << " k=" << kp.pk.sec_param() << ")\n";
}

void cmd_encrypt(const Options& o, std::ostream& out) {
  const Cca2PublicKey pk = deserialize_public_key(read_file(o.pk));
  const Bytes msg = read_file(o.in);
  if (msg.empty()) throw LengthError("input file is empty; messages need at least one bit");
  Rng rng = make_rng(o.seed);
  const Cca2Ciphertext ct = cca2_encrypt(pk, unpack_bytes(msg, 8 * msg.size()), rng);
  write_file(o.out, serialize_ct(ct), o.force);
  out << "encrypted " << msg.size() << " bytes to " << o.out << "\n";
}

void cmd_decrypt(const Options& o, std::ostream& out) {
  const Cca2SecretKey sk = deserialize_secret_key(read_file(o.sk));
  const Cca2Ciphertext ct = deserialize_ct(read_file(o.in));
  if (ct.c2.size() != sk.mce_pk.code_len()) throw FormatError("ciphertext does not match this key");
  const auto msg = cca2_decrypt(sk, ct);
  if (!msg) throw RejectSignal();
  if (msg->size() % 8 != 0) throw FormatError("plaintext is not a whole number of bytes");
  write_file(o.out, pack_bytes(*msg), o.force);
  out << "decrypted " << msg->size() / 8 << " bytes to " << o.out << "\n";
}

int cmd_kat(const Options& o, std::ostream& out, std::ostream& err) {
  if (!o.verify.empty()) {
    const Bytes raw = read_file(o.verify);
    const KatVerdict v = verify_kat(std::string(raw.begin(), raw.end()));
    if (v.ok) {
      out << "KAT OK: " << o.verify << "\n";
      return kOk;
    }
    err << "KAT mismatch at stage '" << v.stage << "'";
    if (v.case_index >= 0) err << " in case " << v.case_index;
    err << ": " << v.detail << "\n";
    return 1;
  }
  if (o.seed.empty()) throw ParameterError("kat generation needs --seed");
  if (o.out.empty()) throw ParameterError("kat needs --out or --verify");
  const ParameterSet p = resolve_params(o.param_set, o.m, o.t);
  KatHeader h{std::string(p.name), p.m, p.t, to_hex(from_hex(o.seed)), o.count};
  write_text(o.out, generate_kat(h), o.force);
  out << "wrote " << o.count << " cases to " << o.out << "\n";
  return kOk;
}

void cmd_bench(const Options& o, std::ostream& out) {
  if (o.trials == 0) throw ParameterError("--trials must be >= 1");
  const ParameterSet p = resolve_params(o.param_set, o.m, o.t);
  Rng rng = make_rng(o.seed);
  const BenchResult r = run_bench(p.m, p.t, o.trials, rng, o.msg_bits);
  out << (o.format == "tsv" ? format_table(r) : format_text(r));
}

void cmd_experiment(const Options& o, std::ostream& out) {
  if (o.trials == 0) throw ParameterError("--trials must be >= 1");
  const std::size_t n = o.msg_bits ? o.msg_bits : 64;
  std::unique_ptr<PkeScheme> scheme;
  if (o.scheme == "cca2") {
    const ParameterSet p = resolve_params(o.param_set, o.m, o.t);
    scheme = std::make_unique<Cca2Pke>(p.m, p.t);
  } else if (o.scheme == "tdf") {
    scheme = std::make_unique<TdfPke>(o.k);
  } else if (o.scheme == "identity") {
    scheme = std::make_unique<IdentityPke>();
  } else {
    throw ParameterError("unknown scheme '" + o.scheme + "'");
  }
  AdversaryFactory adv;
  if (o.adversary == "random") adv = random_guess_adversary(n);
  else if (o.adversary == "bit-reading") adv = bit_reading_adversary(n);
  else if (o.adversary == "maul-replay") adv = maul_replay_adversary(n, o.queries);
  else throw ParameterError("unknown adversary '" + o.adversary + "'");
  Rng rng = make_rng(o.seed);
  const Cca2Result r = run_cca2_experiment(*scheme, adv, o.trials, rng);
  out << (o.format == "tsv" ? format_table(r) : format_text(r));
}

int cmd_demo_tdf(const Options& o, std::ostream& out) {
  const std::size_t trials = o.trials ? o.trials : 100;
  const std::size_t n = o.msg_bits ? o.msg_bits : 256;
  Rng rng = make_rng(o.seed);
  const ToyModularTdf f = ToyModularTdf::generate(o.k, rng);
  std::size_t ok = 0;
  for (std::size_t i = 0; i < trials; ++i) {
    const BitString msg = rng.bits(n);
    const auto dec = tdf_decrypt(f, tdf_encrypt(f, msg, rng));
    if (dec && *dec == msg) ++ok;
  }
  out << "toy TDF (not for real use): k=" << o.k << " modulus bits=" << f.image_bits() << "\n"
      << "round trips: " << ok << "/" << trials << " with " << n << "-bit messages\n";
  return ok == trials ? kOk : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"McEliece-based CCA2 public-key encryption toolkit", "pcamce"};
  app.require_subcommand(1);
  Options o;
  o.param_set = default_param_set();

  auto add_params = [&](CLI::App* c) {
    c->add_option("--param-set", o.param_set, "tiny, small or classic (default from $" + std::string(kParamSetEnv) + ")");
    c->add_option("--m", o.m, "field degree, overrides --param-set");
    c->add_option("--t", o.t, "error weight, overrides --param-set");
  };

  auto* keygen = app.add_subcommand("keygen", "generate PREFIX.pk and PREFIX.sk");
  add_params(keygen);
  keygen->add_option("--out", o.out, "output prefix")->required();
  keygen->add_option("--seed", o.seed, "hex seed for deterministic keys");
  keygen->add_flag("--force", o.force, "overwrite existing files");

  auto* enc = app.add_subcommand("encrypt", "encrypt a file");
  enc->add_option("--pk", o.pk)->required();
  enc->add_option("--in", o.in)->required();
  enc->add_option("--out", o.out)->required();
  enc->add_option("--seed", o.seed, "hex seed for deterministic encryption");
  enc->add_flag("--force", o.force);

  auto* dec = app.add_subcommand("decrypt", "decrypt a file; exit 4 on rejection");
  dec->add_option("--sk", o.sk)->required();
  dec->add_option("--in", o.in)->required();
  dec->add_option("--out", o.out)->required();
  dec->add_flag("--force", o.force);

  auto* kat = app.add_subcommand("kat", "generate or verify known-answer vectors");
  add_params(kat);
  kat->add_option("--count", o.count, "number of cases");
  kat->add_option("--seed", o.seed, "hex seed");
  auto* kat_out = kat->add_option("--out", o.out);
  kat->add_option("--verify", o.verify)->excludes(kat_out);
  kat->add_flag("--force", o.force);

  auto* bench = app.add_subcommand("bench", "median timings of McEliece vs CCA2 operations");
  add_params(bench);
  bench->add_option("--trials", o.trials)->required();
  bench->add_option("--msg-bits", o.msg_bits, "CCA2 message length (default k)");
  bench->add_option("--seed", o.seed);
  bench->add_option("--format", o.format)->check(CLI::IsMember({"text", "tsv"}));

  auto* exp = app.add_subcommand("experiment", "run the IND-CCA2 experiment");
  add_params(exp);
  exp->add_option("--scheme", o.scheme)->check(CLI::IsMember({"cca2", "tdf", "identity"}));
  exp->add_option("--adversary", o.adversary)->check(CLI::IsMember({"random", "bit-reading", "maul-replay"}));
  exp->add_option("--trials", o.trials)->required();
  exp->add_option("--msg-bits", o.msg_bits);
  exp->add_option("--k", o.k, "coin length for --scheme tdf");
  exp->add_option("--queries", o.queries, "oracle budget of the maul-replay adversary");
  exp->add_option("--seed", o.seed);
  exp->add_option("--format", o.format)->check(CLI::IsMember({"text", "tsv"}));

  auto* demo = app.add_subcommand("demo", "non-production demonstrations");
  demo->require_subcommand(1);
  auto* demo_tdf = demo->add_subcommand("tdf", "PKE[TDF] round trips with the toy modular TDF");
  demo_tdf->add_option("--k", o.k);
  demo_tdf->add_option("--trials", o.trials);
  demo_tdf->add_option("--msg-bits", o.msg_bits);
  demo_tdf->add_option("--seed", o.seed);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    if (*keygen) cmd_keygen(o, out);
    else if (*enc) cmd_encrypt(o, out);
    else if (*dec) cmd_decrypt(o, out);
    else if (*kat) return cmd_kat(o, out, err);
    else if (*bench) cmd_bench(o, out);
    else if (*exp) cmd_experiment(o, out);
    else if (*demo_tdf) return cmd_demo_tdf(o, out);
    return kOk;
  } catch (const RejectSignal&) {
    err << "decryption failed\n";
    return kReject;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIo;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace pcamce::cli
