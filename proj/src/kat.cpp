#include "pcamce/kat.hpp"

#include <sstream>
#include <utility>

#include "pcamce/cca2.hpp"
#include "pcamce/errors.hpp"
#include "pcamce/rng.hpp"
#include "pcamce/serialize.hpp"

namespace pcamce {
namespace {

// Message lengths cycle through this list so short, byte-aligned and
// multi-block cases all appear in a small file.
constexpr std::size_t kLengths[] = {1, 7, 8, 13, 40, 64, 100, 512};

std::string hex_bits(const BitString& b) { return to_hex(pack_bytes(b)); }

std::string hex_mpz(const mpz_class& v) {
  if (v == 0) return "00";
  std::string s = v.get_str(16);
  return s.size() % 2 ? "0" + s : s;
}

std::string hex_u64(std::uint64_t v) { return hex_mpz(mpz_class(static_cast<unsigned long>(v))); }

std::string hex_digest(const Bytes& b) {
  const auto d = sha256(b);
  return to_hex(d);
}

std::vector<std::pair<std::string, std::string>> parse_lines(const std::string& text) {
  std::vector<std::pair<std::string, std::string>> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (line.front() == '[') {
      out.emplace_back(line, "");
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw FormatError("KAT line without '=': " + line);
    out.emplace_back(line.substr(0, eq), line.substr(eq + 1));
  }
  return out;
}

}  // namespace

const std::vector<std::string>& kat_case_fields() {
  static const std::vector<std::string> fields{"msg_bits", "msg", "e", "r", "u", "s", "z", "q",
                                               "masked", "y_prime", "y", "c1", "c2", "decrypted"};
  return fields;
}

std::string generate_kat(const KatHeader& h) {
  const auto seed = from_hex(h.seed_hex);
  Rng rng(seed);
  const Cca2KeyPair kp = cca2_keygen(h.m, h.t, rng);

  std::ostringstream os;
  os << "# pcamce known-answer tests\n"
     << "format=1\n"
     << "param_set=" << h.param_set << "\n"
     << "m=" << hex_u64(h.m) << "\n"
     << "t=" << hex_u64(h.t) << "\n"
     << "seed=" << to_hex(seed) << "\n"
     << "count=" << hex_u64(h.count) << "\n"
     << "pk_sha256=" << hex_digest(serialize_key(kp.pk)) << "\n"
     << "sk_sha256=" << hex_digest(serialize_key(kp.sk)) << "\n";

  for (std::size_t i = 0; i < h.count; ++i) {
    const std::size_t n = kLengths[i % std::size(kLengths)];
    const BitString msg = rng.bits(n);
    const auto tr = diagnostics::encrypt_traced(kp.pk, msg, rng);
    const auto dec = cca2_decrypt(kp.sk, tr.ct);
    const auto& p = tr.pipeline;

    std::string u;
    for (std::size_t d = 0; d < p.schedule.carry.digits.size(); ++d)
      u += (d ? "," : "") + hex_u64(p.schedule.carry.digits[d]);

    os << "\n[case " << i << "]\n"
       << "msg_bits=" << hex_u64(n) << "\n"
       << "msg=" << hex_bits(msg) << "\n"
       << "e=" << hex_bits(tr.coins.error) << "\n"
       << "r=" << hex_bits(tr.coins.r) << "\n"
       << "u=" << u << "\n"
       << "s=" << hex_mpz(p.schedule.s) << "\n"
       << "z=" << hex_u64(p.schedule.z) << "\n"
       << "q=" << hex_u64(p.shift) << "\n"
       << "masked=" << hex_bits(p.masked) << "\n"
       << "y_prime=" << hex_bits(p.encoded) << "\n"
       << "y=" << hex_bits(p.shifted) << "\n"
       << "c1=" << hex_mpz(tr.ct.c1) << "\n"
       << "c2=" << hex_bits(tr.ct.c2) << "\n"
       << "decrypted=" << (dec ? hex_bits(*dec) : std::string("reject")) << "\n";
  }
  return os.str();
}

KatVerdict verify_kat(const std::string& text) {
  KatVerdict v;
  std::vector<std::pair<std::string, std::string>> given;
  KatHeader h;
  try {
    given = parse_lines(text);
    for (const auto& [k, val] : given) {
      if (k.front() == '[') break;
      if (k == "param_set") h.param_set = val;
      else if (k == "m") h.m = static_cast<unsigned>(std::stoul(val, nullptr, 16));
      else if (k == "t") h.t = std::stoul(val, nullptr, 16);
      else if (k == "seed") h.seed_hex = val;
      else if (k == "count") h.count = std::stoul(val, nullptr, 16);
    }
    if (h.m == 0 || h.t == 0 || h.seed_hex.empty()) throw FormatError("incomplete header");
  } catch (const std::exception& e) {
    v.stage = "header";
    v.detail = e.what();
    return v;
  }

  std::vector<std::pair<std::string, std::string>> want;
  try {
    want = parse_lines(generate_kat(h));
  } catch (const std::exception& e) {
    v.stage = "header";
    v.detail = std::string("cannot regenerate: ") + e.what();
    return v;
  }

  long case_index = -1;
  for (std::size_t i = 0; i < want.size(); ++i) {
    if (want[i].first.front() == '[') ++case_index;
    const std::string& field = want[i].first;
    if (i >= given.size()) {
      v.stage = field;
      v.case_index = case_index;
      v.detail = "missing";
      return v;
    }
    if (given[i] != want[i]) {
      v.stage = field.front() == '[' ? "case" : field;
      v.case_index = case_index;
      v.detail = "expected " + want[i].second + ", found " + given[i].first + "=" + given[i].second;
      return v;
    }
  }
  if (given.size() != want.size()) {
    v.stage = "trailer";
    v.detail = "unexpected extra lines";
    return v;
  }
  v.ok = true;
  return v;
}

}  // namespace pcamce
