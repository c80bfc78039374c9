#include "pcamce/pipeline.hpp"

#include <limits>

#include "pcamce/errors.hpp"
#include "pcamce/hashing.hpp"

namespace pcamce {

CoinSchedule derive_s_z(const mpz_class& r, std::size_t l) {
  if (l < 2) throw ParameterError("block count l must be >= 2");
  CoinSchedule out;
  out.carry.digits.assign(l, 0);
  // d = l - i runs down from l - 1 to 1. One bignum remainder serves every
  // d in a run whose product stays below 2^63, so rm + i cannot overflow
  // and each digit costs a single machine division.
  constexpr unsigned long kProdLimit = std::numeric_limits<unsigned long>::max() / 2;
  std::size_t i = 1;
  while (i <= l - 1) {
    unsigned long prod = 1;
    std::size_t end = i;
    for (; end <= l - 1; ++end) {
      const unsigned long d = static_cast<unsigned long>(l - end);
      if (prod > kProdLimit / d) break;
      prod *= d;
    }
    const unsigned long rm = mpz_fdiv_ui(r.get_mpz_t(), prod);
    for (; i < end; ++i) {
      const unsigned long d = static_cast<unsigned long>(l - i);
      const unsigned long u = (rm + static_cast<unsigned long>(i)) % d;
      out.carry.digits[i - 1] = u;
      out.z += u;
    }
  }
  out.s = carry_to_s(out.carry);
  return out;
}

mpz_class blind_value(const mpz_class& y, std::size_t h, const mpz_class& r, const mpz_class& r_bar, std::size_t z) {
  mpz_class c1 = y * static_cast<unsigned long>(h);
  c1 += r_bar;
  c1 *= r;
  c1 += static_cast<unsigned long>(z);
  return c1;
}

EncodeTrace blind_encode(const BitString& msg, const BitString& r) {
  EncodeTrace tr;
  tr.layout = derive_layout(msg.size(), r);
  const mpz_class r_val = to_integer(r);
  tr.schedule = derive_s_z(r_val, tr.layout.blocks);
  tr.masked = msg ^ prg_expand(r, msg.size());
  // The carry is already at hand, so the encoder takes it directly instead
  // of re-deriving it from s.
  tr.encoded = pca_encode(tr.masked, tr.layout, tr.schedule.carry);
  tr.shift = mpz_fdiv_ui(r_val.get_mpz_t(), static_cast<unsigned long>(msg.size()));
  tr.shifted = circular_shift(tr.encoded, tr.shift);
  tr.c1 = blind_value(to_integer(tr.shifted), tr.layout.weight, r_val, complement_value(r), tr.schedule.z);
  return tr;
}

std::optional<BitString> recover_y(const mpz_class& c1, const mpz_class& r, const mpz_class& r_bar, std::size_t h,
                                   std::size_t z, std::size_t expected_bits) {
  if (sgn(r) <= 0 || h == 0) return std::nullopt;
  mpz_class v = c1 - static_cast<unsigned long>(z);
  if (sgn(v) < 0) return std::nullopt;
  if (!mpz_divisible_p(v.get_mpz_t(), r.get_mpz_t())) return std::nullopt;
  mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), r.get_mpz_t());
  v -= r_bar;
  if (sgn(v) < 0) return std::nullopt;
  if (!mpz_divisible_ui_p(v.get_mpz_t(), static_cast<unsigned long>(h))) return std::nullopt;
  mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(h));
  if (sgn(v) != 0 && mpz_sizeinbase(v.get_mpz_t(), 2) > expected_bits) return std::nullopt;
  return from_integer(v, expected_bits);
}

const char* rejection_name(Rejection r) {
  switch (r) {
    case Rejection::None: return "none";
    case Rejection::DecodeFail: return "decode";
    case Rejection::Eq2Fail: return "eq2";
    case Rejection::DegenerateR: return "degenerate-r";
    case Rejection::Eq3Fail: return "eq3";
    case Rejection::Eq4Fail: return "eq4";
    case Rejection::InversionFail: return "inversion";
  }
  return "unknown";
}

DecodeTrace blind_decode(const mpz_class& c1, const BitString& r, std::size_t msg_len) {
  DecodeTrace tr;
  if (msg_len == 0) throw LengthError("ciphertext message length must be >= 1");
  if (r.all_zero() || r.all_one()) {
    tr.reason = Rejection::DegenerateR;
    return tr;
  }
  const PcaLayout layout = derive_layout(msg_len, r);
  const mpz_class r_val = to_integer(r);
  tr.layout = layout;
  tr.schedule = derive_s_z(r_val, layout.blocks);

  auto y = recover_y(c1, r_val, complement_value(r), layout.weight, tr.schedule->z, layout.encoded_len());
  if (!y) {
    tr.reason = Rejection::Eq3Fail;
    return tr;
  }
  tr.shifted = *y;
  tr.shift = mpz_fdiv_ui(r_val.get_mpz_t(), static_cast<unsigned long>(msg_len));
  tr.encoded = circular_unshift(*y, tr.shift);
  tr.padded = pca_decode(*tr.encoded, layout, tr.schedule->carry);

  // Only the first n bits were masked; the pad region is compared raw.
  if (lsb(*tr.padded, layout.pad_len) != layout.rbs) {
    tr.reason = Rejection::Eq4Fail;
    return tr;
  }
  tr.message = msb(*tr.padded, msg_len) ^ prg_expand(r, msg_len);
  return tr;
}

}  // namespace pcamce
