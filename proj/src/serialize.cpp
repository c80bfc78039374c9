#include "pcamce/serialize.hpp"

#include <algorithm>
#include <limits>

#include "pcamce/errors.hpp"

namespace pcamce {
namespace wire {

void Writer::u32(std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void Writer::u64(std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void Writer::field(std::span<const std::uint8_t> payload, std::uint64_t bit_count) {
  if (payload.size() > std::numeric_limits<std::uint32_t>::max()) throw LengthError("field too large");
  u32(static_cast<std::uint32_t>(payload.size()));
  u64(bit_count);
  raw(payload);
}

void Writer::field_u64(std::uint64_t v) {
  Writer inner;
  inner.u64(v);
  field(inner.out_, 64);
}

void Writer::field_mpz(const mpz_class& v) {
  if (v < 0) throw RangeError("negative integers are not serialised");
  const std::size_t bits = v == 0 ? 0 : mpz_sizeinbase(v.get_mpz_t(), 2);
  Bytes buf((bits + 7) / 8);
  std::size_t count = 0;
  if (!buf.empty()) mpz_export(buf.data(), &count, 1, 1, 1, 0, v.get_mpz_t());
  buf.resize(count);
  field(buf, bits);
}

void Writer::field_bits(const BitString& b) { field(pack_bytes(b), b.size()); }

void Writer::field_matrix(const BinMatrix& m) {
  Writer inner;
  inner.u32(static_cast<std::uint32_t>(m.rows()));
  inner.u32(static_cast<std::uint32_t>(m.cols()));
  BitString flat(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) flat.assign(r * m.cols(), m.row_bits(r));
  inner.raw(pack_bytes(flat));
  field(inner.out_, static_cast<std::uint64_t>(m.rows()) * m.cols());
}

std::span<const std::uint8_t> Reader::raw(std::size_t n) {
  if (in_.size() - pos_ < n) throw IntegrityError("truncated input");
  auto s = in_.subspan(pos_, n);
  pos_ += n;
  return s;
}

std::uint8_t Reader::u8() { return raw(1)[0]; }

std::uint32_t Reader::u32() {
  auto b = raw(4);
  std::uint32_t v = 0;
  for (int i = 3; i >= 0; --i) v = (v << 8) | b[i];
  return v;
}

std::uint64_t Reader::u64() {
  auto b = raw(8);
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | b[i];
  return v;
}

Reader::Field Reader::field() {
  const std::uint32_t len = u32();
  const std::uint64_t bits = u64();
  return {raw(len), bits};
}

std::uint64_t Reader::field_u64() {
  auto f = field();
  if (f.payload.size() != 8 || f.bit_count != 64) throw FormatError("malformed integer field");
  Reader inner(f.payload);
  return inner.u64();
}

mpz_class Reader::field_mpz() {
  auto f = field();
  if ((f.bit_count + 7) / 8 != f.payload.size()) throw FormatError("malformed big integer field");
  mpz_class v;
  if (!f.payload.empty()) mpz_import(v.get_mpz_t(), f.payload.size(), 1, 1, 1, 0, f.payload.data());
  const std::size_t actual = v == 0 ? 0 : mpz_sizeinbase(v.get_mpz_t(), 2);
  if (actual != f.bit_count) throw FormatError("big integer bit count mismatch");
  return v;
}

BitString Reader::field_bits() {
  auto f = field();
  if ((f.bit_count + 7) / 8 != f.payload.size()) throw FormatError("malformed bit field");
  return unpack_bytes(f.payload, f.bit_count);
}

BinMatrix Reader::field_matrix() {
  auto f = field();
  Reader inner(f.payload);
  const std::uint64_t rows = inner.u32();
  const std::uint64_t cols = inner.u32();
  if (rows * cols != f.bit_count) throw FormatError("matrix bit count mismatch");
  const std::uint64_t bytes = (rows * cols + 7) / 8;
  if (f.payload.size() != 8 + bytes) throw FormatError("matrix payload size mismatch");
  const BitString flat = unpack_bytes(inner.raw(bytes), rows * cols);
  BinMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) m.set_row(r, flat.slice(r * cols, cols));
  return m;
}

void Reader::expect_end() const {
  if (!done()) throw FormatError("trailing bytes after payload");
}

void write_key_header(Writer& w, const std::array<std::uint8_t, 4>& magic, KeyType type) {
  w.raw(magic);
  w.u8(kFormatVersion);
  w.u8(static_cast<std::uint8_t>(type));
}

KeyType read_key_header(Reader& r, const std::array<std::uint8_t, 4>& magic) {
  auto m = r.raw(4);
  if (!std::equal(m.begin(), m.end(), magic.begin())) throw FormatError("bad magic");
  if (r.u8() != kFormatVersion) throw FormatError("unsupported format version");
  const std::uint8_t t = r.u8();
  if (t < 1 || t > 6) throw FormatError("unknown key type");
  return static_cast<KeyType>(t);
}

}  // namespace wire

namespace {

using wire::Reader;
using wire::Writer;

void expect_type(Reader& r, KeyType want) {
  if (wire::read_key_header(r, kKeyMagic) != want) throw FormatError("unexpected key type");
}

void write_mce_public(Writer& w, const McEliecePublicKey& pk) {
  w.field_u64(pk.t);
  w.field_matrix(pk.g_pub);
}

McEliecePublicKey read_mce_public(Reader& r) {
  McEliecePublicKey pk;
  pk.t = r.field_u64();
  pk.g_pub = r.field_matrix();
  if (pk.t == 0 || pk.t > pk.code_len()) throw FormatError("implausible error weight");
  return pk;
}

void write_mce_secret(Writer& w, const McElieceSecretKey& sk) {
  const GoppaCode& code = sk.code();
  w.field_u64(code.field().m());
  w.field_u64(code.field().reduction_poly());
  Writer g;
  for (GfElem c : code.goppa_poly().coeffs()) {
    g.u8(static_cast<std::uint8_t>(c & 0xff));
    g.u8(static_cast<std::uint8_t>(c >> 8));
  }
  const Bytes gb = g.take();
  w.field(gb, code.goppa_poly().coeffs().size() * 16);
  w.field_matrix(sk.s_inv());
  w.field_matrix(sk.p_inv());
}

McElieceSecretKey read_mce_secret(Reader& r) {
  const std::uint64_t m = r.field_u64();
  const std::uint64_t poly = r.field_u64();
  if (m < 3 || m > 13 || poly >= (1ULL << (m + 1))) throw FormatError("bad field parameters");
  auto gf = r.field();
  if (gf.payload.size() % 2 != 0 || gf.bit_count != gf.payload.size() * 8) throw FormatError("bad Goppa polynomial");
  std::vector<GfElem> coeffs;
  for (std::size_t i = 0; i < gf.payload.size(); i += 2)
    coeffs.push_back(static_cast<GfElem>(gf.payload[i] | (gf.payload[i + 1] << 8)));
  BinMatrix s_inv = r.field_matrix();
  BinMatrix p_inv = r.field_matrix();
  try {
    GaloisField field(static_cast<unsigned>(m), static_cast<std::uint32_t>(poly));
    for (GfElem c : coeffs)
      if (c >= field.order()) throw FormatError("Goppa coefficient outside the field");
    GoppaCode code = GoppaCode::from_polynomial(field, FieldPoly(coeffs));
    return McElieceSecretKey(std::move(s_inv), std::move(code), std::move(p_inv));
  } catch (const FormatError&) {
    throw;
  } catch (const Error& e) {
    throw FormatError(std::string("inconsistent secret key: ") + e.what());
  }
}

void write_ids(Writer& w, HashId h, PrgId g) {
  w.u8(static_cast<std::uint8_t>(h));
  w.u8(static_cast<std::uint8_t>(g));
}

void read_ids(Reader& r, HashId& h, PrgId& g) {
  const std::uint8_t hb = r.u8();
  const std::uint8_t gb = r.u8();
  if (hb != static_cast<std::uint8_t>(HashId::Sha256Ctr)) throw FormatError("unknown hash id");
  if (gb != static_cast<std::uint8_t>(PrgId::Sha256Ctr)) throw FormatError("unknown PRG id");
  h = HashId::Sha256Ctr;
  g = PrgId::Sha256Ctr;
}

}  // namespace

Bytes serialize_key(const McEliecePublicKey& pk) {
  Writer w;
  wire::write_key_header(w, kKeyMagic, KeyType::McEliecePublic);
  write_mce_public(w, pk);
  return w.take();
}

Bytes serialize_key(const McElieceSecretKey& sk) {
  Writer w;
  wire::write_key_header(w, kKeyMagic, KeyType::McElieceSecret);
  write_mce_secret(w, sk);
  return w.take();
}

Bytes serialize_key(const Cca2PublicKey& pk) {
  Writer w;
  wire::write_key_header(w, kKeyMagic, KeyType::Cca2Public);
  write_ids(w, pk.hash_id, pk.prg_id);
  write_mce_public(w, pk.mce);
  return w.take();
}

Bytes serialize_key(const Cca2SecretKey& sk) {
  Writer w;
  wire::write_key_header(w, kKeyMagic, KeyType::Cca2Secret);
  write_ids(w, sk.hash_id, sk.prg_id);
  write_mce_secret(w, sk.mce);
  return w.take();
}

McEliecePublicKey deserialize_mce_public_key(std::span<const std::uint8_t> bytes) {
  Reader r(bytes);
  expect_type(r, KeyType::McEliecePublic);
  auto pk = read_mce_public(r);
  r.expect_end();
  return pk;
}

McElieceSecretKey deserialize_mce_secret_key(std::span<const std::uint8_t> bytes) {
  Reader r(bytes);
  expect_type(r, KeyType::McElieceSecret);
  auto sk = read_mce_secret(r);
  r.expect_end();
  return sk;
}

Cca2PublicKey deserialize_public_key(std::span<const std::uint8_t> bytes) {
  Reader r(bytes);
  expect_type(r, KeyType::Cca2Public);
  Cca2PublicKey pk;
  read_ids(r, pk.hash_id, pk.prg_id);
  pk.mce = read_mce_public(r);
  r.expect_end();
  return pk;
}

Cca2SecretKey deserialize_secret_key(std::span<const std::uint8_t> bytes) {
  Reader r(bytes);
  expect_type(r, KeyType::Cca2Secret);
  HashId h;
  PrgId g;
  read_ids(r, h, g);
  McElieceSecretKey mce = read_mce_secret(r);
  r.expect_end();
  McEliecePublicKey pk = derive_public_key(mce);
  return Cca2SecretKey{std::move(mce), std::move(pk), h, g};
}

KeyType peek_key_type(std::span<const std::uint8_t> bytes) {
  Reader r(bytes);
  return wire::read_key_header(r, kKeyMagic);
}

Bytes serialize_ct(const BlindedCiphertext& ct, const std::array<std::uint8_t, 4>& magic) {
  Writer w;
  w.raw(magic);
  w.u8(kFormatVersion);
  w.u64(ct.msg_len);
  if (ct.c1 < 0) throw RangeError("C1 must be non-negative");
  Bytes c1(ct.c1 == 0 ? 0 : (mpz_sizeinbase(ct.c1.get_mpz_t(), 2) + 7) / 8);
  std::size_t count = 0;
  if (!c1.empty()) mpz_export(c1.data(), &count, 1, 1, 1, 0, ct.c1.get_mpz_t());
  c1.resize(count);
  w.u32(static_cast<std::uint32_t>(c1.size()));
  w.raw(c1);
  w.u64(ct.c2.size());
  w.raw(pack_bytes(ct.c2));
  return w.take();
}

BlindedCiphertext deserialize_ct(std::span<const std::uint8_t> bytes, const std::array<std::uint8_t, 4>& magic) {
  Reader r(bytes);
  auto m = r.raw(4);
  if (!std::equal(m.begin(), m.end(), magic.begin())) throw FormatError("bad ciphertext magic");
  if (r.u8() != kFormatVersion) throw FormatError("unsupported ciphertext version");
  BlindedCiphertext ct;
  ct.msg_len = r.u64();
  const std::uint32_t c1_len = r.u32();
  auto c1 = r.raw(c1_len);
  if (!c1.empty() && c1[0] == 0) throw FormatError("non-minimal C1 encoding");
  const std::uint64_t c2_bits = r.u64();
  if (c2_bits > (std::uint64_t{1} << 32)) throw FormatError("C2 length out of range");
  const std::uint64_t cap = ct.msg_len + 3 * c2_bits + 64;
  if (ct.msg_len > (std::uint64_t{1} << 40) || static_cast<std::uint64_t>(c1_len) * 8 > cap + 8)
    throw FormatError("C1 too long for the declared message length");
  if (!c1.empty()) mpz_import(ct.c1.get_mpz_t(), c1.size(), 1, 1, 1, 0, c1.data());
  if (ct.c1 != 0 && mpz_sizeinbase(ct.c1.get_mpz_t(), 2) > cap) throw FormatError("C1 too long");
  ct.c2 = unpack_bytes(r.raw((c2_bits + 7) / 8), c2_bits);
  r.expect_end();
  return ct;
}

}  // namespace pcamce
