#include "pcamce/pca.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstring>
#include <limits>

#include "pcamce/errors.hpp"

namespace pcamce {

void FactorialCarry::validate() const {
  const std::size_t l = digits.size();
  for (std::size_t i = 0; i < l; ++i)
    if (digits[i] > l - 1 - i)
      throw CarryRangeError("carry digit " + std::to_string(i + 1) + " exceeds " + std::to_string(l - 1 - i));
}

PcaLayout derive_layout(std::size_t msg_len, const BitString& r) {
  if (msg_len == 0) throw ParameterError("message length must be >= 1");
  if (r.all_zero() || r.all_one()) throw DegenerateRandomnessError("coins r must not be all-zero or all-one");
  PcaLayout lay;
  lay.msg_len = msg_len;
  lay.sec_param = r.size();
  lay.weight = r.weight();
  lay.blocks = 2 * lay.weight >= lay.sec_param ? lay.weight : lay.sec_param - lay.weight;
  lay.block_len = (msg_len + lay.blocks - 1) / lay.blocks;
  lay.pad_len = lay.blocks * lay.block_len - msg_len;
  lay.rbs = msb(r, lay.pad_len);
  return lay;
}

FactorialCarry s_to_carry(const mpz_class& s, std::size_t l) {
  if (sgn(s) < 0) throw RangeError("s must be nonnegative");
  FactorialCarry u;
  u.digits.assign(l, 0);
  mpz_class rest = s;
  // Position i (zero-based) has weight (l-1-i)!, so peel digits off from
  // the right with radices 1, 2, ..., l.
  for (std::size_t radix = 1; radix <= l; ++radix) {
    const std::size_t pos = l - radix;
    u.digits[pos] = mpz_fdiv_q_ui(rest.get_mpz_t(), rest.get_mpz_t(), radix);
  }
  if (sgn(rest) != 0) throw RangeError("s must be smaller than l!");
  return u;
}

mpz_class carry_to_s(const FactorialCarry& u) {
  u.validate();
  mpz_class acc = 0;
  const std::size_t l = u.size();
  // Horner over the mixed radix: ((u_1 (l-1) + u_2)(l-2) + u_3) ... * 1 + u_l.
  // Runs of radices whose product fits in 64 bits are folded into one
  // machine word first, which keeps the bignum steps few.
  std::size_t i = 0;
  while (i < l) {
    unsigned long prod = 1, chunk = 0;
    for (; i < l; ++i) {
      const unsigned long radix = static_cast<unsigned long>(l - i);
      if (prod > std::numeric_limits<unsigned long>::max() / radix) break;
      prod *= radix;
      chunk = chunk * radix + static_cast<unsigned long>(u.digits[i]);
    }
    acc *= prod;
    acc += chunk;
  }
  return acc;
}

namespace {

constexpr std::size_t kSmallListMax = 4096;

// Fenwick tree over "still unused" flags; select(k) finds the k-th unused
// position (zero-based) in O(log l).
class UnusedSet {
 public:
  // Padded to a power of two past n with saturated counts, so the descent
  // needs no bounds test and compiles to conditional moves.
  explicit UnusedSet(std::size_t n)
      : n_(n), top_(std::bit_ceil(std::max<std::size_t>(n, 1))), tree_(2 * top_ + 1, 0) {
    for (std::size_t i = 1; i <= n; ++i) {
      tree_[i] += 1;
      const std::size_t parent = i + (i & (~i + 1));
      if (parent < tree_.size()) tree_[parent] += tree_[i];
    }
    for (std::size_t i = n + 1; i < tree_.size(); ++i) tree_[i] = std::numeric_limits<std::uint32_t>::max();
  }
  std::size_t take(std::size_t k) {
    std::size_t pos = 0;
    auto kk = static_cast<std::uint32_t>(k);
    for (std::size_t step = top_; step; step >>= 1) {
      const std::uint32_t c = tree_[pos + step];
      const bool go = c <= kk;
      pos += go ? step : 0;
      kk -= go ? c : 0;
    }
    for (std::size_t i = pos + 1; i <= n_; i += i & (~i + 1)) --tree_[i];
    return pos;
  }

 private:
  std::size_t n_;
  std::size_t top_;
  std::vector<std::uint32_t> tree_;
};

}  // namespace

std::vector<std::size_t> carry_permutation(const FactorialCarry& u) {
  const std::size_t l = u.size();
  for (std::size_t i = 0; i < l; ++i)
    if (u.digits[i] >= l - i) throw CarryRangeError("carry digit " + std::to_string(i + 1) + " out of range");
  std::vector<std::size_t> order;
  order.reserve(l);
  if (l <= kSmallListMax) {
    // Erase from a compact array: O(l^2) bytes moved, but no data-dependent
    // branches, which beats the tree at the block counts used in practice.
    std::vector<std::uint16_t> unused(l);
    for (std::size_t i = 0; i < l; ++i) unused[i] = static_cast<std::uint16_t>(i);
    for (std::size_t i = 0; i < l; ++i) {
      const std::size_t d = u.digits[i];
      order.push_back(unused[d]);
      std::memmove(unused.data() + d, unused.data() + d + 1, (l - i - d - 1) * sizeof(std::uint16_t));
    }
    return order;
  }
  UnusedSet unused(l);
  for (std::size_t i = 0; i < l; ++i) order.push_back(unused.take(u.digits[i]));
  return order;
}

std::vector<BitString> permute_blocks(const std::vector<BitString>& blocks, const FactorialCarry& u) {
  if (blocks.size() != u.size()) throw CarryRangeError("block count differs from carry length");
  const auto order = carry_permutation(u);
  std::vector<BitString> out;
  out.reserve(blocks.size());
  for (std::size_t src : order) out.push_back(blocks[src]);
  return out;
}

std::vector<BitString> unpermute_blocks(const std::vector<BitString>& permuted, const FactorialCarry& u) {
  if (permuted.size() != u.size()) throw CarryRangeError("block count differs from carry length");
  const auto order = carry_permutation(u);
  std::vector<BitString> out(permuted.size());
  for (std::size_t i = 0; i < order.size(); ++i) out[order[i]] = permuted[i];
  return out;
}

namespace {

void copy_bits(const BitString& src, std::size_t src_pos, BitString& dst, std::size_t dst_pos, std::size_t len) {
  if (len >= kWordBits) {
    dst.assign(dst_pos, src.slice(src_pos, len));
    return;
  }
  for (std::size_t b = 0; b < len; ++b) dst.set(dst_pos + b, src.get(src_pos + b));
}

}  // namespace

BitString pca_encode(const BitString& msg, const PcaLayout& layout, const FactorialCarry& u) {
  if (msg.size() != layout.msg_len) throw LengthError("pca_encode: message length differs from layout");
  if (u.size() != layout.blocks) throw CarryRangeError("carry length differs from block count");
  const BitString padded = concat(msg, layout.rbs);
  const auto order = carry_permutation(u);
  const std::size_t v = layout.block_len;
  BitString out(layout.encoded_len());
  for (std::size_t i = 0; i < order.size(); ++i) copy_bits(padded, order[i] * v, out, i * v, v);
  return out;
}

BitString pca_encode(const BitString& msg, const BitString& r, const mpz_class& s) {
  const PcaLayout layout = derive_layout(msg.size(), r);
  return pca_encode(msg, layout, s_to_carry(s, layout.blocks));
}

BitString pca_decode(const BitString& encoded, const PcaLayout& layout, const FactorialCarry& u) {
  if (encoded.size() != layout.encoded_len()) throw LengthError("pca_decode: encoded length != l*v");
  if (u.size() != layout.blocks) throw CarryRangeError("carry length differs from block count");
  const auto order = carry_permutation(u);
  const std::size_t v = layout.block_len;
  BitString out(layout.encoded_len());
  for (std::size_t i = 0; i < order.size(); ++i) copy_bits(encoded, i * v, out, order[i] * v, v);
  return out;
}

BitString pca_decode(const BitString& encoded, std::size_t msg_len, const BitString& r, const mpz_class& s) {
  const PcaLayout layout = derive_layout(msg_len, r);
  return pca_decode(encoded, layout, s_to_carry(s, layout.blocks));
}

BitString circular_shift(const BitString& x, std::size_t q) {
  if (q >= x.size()) throw RangeError("shift amount must be smaller than the string length");
  return concat(x.slice(q, x.size() - q), x.slice(0, q));
}

BitString circular_unshift(const BitString& x, std::size_t q) {
  if (q >= x.size()) throw RangeError("shift amount must be smaller than the string length");
  return concat(x.slice(x.size() - q, q), x.slice(0, x.size() - q));
}

}  // namespace pcamce
