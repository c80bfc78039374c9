#include "pcamce/kernels.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "pcamce/errors.hpp"

namespace pcamce::kernels {
namespace {

// Below these sizes the OpenMP team start-up costs more than the loop.
constexpr std::size_t kParallelWordOps = 1U << 14;
constexpr std::size_t kParallelMessages = 1U << 10;

void check_vec(std::span<const Word> v, const BinMatrix& m, std::span<Word> out) {
  if (v.size() < words_for(m.rows()) || out.size() < m.stride())
    throw DimensionError("vec_mat_mul: buffer size mismatch");
}

inline bool bit_of(std::span<const Word> v, std::size_t i) { return (v[i / kWordBits] >> (i % kWordBits)) & 1U; }

std::size_t distance_to(std::span<const Word> a, std::span<const Word> b) {
  std::size_t d = 0;
  for (std::size_t w = 0; w < a.size(); ++w) d += static_cast<std::size_t>(std::popcount(a[w] ^ b[w]));
  return d;
}

// Pivot search and Gauss-Jordan elimination share this driver; the
// `eliminate` callback clears column c from every row except the pivot.
template <typename Eliminate>
EchelonForm reduce_with(BinMatrix m, Eliminate eliminate) {
  EchelonForm out;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < m.cols() && pivot_row < m.rows(); ++c) {
    std::size_t p = pivot_row;
    while (p < m.rows() && !m.get(p, c)) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, pivot_row);
    eliminate(m, pivot_row, c);
    out.pivot_cols.push_back(c);
    ++pivot_row;
  }
  out.reduced = std::move(m);
  return out;
}

void check_nearest_args(const BinMatrix& gen, const BitString& word) {
  if (word.size() != gen.cols()) throw DimensionError("nearest_codeword: word length != code length");
  if (gen.rows() >= 8 * sizeof(std::size_t) - 1) throw InfeasibleError("nearest_codeword: too many rows");
}

// Gray-code walk over message indices [begin, end). Returns the best
// (distance, index) pair, ties broken by the smaller index.
NearestCodeword scan_range(const BinMatrix& gen, const BitString& word, std::size_t begin, std::size_t end) {
  const std::size_t k = gen.rows();
  std::vector<Word> cw(gen.stride(), 0);
  NearestCodeword best{0, std::numeric_limits<std::size_t>::max()};
  // Walk Gray codes g(j) = j ^ (j >> 1) for j in [begin, end); map back to
  // the message index afterwards so ties resolve in index order.
  auto gray = [](std::size_t j) { return j ^ (j >> 1); };
  auto load = [&](std::size_t msg) {
    std::fill(cw.begin(), cw.end(), 0);
    for (std::size_t i = 0; i < k; ++i)
      if ((msg >> (k - 1 - i)) & 1U) {
        auto r = gen.row(i);
        for (std::size_t w = 0; w < cw.size(); ++w) cw[w] ^= r[w];
      }
  };
  if (begin >= end) return best;
  std::size_t msg = gray(begin);
  load(msg);
  for (std::size_t j = begin; j < end; ++j) {
    if (j != begin) {
      const std::size_t next = gray(j);
      const std::size_t changed = msg ^ next;  // single bit
      const std::size_t bit = static_cast<std::size_t>(std::countr_zero(changed));
      auto r = gen.row(k - 1 - bit);
      for (std::size_t w = 0; w < cw.size(); ++w) cw[w] ^= r[w];
      msg = next;
    }
    const std::size_t d = distance_to(cw, word.words());
    if (d < best.distance || (d == best.distance && msg < best.message)) best = {msg, d};
  }
  return best;
}

}  // namespace

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace serial {

void vec_mat_mul(std::span<const Word> v, const BinMatrix& m, std::span<Word> out) {
  check_vec(v, m, out);
  std::fill(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(m.stride()), 0);
  // Masked accumulation: no branch on the (secret, random) vector bits.
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const Word mask = -static_cast<Word>(bit_of(v, i));
    auto r = m.row(i);
    for (std::size_t w = 0; w < m.stride(); ++w) out[w] ^= r[w] & mask;
  }
}

BinMatrix mat_mul(const BinMatrix& a, const BinMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("mat_mul: inner dimensions differ");
  BinMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) vec_mat_mul(a.row(i), b, out.row(i));
  return out;
}

EchelonForm row_reduce(BinMatrix m) {
  return reduce_with(std::move(m), [](BinMatrix& mm, std::size_t pr, std::size_t c) {
    for (std::size_t r = 0; r < mm.rows(); ++r)
      if (r != pr && mm.get(r, c)) mm.xor_row(r, pr);
  });
}

std::optional<NearestCodeword> nearest_codeword(const BinMatrix& gen, const BitString& word,
                                                std::size_t max_distance) {
  check_nearest_args(gen, word);
  const NearestCodeword best = scan_range(gen, word, 0, std::size_t{1} << gen.rows());
  if (best.distance > max_distance) return std::nullopt;
  return best;
}

}  // namespace serial

namespace parallel {

void vec_mat_mul(std::span<const Word> v, const BinMatrix& m, std::span<Word> out) {
  check_vec(v, m, out);
  const std::size_t stride = m.stride();
  const std::size_t rows = m.rows();
  if (rows * stride < kParallelWordOps) {
    serial::vec_mat_mul(v, m, out);
    return;
  }
  // Each thread owns a contiguous slice of output words and walks the rows
  // in order, so no reduction is needed and row reads stay sequential.
#pragma omp parallel
  {
#ifdef _OPENMP
    const std::size_t nt = static_cast<std::size_t>(omp_get_num_threads());
    const std::size_t id = static_cast<std::size_t>(omp_get_thread_num());
#else
    const std::size_t nt = 1, id = 0;
#endif
    const std::size_t lo = stride * id / nt, hi = stride * (id + 1) / nt;
    for (std::size_t w = lo; w < hi; ++w) out[w] = 0;
    for (std::size_t i = 0; i < rows; ++i) {
      if (!bit_of(v, i)) continue;
      auto r = m.row(i);
      for (std::size_t w = lo; w < hi; ++w) out[w] ^= r[w];
    }
  }
}

BinMatrix mat_mul(const BinMatrix& a, const BinMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("mat_mul: inner dimensions differ");
  BinMatrix out(a.rows(), b.cols());
  const auto rows = static_cast<std::ptrdiff_t>(a.rows());
#pragma omp parallel for schedule(static) if (a.rows() * b.rows() * b.stride() >= kParallelWordOps)
  for (std::ptrdiff_t i = 0; i < rows; ++i)
    serial::vec_mat_mul(a.row(static_cast<std::size_t>(i)), b, out.row(static_cast<std::size_t>(i)));
  return out;
}

EchelonForm row_reduce(BinMatrix m) {
  const bool big = m.rows() * m.stride() >= kParallelWordOps;
  return reduce_with(std::move(m), [big](BinMatrix& mm, std::size_t pr, std::size_t c) {
    const auto rows = static_cast<std::ptrdiff_t>(mm.rows());
#pragma omp parallel for schedule(static) if (big)
    for (std::ptrdiff_t r = 0; r < rows; ++r) {
      const auto ur = static_cast<std::size_t>(r);
      if (ur != pr && mm.get(ur, c)) mm.xor_row(ur, pr);
    }
  });
}

std::optional<NearestCodeword> nearest_codeword(const BinMatrix& gen, const BitString& word,
                                                std::size_t max_distance) {
  check_nearest_args(gen, word);
  const std::size_t total = std::size_t{1} << gen.rows();
  const int threads = total >= kParallelMessages ? max_threads() : 1;
  std::vector<NearestCodeword> best(static_cast<std::size_t>(threads),
                                    NearestCodeword{0, std::numeric_limits<std::size_t>::max()});
#pragma omp parallel num_threads(threads)
  {
    int tid = 0;
    int nt = 1;
#ifdef _OPENMP
    tid = omp_get_thread_num();
    nt = omp_get_num_threads();
#endif
    const std::size_t chunk = (total + static_cast<std::size_t>(nt) - 1) / static_cast<std::size_t>(nt);
    const std::size_t begin = std::min(total, chunk * static_cast<std::size_t>(tid));
    const std::size_t end = std::min(total, begin + chunk);
    best[static_cast<std::size_t>(tid)] = scan_range(gen, word, begin, end);
  }
  NearestCodeword winner{0, std::numeric_limits<std::size_t>::max()};
  for (const auto& b : best)
    if (b.distance < winner.distance || (b.distance == winner.distance && b.message < winner.message))
      winner = b;
  if (winner.distance > max_distance) return std::nullopt;
  return winner;
}

}  // namespace parallel
}  // namespace pcamce::kernels
