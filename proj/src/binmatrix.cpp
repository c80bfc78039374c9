#include "pcamce/binmatrix.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "pcamce/errors.hpp"
#include "pcamce/kernels.hpp"
#include "pcamce/rng.hpp"

namespace pcamce {

BinMatrix BinMatrix::identity(std::size_t n) {
  BinMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

BinMatrix BinMatrix::from_strings(std::span<const std::string_view> rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  BinMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionError("from_strings: ragged rows");
    m.set_row(r, BitString::from_string(rows[r]));
  }
  return m;
}

BitString BinMatrix::row_bits(std::size_t r) const {
  BitString out(cols_);
  std::copy_n(row(r).begin(), stride_, out.words().begin());
  return out;
}

void BinMatrix::set_row(std::size_t r, const BitString& bits) {
  if (bits.size() != cols_) throw DimensionError("set_row: length mismatch");
  std::copy_n(bits.words().begin(), stride_, row(r).begin());
}

void BinMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(row(a).begin(), row(a).end(), row(b).begin());
}

void BinMatrix::xor_row(std::size_t dst, std::size_t src) {
  auto d = row(dst);
  auto s = row(src);
  for (std::size_t w = 0; w < stride_; ++w) d[w] ^= s[w];
}

BinMatrix BinMatrix::transpose() const {
  BinMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    auto rw = row(r);
    for (std::size_t w = 0; w < stride_; ++w) {
      Word bits = rw[w];
      while (bits) {
        const std::size_t c = w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
        t.set(c, r, true);
        bits &= bits - 1;
      }
    }
  }
  return t;
}

BinMatrix BinMatrix::column_block(std::size_t first, std::size_t count) const {
  if (first > cols_ || count > cols_ - first) throw DimensionError("column_block out of range");
  BinMatrix out(rows_, count);
  for (std::size_t r = 0; r < rows_; ++r) out.set_row(r, row_bits(r).slice(first, count));
  return out;
}

std::size_t BinMatrix::weight_of_row(std::size_t r) const {
  std::size_t w = 0;
  for (Word x : row(r)) w += static_cast<std::size_t>(std::popcount(x));
  return w;
}

BinMatrix mat_mul(const BinMatrix& a, const BinMatrix& b) { return kernels::parallel::mat_mul(a, b); }

BitString vec_mat_mul(const BitString& v, const BinMatrix& m) {
  if (v.size() != m.rows()) throw DimensionError("vec_mat_mul: vector length != matrix rows");
  BitString out(m.cols());
  kernels::parallel::vec_mat_mul(v.words(), m, out.words());
  return out;
}

EchelonForm row_reduce(BinMatrix m) { return kernels::parallel::row_reduce(std::move(m)); }

std::size_t rank(const BinMatrix& m) { return row_reduce(m).rank(); }

std::optional<BinMatrix> inverse(const BinMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("inverse: matrix is not square");
  const std::size_t n = m.rows();
  BinMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    BitString row = m.row_bits(r);
    BitString unit(n);
    unit.set(r, true);
    row.append(unit);
    aug.set_row(r, row);
  }
  EchelonForm ef = row_reduce(std::move(aug));
  if (ef.rank() < n || ef.pivot_cols[n - 1] != n - 1) return std::nullopt;
  return ef.reduced.column_block(n, n);
}

std::pair<BinMatrix, BinMatrix> random_invertible(std::size_t dim, Rng& rng) {
  if (dim == 0) throw DimensionError("random_invertible: dim must be >= 1");
  for (;;) {
    BinMatrix s(dim, dim);
    for (std::size_t r = 0; r < dim; ++r) s.set_row(r, rng.bits(dim));
    if (auto inv = inverse(s)) return {std::move(s), std::move(*inv)};
  }
}

std::pair<BinMatrix, BinMatrix> random_permutation_matrix(std::size_t dim, Rng& rng) {
  if (dim == 0) throw DimensionError("random_permutation_matrix: dim must be >= 1");
  std::vector<std::size_t> perm(dim);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = dim - 1; i > 0; --i) std::swap(perm[i], perm[static_cast<std::size_t>(rng.uniform(i + 1))]);
  BinMatrix p(dim, dim);
  for (std::size_t r = 0; r < dim; ++r) p.set(r, perm[r], true);
  BinMatrix pt = p.transpose();
  return {std::move(p), std::move(pt)};
}

bool is_permutation_matrix(const BinMatrix& m) {
  if (m.rows() != m.cols()) return false;
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (m.weight_of_row(r) != 1) return false;
  const BinMatrix t = m.transpose();
  for (std::size_t r = 0; r < t.rows(); ++r)
    if (t.weight_of_row(r) != 1) return false;
  return true;
}

}  // namespace pcamce
