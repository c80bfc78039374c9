#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "pcamce/bitstring.hpp"

namespace pcamce {

class Rng;

/// Dense matrix over GF(2), rows packed into 64-bit words.
///
/// Row r is laid out like a BitString of length cols(): column c lives in
/// word c / 64 at bit c % 64, and padding bits past cols() stay zero.
class BinMatrix {
 public:
  BinMatrix() = default;
  BinMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), stride_(words_for(cols)), data_(rows * words_for(cols), 0) {}

  static BinMatrix identity(std::size_t n);
  /// Rows given as '0'/'1' strings of equal length.
  static BinMatrix from_strings(std::span<const std::string_view> rows);
  static BinMatrix from_strings(std::initializer_list<std::string_view> rows) {
    return from_strings(std::span<const std::string_view>(rows.begin(), rows.size()));
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t stride() const { return stride_; }

  bool get(std::size_t r, std::size_t c) const { return (data_[r * stride_ + c / kWordBits] >> (c % kWordBits)) & 1U; }
  void set(std::size_t r, std::size_t c, bool v) {
    Word& w = data_[r * stride_ + c / kWordBits];
    const Word mask = Word{1} << (c % kWordBits);
    w = v ? (w | mask) : (w & ~mask);
  }

  std::span<const Word> row(std::size_t r) const { return {data_.data() + r * stride_, stride_}; }
  std::span<Word> row(std::size_t r) { return {data_.data() + r * stride_, stride_}; }
  BitString row_bits(std::size_t r) const;
  void set_row(std::size_t r, const BitString& bits);
  void swap_rows(std::size_t a, std::size_t b);
  /// row(dst) ^= row(src)
  void xor_row(std::size_t dst, std::size_t src);

  BinMatrix transpose() const;
  /// Columns [first, first + count) as a new matrix.
  BinMatrix column_block(std::size_t first, std::size_t count) const;

  std::size_t weight_of_row(std::size_t r) const;

  friend bool operator==(const BinMatrix&, const BinMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<Word> data_;
};

/// Reduced row echelon form with the pivot column of each nonzero row.
struct EchelonForm {
  BinMatrix reduced;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank() const { return pivot_cols.size(); }
};

/// GF(2) products; DimensionError on mismatch.
BinMatrix mat_mul(const BinMatrix& a, const BinMatrix& b);
BitString vec_mat_mul(const BitString& v, const BinMatrix& m);

EchelonForm row_reduce(BinMatrix m);
std::size_t rank(const BinMatrix& m);
/// Inverse of a square matrix, or nullopt if singular. DimensionError if not square.
std::optional<BinMatrix> inverse(const BinMatrix& m);

/// Uniform invertible dim x dim matrix and its inverse (rejection sampling).
std::pair<BinMatrix, BinMatrix> random_invertible(std::size_t dim, Rng& rng);
/// Uniform permutation matrix and its inverse (the transpose).
std::pair<BinMatrix, BinMatrix> random_permutation_matrix(std::size_t dim, Rng& rng);
bool is_permutation_matrix(const BinMatrix& m);

}  // namespace pcamce
