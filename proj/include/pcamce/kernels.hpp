#pragma once

// Hot GF(2) loops in two flavours. `serial` is the plain reference kept for
// testing; `parallel` is the OpenMP version the library dispatches to. Both
// must produce bit-identical results.

#include <cstddef>
#include <optional>
#include <span>

#include "pcamce/binmatrix.hpp"

namespace pcamce::kernels {

/// Result of the exhaustive nearest-codeword search.
struct NearestCodeword {
  std::size_t message;  // index into [0, 2^rows), message bit i = bit (rows-1-i)
  std::size_t distance;
};

namespace serial {

/// out = v * m, where v holds m.rows() bits.
void vec_mat_mul(std::span<const Word> v, const BinMatrix& m, std::span<Word> out);
BinMatrix mat_mul(const BinMatrix& a, const BinMatrix& b);
EchelonForm row_reduce(BinMatrix m);
/// Smallest-distance message (first in index order on ties), or nullopt
/// if the nearest codeword is farther than max_distance.
std::optional<NearestCodeword> nearest_codeword(const BinMatrix& gen, const BitString& word,
                                                std::size_t max_distance);

}  // namespace serial

namespace parallel {

void vec_mat_mul(std::span<const Word> v, const BinMatrix& m, std::span<Word> out);
BinMatrix mat_mul(const BinMatrix& a, const BinMatrix& b);
EchelonForm row_reduce(BinMatrix m);
std::optional<NearestCodeword> nearest_codeword(const BinMatrix& gen, const BitString& word,
                                                std::size_t max_distance);

}  // namespace parallel

/// Number of OpenMP threads the parallel kernels will use (1 without OpenMP).
int max_threads();

}  // namespace pcamce::kernels
