#include <doctest.h>

#include <vector>

#include "pcamce/binmatrix.hpp"
#include "pcamce/errors.hpp"
#include "pcamce/rng.hpp"

using namespace pcamce;

namespace {

using Dense = std::vector<std::vector<int>>;

Dense dense(const BinMatrix& m) {
  Dense d(m.rows(), std::vector<int>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) d[r][c] = m.get(r, c);
  return d;
}

// Textbook triple loop mod 2.
Dense dense_mul(const Dense& a, const Dense& b) {
  Dense out(a.size(), std::vector<int>(b.empty() ? 0 : b[0].size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < out[i].size(); ++j) {
      int s = 0;
      for (std::size_t k = 0; k < b.size(); ++k) s ^= a[i][k] & b[k][j];
      out[i][j] = s;
    }
  return out;
}

// Plain forward elimination on ints.
std::size_t dense_rank(Dense d) {
  std::size_t rank = 0;
  const std::size_t cols = d.empty() ? 0 : d[0].size();
  for (std::size_t c = 0; c < cols && rank < d.size(); ++c) {
    std::size_t p = rank;
    while (p < d.size() && !d[p][c]) ++p;
    if (p == d.size()) continue;
    std::swap(d[p], d[rank]);
    for (std::size_t r = 0; r < d.size(); ++r)
      if (r != rank && d[r][c])
        for (std::size_t k = 0; k < cols; ++k) d[r][k] ^= d[rank][k];
    ++rank;
  }
  return rank;
}

BinMatrix random_matrix(std::size_t r, std::size_t c, Rng& rng) {
  BinMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) m.set_row(i, rng.bits(c));
  return m;
}

}  // namespace

TEST_CASE("products agree with the dense oracle") {
  Rng rng(std::uint64_t{10});
  for (int i = 0; i < 40; ++i) {
    const std::size_t a = 1 + rng.uniform(70), b = 1 + rng.uniform(70), c = 1 + rng.uniform(140);
    const BinMatrix x = random_matrix(a, b, rng), y = random_matrix(b, c, rng);
    CHECK(dense(mat_mul(x, y)) == dense_mul(dense(x), dense(y)));
    BinMatrix v(1, b);
    v.set_row(0, rng.bits(b));
    CHECK(vec_mat_mul(v.row_bits(0), y) == mat_mul(v, y).row_bits(0));
  }
  CHECK_THROWS_AS(mat_mul(BinMatrix(2, 3), BinMatrix(2, 3)), DimensionError);
  CHECK_THROWS_AS(vec_mat_mul(BitString(4), BinMatrix(3, 3)), DimensionError);
}

TEST_CASE("identity and transpose") {
  Rng rng(std::uint64_t{11});
  const BitString v = rng.bits(100);
  CHECK(vec_mat_mul(v, BinMatrix::identity(100)) == v);
  const BinMatrix m = random_matrix(13, 70, rng);
  CHECK(m.transpose().transpose() == m);
  CHECK(m.transpose().get(5, 7) == m.get(7, 5));
}

TEST_CASE("rank agrees with the dense oracle") {
  Rng rng(std::uint64_t{12});
  for (int i = 0; i < 60; ++i) {
    const std::size_t r = 1 + rng.uniform(40), c = 1 + rng.uniform(80);
    BinMatrix m = random_matrix(r, c, rng);
    if (r > 2 && rng.next_bit()) {
      m.set_row(1, m.row_bits(0));  // force a dependency now and then
    }
    const std::size_t rk = rank(m);
    CHECK(rk == dense_rank(dense(m)));
    CHECK(rk <= std::min(r, c));
  }
}

TEST_CASE("row_reduce gives a reduced echelon form") {
  Rng rng(std::uint64_t{13});
  const EchelonForm e = row_reduce(random_matrix(20, 50, rng));
  for (std::size_t i = 0; i < e.rank(); ++i)
    for (std::size_t r = 0; r < e.reduced.rows(); ++r) CHECK(e.reduced.get(r, e.pivot_cols[i]) == (r == i));
}

TEST_CASE("random invertible matrices multiply to the identity") {
  Rng rng(std::uint64_t{14});
  auto [s1, s1i] = random_invertible(1, rng);
  CHECK(s1.get(0, 0));
  CHECK(s1i.get(0, 0));
  for (int i = 0; i < 200; ++i) {
    const std::size_t dim = 1 + rng.uniform(64);
    auto [s, si] = random_invertible(dim, rng);
    CHECK(mat_mul(s, si) == BinMatrix::identity(dim));
    CHECK(mat_mul(si, s) == BinMatrix::identity(dim));
  }
  Rng seeded(std::uint64_t{8});
  CHECK(rank(random_invertible(8, seeded).first) == 8);
}

TEST_CASE("inverse detects singular matrices") {
  BinMatrix m = BinMatrix::from_strings({"110", "011", "101"});
  CHECK_FALSE(inverse(m).has_value());
  CHECK_THROWS_AS(inverse(BinMatrix(2, 3)), DimensionError);
}

TEST_CASE("random permutation matrices") {
  Rng rng(std::uint64_t{15});
  for (int i = 0; i < 50; ++i) {
    const std::size_t dim = 1 + rng.uniform(40);
    auto [p, pi] = random_permutation_matrix(dim, rng);
    CHECK(is_permutation_matrix(p));
    for (std::size_t r = 0; r < dim; ++r) CHECK(p.weight_of_row(r) == 1);
    for (std::size_t c = 0; c < dim; ++c) CHECK(p.transpose().weight_of_row(c) == 1);
    CHECK(pi == p.transpose());
    CHECK(mat_mul(p, p.transpose()) == BinMatrix::identity(dim));
  }
  Rng seeded(std::uint64_t{16});
  auto [p, pi] = random_permutation_matrix(16, seeded);
  const BitString v = seeded.bits(16);
  CHECK(vec_mat_mul(vec_mat_mul(v, p), pi) == v);
  CHECK_FALSE(is_permutation_matrix(BinMatrix::from_strings({"11", "00"})));
}
