#include <doctest.h>

#include "pcamce/errors.hpp"
#include "pcamce/goppa.hpp"
#include "pcamce/rng.hpp"

using namespace pcamce;

namespace {

bool zero_syndromes(const GoppaCode& code) {
  return mat_mul(code.generator(), code.parity_check().transpose()) ==
         BinMatrix(code.code_dim(), code.parity_check().rows());
}

}  // namespace

TEST_CASE("code dimensions and G * H^T = 0") {
  Rng rng(std::uint64_t{70});
  const GoppaCode c = GoppaCode::generate(4, 2, rng);
  CHECK(c.code_len() == 16);
  CHECK(c.code_dim() == 8);
  CHECK(zero_syndromes(c));
  CHECK(rank(c.generator()) == 8);

  const GoppaCode big = GoppaCode::generate(10, 50, rng);
  CHECK(big.code_len() == 1024);
  CHECK(big.code_dim() == 524);
  CHECK(zero_syndromes(big));

  for (int i = 0; i < 5; ++i) CHECK(zero_syndromes(GoppaCode::generate(6, 4, rng)));
}

TEST_CASE("support elements are never roots of g") {
  Rng rng(std::uint64_t{71});
  const GoppaCode c = GoppaCode::generate(6, 4, rng);
  for (GfElem a : c.support()) CHECK(poly_eval(c.field(), c.goppa_poly(), a) != 0);
}

TEST_CASE("parameters that admit no full-support code are refused") {
  Rng rng(std::uint64_t{72});
  // t = 1 forces a linear g, whose root lies in the support.
  CHECK_THROWS_AS(GoppaCode::generate(3, 1, rng), ParameterError);
  CHECK_THROWS_AS(GoppaCode::generate(4, 4, rng), ParameterError);
  CHECK_THROWS_AS(GoppaCode::generate(2, 2, rng), ParameterError);
}

TEST_CASE("systematic generator reads messages off the information positions") {
  Rng rng(std::uint64_t{73});
  const GoppaCode c = GoppaCode::generate(5, 3, rng);
  for (int i = 0; i < 50; ++i) {
    const BitString u = rng.bits(c.code_dim());
    CHECK(c.extract_message(vec_mat_mul(u, c.generator())) == u);
  }
}

TEST_CASE("decode corrects every weight up to t") {
  for (auto [m, t] : {std::pair<unsigned, std::size_t>{4, 2}, {6, 4}, {8, 10}}) {
    Rng rng(std::uint64_t{74 + m});
    const GoppaCode c = GoppaCode::generate(m, t, rng);
    for (int i = 0; i < 500; ++i) {
      const BitString cw = vec_mat_mul(rng.bits(c.code_dim()), c.generator());
      const BitString e = random_weight_vector(c.code_len(), rng.uniform(t + 1), rng);
      auto d = decode(c, cw ^ e);
      REQUIRE(d);
      CHECK(d->codeword == cw);
      CHECK(d->error == e);
    }
  }
}

TEST_CASE("decode is deterministic and rejects length mismatch") {
  Rng rng(std::uint64_t{75});
  const GoppaCode c = GoppaCode::generate(4, 2, rng);
  const BitString w = rng.bits(16);
  const auto a = decode(c, w), b = decode(c, w);
  CHECK(a.has_value() == b.has_value());
  if (a) CHECK(a->codeword == b->codeword);
  CHECK_THROWS_AS(decode(c, BitString(15)), LengthError);
}

TEST_CASE("brute force oracle agrees with decode") {
  Rng rng(std::uint64_t{76});
  const GoppaCode c = GoppaCode::generate(4, 2, rng);
  for (int i = 0; i < 500; ++i) {
    const BitString u = rng.bits(8);
    const BitString cw = vec_mat_mul(u, c.generator());
    const BitString e = random_weight_vector(16, rng.uniform(3), rng);
    auto bf = brute_force_decode(c.generator(), cw ^ e, 2);
    auto d = decode(c, cw ^ e);
    REQUIRE(bf);
    REQUIRE(d);
    CHECK(bf->codeword == d->codeword);
    CHECK(bf->message == u);
  }
  auto exact = brute_force_decode(c.generator(), vec_mat_mul(BitString::from_string("10110001"), c.generator()), 2);
  REQUIRE(exact);
  CHECK(exact->distance == 0);
}

TEST_CASE("a word far from every codeword fails both decoders") {
  Rng rng(std::uint64_t{77});
  const GoppaCode c = GoppaCode::generate(4, 2, rng);
  int found = 0;
  for (int i = 0; i < 2000 && found < 20; ++i) {
    const BitString w = rng.bits(16);
    if (brute_force_decode(c.generator(), w, 2)) continue;
    ++found;
    CHECK_FALSE(decode(c, w).has_value());
  }
  CHECK(found > 0);
  CHECK_THROWS_AS(brute_force_decode(BinMatrix(17, 20), BitString(20), 2), InfeasibleError);
}

TEST_CASE("from_polynomial rebuilds the same code") {
  Rng rng(std::uint64_t{78});
  const GoppaCode c = GoppaCode::generate(6, 4, rng);
  const GoppaCode d = GoppaCode::from_polynomial(c.field(), c.goppa_poly());
  CHECK(d.generator() == c.generator());
  CHECK(d.parity_check() == c.parity_check());
  CHECK_THROWS_AS(GoppaCode::from_polynomial(c.field(), FieldPoly({0, 0, 1})), ParameterError);
}
