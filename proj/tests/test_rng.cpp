#include <doctest.h>

#include <cmath>
#include <set>

#include "pcamce/rng.hpp"

using namespace pcamce;

TEST_CASE("seeded streams are reproducible and distinct") {
  Rng a(std::uint64_t{5}), b(std::uint64_t{5}), c(std::uint64_t{6});
  for (int i = 0; i < 100; ++i) {
    const auto x = a.next_u64();
    CHECK(x == b.next_u64());
  }
  CHECK(Rng(std::uint64_t{5}).next_u64() != c.next_u64());
  CHECK(Rng("seed").next_u64() == Rng("seed").next_u64());
}

TEST_CASE("forks are independent of later parent draws") {
  Rng parent(std::uint64_t{7});
  Rng f1 = parent.fork(3);
  parent.next_u64();
  Rng f2 = parent.fork(3);
  CHECK(f1.next_u64() == f2.next_u64());
  CHECK(parent.fork(3).next_u64() != parent.fork(4).next_u64());
}

TEST_CASE("uniform stays in range and covers it") {
  Rng rng(std::uint64_t{8});
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 2000; ++i) {
    const auto v = rng.uniform(13);
    CHECK(v < 13);
    seen.insert(v);
  }
  CHECK(seen.size() == 13);
  mpz_class bound("123456789012345678901234567890");
  for (int i = 0; i < 200; ++i) {
    const mpz_class v = rng.uniform_mpz(bound);
    CHECK(v >= 0);
    CHECK(v < bound);
  }
}

TEST_CASE("random weight vectors have the exact weight") {
  Rng rng(std::uint64_t{9});
  for (int i = 0; i < 300; ++i) {
    const std::size_t len = 1 + rng.uniform(200);
    const std::size_t w = rng.uniform(len + 1);
    const BitString e = random_weight_vector(len, w, rng);
    CHECK(e.size() == len);
    CHECK(e.weight() == w);
  }
}

TEST_CASE("bit stream is balanced") {
  Rng rng(std::uint64_t{10});
  const std::size_t n = 100000;
  const double w = static_cast<double>(rng.bits(n).weight());
  CHECK(std::fabs(w - n / 2.0) < 4 * std::sqrt(n / 4.0));
}
