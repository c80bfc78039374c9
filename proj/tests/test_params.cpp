#include <doctest.h>

#include "pcamce/params.hpp"

using namespace pcamce;

TEST_CASE("built-in parameter sets") {
  const auto tiny = find_parameter_set("tiny");
  REQUIRE(tiny);
  CHECK(tiny->m == 4);
  CHECK(tiny->t == 2);
  CHECK(tiny->code_len() == 16);
  CHECK(tiny->code_dim() == 8);
  const auto small = find_parameter_set("small");
  REQUIRE(small);
  CHECK(small->code_dim() == 40);
  const auto classic = find_parameter_set("classic");
  REQUIRE(classic);
  CHECK(classic->code_len() == 1024);
  CHECK(classic->code_dim() == 524);
  CHECK_FALSE(find_parameter_set("huge"));
  std::size_t prev = 0;
  for (const auto& p : parameter_sets()) {
    CHECK(p.code_dim() >= 3);
    CHECK(p.code_len() > prev);
    prev = p.code_len();
  }
}
