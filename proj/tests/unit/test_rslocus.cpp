#include "doctest.h"
#include "f4x/rslocus.hpp"

using namespace f4x;

TEST_CASE("no witness over F_2") { CHECK(!find_rs(1).has_value()); }

TEST_CASE("witness over F_4") {
  const auto w = find_rs(2);
  REQUIRE(w.has_value());
  CHECK(w->values.size() == 48);
  for (Elem x : w->values) CHECK(x != 0);
  CHECK(rs_unipotent_stabilizer(*w) == 1);
  CHECK(rs_equivariance_check(*w));
}

TEST_CASE("witnesses over larger fields") {
  for (int n = 3; n <= 4; ++n) {
    const auto w = find_rs(n);
    REQUIRE(w.has_value());
    CHECK(rs_unipotent_stabilizer(*w) == 1);
  }
}

TEST_CASE("degenerate zero-weight vectors") {
  CHECK(rs_unipotent_stabilizer(2, {0, 0, 0, 0}) == Count{1} << 48);
  // a vector killed by some root: that root group fixes it
  bool seen = false;
  for (int c = 1; c < 256 && !seen; ++c) {
    const std::array<Elem, 4> v{Elem(c & 3), Elem(c >> 2 & 3), Elem(c >> 4 & 3), Elem(c >> 6 & 3)};
    const auto vals = root_functionals(2, v);
    int zeros = 0;
    for (Elem x : vals) zeros += x == 0;
    if (zeros > 0 && zeros < 48) {
      seen = true;
      CHECK(rs_unipotent_stabilizer(2, v) > 1);
    }
  }
  CHECK(seen);
}

TEST_CASE("reflections permute the functionals") {
  const std::array<Elem, 4> v{1, 2, 3, 1};
  const auto base = root_functionals(2, v);
  for (int i = 0; i < 4; ++i) {
    const auto img = root_functionals(2, reflect_zero(2, i, v));
    for (int a = 0; a < 48; ++a) CHECK(img[a] == base[RootSystem::get().reflect(i, a)]);
  }
}

TEST_CASE("precondition") {
  CHECK_THROWS_AS(find_rs(0), std::invalid_argument);
  CHECK_THROWS_AS(find_rs(5), std::invalid_argument);
}
