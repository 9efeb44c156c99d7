#include "doctest.h"
#include "f4x/stabilizers.hpp"
#include "f4x/tables.hpp"
#include "f4x/unipotent.hpp"

#include <random>

using namespace f4x;

TEST_CASE("count helpers") {
  CHECK(exact_log2(1) == 0);
  CHECK(exact_log2(Count{1} << 100) == 100);
  CHECK(exact_log2(3) == -1);
  CHECK(exact_log2(0) == -1);
  CHECK(to_string(Count{1} << 96) == "79228162514264337593543950336");
  CHECK(to_string(0) == "0");
}

TEST_CASE("height order") {
  const auto& order = negative_roots_by_height();
  REQUIRE(order.size() == 24);
  for (std::size_t i = 1; i < order.size(); ++i)
    CHECK(RootSystem::get().root(order[i - 1]).height() <= RootSystem::get().root(order[i]).height());
}

TEST_CASE("field degree is checked") {
  CountProblem p;
  CHECK_THROWS_AS(count_solutions(0, p), std::invalid_argument);
  CHECK_THROWS_AS(count_solutions(5, p), std::invalid_argument);
}

TEST_CASE("empty product") {
  CountProblem p;
  p.start = VElement::basis(3);
  p.target = p.start;
  p.mask = ~std::uint64_t{0} >> 12;
  CHECK(count_solutions(1, p) == 1);
  p.target = VElement{};
  CHECK(count_solutions(1, p) == 0);
}

TEST_CASE("pruned count agrees with plain enumeration on random problems") {
  std::mt19937 rng(7);
  const auto& order = negative_roots_by_height();
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + trial % 2;
    const Elem q = static_cast<Elem>(1u << n);
    CountProblem p;
    for (int c = 0; c < 4; ++c) p.start.c[rng() % kDimV] = static_cast<Elem>(1 + rng() % (q - 1));
    const int m = n == 1 ? 10 : 6;
    for (int k = 0; k < m; ++k) {
      Factor f{order[rng() % 24], std::nullopt};
      if (rng() % 5 == 0) f.fixed = static_cast<Elem>(rng() % q);
      p.factors.push_back(f);
    }
    p.target = p.start;
    p.mask = 0;
    for (int c = 0; c < kDimV; ++c)
      if (rng() % 3 == 0) p.mask |= std::uint64_t{1} << c;
    CHECK(count_solutions(n, p) == count_solutions_plain(n, p));
  }
}

TEST_CASE("stabilizer counts agree with the plain oracle on a sample") {
  const auto& t = OrbitTable::get();
  for (int i : {1, 10, 17, 24}) {
    const auto p = unipotent_stabilizer_problem(t.at(i).rep());
    CHECK(count_solutions(1, p) == count_solutions_plain(1, p));
  }
}
