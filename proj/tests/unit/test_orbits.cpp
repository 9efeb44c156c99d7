#include "doctest.h"
#include "f4x/orbits.hpp"
#include "f4x/stabilizers.hpp"

using namespace f4x;

TEST_CASE("packed set") {
  PackedSet<1> s(4);
  Packed<1> a, b;
  b.w[0] = 5;
  CHECK(s.insert(a));
  CHECK(!s.insert(a));
  for (std::uint64_t k = 1; k < 1000; ++k) {
    Packed<1> p;
    p.w[0] = k * 0x9e3779b1ULL & ((std::uint64_t{1} << 52) - 1);
    s.insert(p);
  }
  CHECK(s.contains(a));
  CHECK(s.size() >= 999);
}

TEST_CASE("small G-orbits over F_2") {
  const auto& t = OrbitTable::get();
  CHECK(bfs_orbit(t.at(1).rep(), 1) == 1);
  CHECK(bfs_orbit(t.at(2).rep(), 1) == 69615);
  CHECK(bfs_orbit(t.at(3).rep(), 1) == 69615);
  OrbitOptions opt;
  opt.threads = 2;
  CHECK(bfs_orbit(t.at(2).rep(), 1, opt) == 69615);
}

TEST_CASE("budget and field checks") {
  const auto& t = OrbitTable::get();
  OrbitOptions opt;
  opt.budget = 1000;
  CHECK_THROWS_AS(bfs_orbit(t.at(2).rep(), 1, opt), BudgetExceeded);
  CHECK_THROWS_AS(bfs_orbit(t.at(2).rep(), 3), std::invalid_argument);
  CHECK_THROWS_AS(b_orbit(t.at(2).rep(), 0), std::invalid_argument);
}

TEST_CASE("G-orbit over F_4") {
  CHECK(bfs_orbit(OrbitTable::get().at(1).rep(), 2) == 1);
  OrbitOptions opt;
  opt.budget = 1u << 16;
  CHECK_THROWS_AS(bfs_orbit(OrbitTable::get().at(2).rep(), 2, opt), BudgetExceeded);
}

TEST_CASE("B-orbit times U-stabilizer is #U(F_2)") {
  const auto& t = OrbitTable::get();
  CHECK(b_orbit(t.at(1).rep(), 1) == 1);
  CHECK(b_orbit(t.at(24).rep(), 1) == 1u << 20);
  CHECK(b_orbit(t.at(17).rep(), 1) == 2048);
  for (const auto& r : t.orbits()) {
    const Count n = b_orbit(r.rep(), 1);
    CHECK(n * u_stabilizer_count(r.rep(), 1) == Count{1} << 24);
  }
}

TEST_CASE("B-orbits over F_4 of the smallest reps") {
  const auto& t = OrbitTable::get();
  CHECK(b_orbit(t.at(1).rep(), 2) == 1);
  CHECK(b_orbit(t.at(2).rep(), 2) == 3);
}

TEST_CASE("Weyl obstruction for the two A1 x A1 rows") {
  const auto& t = OrbitTable::get();
  CHECK(weyl_obstruction_search(t.at(20).support, t.at(21).support).empty());
  // every root of a support reaches itself under the identity
  const auto self = weyl_obstruction_search(t.at(20).support, t.at(20).support);
  CHECK(!self.empty());
  CHECK(self.front() == 0);
}

TEST_CASE("long component") {
  const auto& t = OrbitTable::get();
  CHECK(long_component(t.at(4).support) == std::vector<int>{RootSystem::get().index(std::string("2342"))});
  CHECK(long_component(t.at(5).support).empty());
}

TEST_CASE("isogeny transport") {
  for (const auto& r : isogeny_transport_check()) {
    CHECK_MESSAGE(r.ok, r.from, " -> ", r.to);
    CHECK(r.method == "weyl-lift");
  }
}
