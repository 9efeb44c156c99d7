#include "doctest.h"
#include "f4x/rootsys.hpp"

#include <algorithm>
#include <set>

using namespace f4x;

namespace {
int idx(const char* s) { return RootSystem::get().index(std::string(s)); }
}  // namespace

TEST_CASE("root census") {
  const auto& rs = RootSystem::get();
  int s = 0, l = 0;
  for (const auto& r : rs.roots()) (r.is_long() ? l : s)++;
  CHECK(rs.roots().size() == 48);
  CHECK(s == 24);
  CHECK(l == 24);
  for (int i = 0; i < 48; ++i) {
    int n = RootSystem::negation(i);
    CHECK(RootSystem::negation(n) == i);
    CHECK(rs.root(n).length == rs.root(i).length);
    CHECK(rs.root(i).negative() == (i < 24));
  }
}

TEST_CASE("diagram regenerated from Cartan data matches transcription") {
  auto a = RootSystem::get().derived_edges();
  auto b = RootSystem::transcribed_edges();
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  CHECK(a == b);
  CHECK(a.size() == 28);
}

TEST_CASE("simple reflections on 0100") {
  const auto& rs = RootSystem::get();
  CHECK(rs.reflect(0, idx("0100")) == idx("1100"));
  CHECK(rs.reflect(2, idx("0100")) == idx("0120"));
  for (int i = 0; i < 4; ++i) CHECK(rs.cartan()[i][i] == 2);
}

TEST_CASE("coroots") {
  const auto& rs = RootSystem::get();
  for (int i = 0; i < 48; ++i) {
    const Coeffs& b = rs.root(i).coeffs;
    const Coeffs& cv = rs.coroot(i);
    if (rs.root(i).is_long()) {
      CHECK(cv == Coeffs{b[0], b[1], b[2] / 2, b[3] / 2});
      CHECK(b[2] % 2 == 0);
      CHECK(b[3] % 2 == 0);
    } else {
      CHECK(cv == Coeffs{2 * b[0], 2 * b[1], b[2], b[3]});
    }
    CHECK(rs.pairing_with_coroot(b, i) == 2);
  }
}

TEST_CASE("long roots vanish on h_s") {
  const auto& rs = RootSystem::get();
  for (int i = 0; i < 48; ++i) {
    if (!rs.root(i).is_long()) continue;
    CHECK(rs.pairing(rs.root(i).coeffs, 2) % 2 == 0);
    CHECK(rs.pairing(rs.root(i).coeffs, 3) % 2 == 0);
  }
}

TEST_CASE("root strings have at most three roots, long-short-long") {
  const auto& rs = RootSystem::get();
  for (int a = 0; a < 48; ++a) {
    for (int b = 0; b < 48; ++b) {
      if (b == a || b == RootSystem::negation(a)) continue;
      RootString st = root_string(a, b);
      CHECK(st.p + st.q <= 2);
      if (st.p + st.q == 2) {
        Coeffs lo = rs.root(b).coeffs, mid = lo, hi = lo;
        for (int i = 0; i < 4; ++i) {
          lo[i] -= st.p * rs.root(a).coeffs[i];
          mid[i] = lo[i] + rs.root(a).coeffs[i];
          hi[i] = lo[i] + 2 * rs.root(a).coeffs[i];
        }
        CHECK(rs.root(rs.index(lo)).is_long());
        CHECK_FALSE(rs.root(rs.index(mid)).is_long());
        CHECK(rs.root(rs.index(hi)).is_long());
      }
    }
  }
}

TEST_CASE("phi sharp") {
  const auto& rs = RootSystem::get();
  CHECK(phi_sharp({1, 0, 0, 0}) == Coeffs{0, 0, 0, 2});
  CHECK(phi_sharp({0, 0, 1, 0}) == Coeffs{0, 1, 0, 0});
  CHECK(phi_sharp({0, 1, 2, 1}) == Coeffs{1, 2, 2, 0});
  std::set<int> short_img, long_img;
  for (int i = 0; i < 48; ++i) {
    const Root& r = rs.root(i);
    Coeffs p = phi_sharp(r.coeffs);
    Coeffs pp = phi_sharp(p);
    for (int k = 0; k < 4; ++k) CHECK(pp[k] == 2 * r.coeffs[k]);
    if (r.is_long()) {
      for (int& x : p) {
        CHECK(x % 2 == 0);
        x /= 2;
      }
      int j = rs.index(p);
      CHECK_FALSE(rs.root(j).is_long());
      long_img.insert(j);
    } else {
      int j = rs.index(p);
      CHECK(rs.root(j).is_long());
      short_img.insert(j);
    }
  }
  CHECK(short_img.size() == 24);
  CHECK(long_img.size() == 24);
}

TEST_CASE("phi_geq and cocharacter pairing") {
  CHECK(phi_geq({idx("2342")}).size() == 1);
  CHECK(phi_geq({}).empty());
  CHECK(phi_geq({idx("1110"), idx("0111"), idx("1120"), idx("0122")}).size() == 16);
  Cocharacter l17{{0, 1, 1, 0}};
  CHECK(l17.pair({1, 0, 0, 0}) == 0);
  CHECK(l17.pair({1, 2, 3, 2}) == 5);
  Cocharacter rho{{1, 1, 1, 1}};
  for (int i = 0; i < 4; ++i) {
    Coeffs e{0, 0, 0, 0};
    e[i] = 1;
    CHECK(rho.pair(e) == 1);
  }
}

TEST_CASE("root labels") {
  CHECK(root_label({1, 2, 3, 2}) == "1232");
  CHECK(root_label({-1, 0, 0, 0}) == "-1000");
  CHECK(parse_root_label("-0100") == Coeffs{0, -1, 0, 0});
  CHECK_FALSE(parse_root_label("12a4").has_value());
  CHECK_THROWS_AS(RootSystem::get().index(std::string("1111x")), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem::get().index(Coeffs{2, 0, 0, 0}), std::invalid_argument);
}

TEST_CASE("Weyl group census") {
  const auto& w = WeylGroup::get();
  CHECK(w.size() == 1152);
  CHECK(w.longest().length == 24);
  auto dist = w.length_distribution();
  std::uint64_t sum = 0, p = 1;
  for (std::size_t l = 0; l < dist.size(); ++l) sum += dist[l] << l;
  for (int d : {2, 6, 8, 12}) p *= (1ull << d) - 1;
  CHECK(sum == 197358525ull);
  CHECK(sum == p);
  CHECK(w.conjugacy_class_count() == 25);
}

TEST_CASE("Weyl words and inversion sets") {
  const auto& rs = RootSystem::get();
  const auto& W = WeylGroup::get();
  for (const auto& w : W.elements()) {
    CHECK(w.word.size() == static_cast<std::size_t>(w.length));
    CHECK(W.inversion_set(w).size() == static_cast<std::size_t>(w.length));
    // Rebuild the permutation from the word.
    for (int r = 0; r < 48; ++r) {
      int x = r;
      for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) x = rs.reflect(*it, x);
      CHECK(x == w(r));
    }
    auto inv = W.inverse(w);
    for (int r = 0; r < 48; ++r) CHECK(inv(w(r)) == r);
  }
}
