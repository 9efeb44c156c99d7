#include "doctest.h"
#include "f4x/gf2k.hpp"

#include <random>

using f4x::GF2k;

TEST_CASE("F_4 defining relation") {
  GF2k f(2);
  const GF2k::Elem th = f.generator();
  CHECK(th == 2);
  CHECK(f.mul(th, th) == 3);
  CHECK(f.frobenius(th) == 3);
  CHECK(f.inv(th) == 3);
  CHECK(f.mul(th, 3) == 1);
}

TEST_CASE("inverse of zero throws") {
  GF2k f(3);
  CHECK_THROWS_AS(f.inv(0), std::domain_error);
  CHECK_THROWS_AS(GF2k(0), std::invalid_argument);
  CHECK_THROWS_AS(GF2k(17), std::invalid_argument);
}

TEST_CASE("every nonzero element is invertible, n <= 8") {
  for (int n = 1; n <= 8; ++n) {
    GF2k f(n);
    for (auto x : f.elements()) {
      if (x == 0) continue;
      CHECK(f.mul(x, f.inv(x)) == 1);
    }
  }
}

// Schoolbook carry-less multiply with reduction, independent of the log tables.
static std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b, int n, std::uint32_t poly) {
  std::uint32_t r = 0;
  for (int i = 0; i < n; ++i)
    if (b >> i & 1) r ^= a << i;
  for (int i = 2 * n - 2; i >= n; --i)
    if (r >> i & 1) r ^= poly << (i - n);
  return r;
}

TEST_CASE("log-table multiply agrees with schoolbook multiply") {
  std::mt19937 rng(7);
  for (int n = 1; n <= 16; ++n) {
    GF2k f(n);
    for (int k = 0; k < 2000; ++k) {
      auto a = static_cast<GF2k::Elem>(rng() % f.order());
      auto b = static_cast<GF2k::Elem>(rng() % f.order());
      CHECK(f.mul(a, b) == slow_mul(a, b, n, f.modulus()));
    }
  }
}

TEST_CASE("Frobenius is additive and x^(2^n) = x") {
  std::mt19937 rng(11);
  for (int n = 1; n <= 16; ++n) {
    GF2k f(n);
    for (int k = 0; k < 500; ++k) {
      auto a = static_cast<GF2k::Elem>(rng() % f.order());
      auto b = static_cast<GF2k::Elem>(rng() % f.order());
      CHECK(f.frobenius(a ^ b) == (f.frobenius(a) ^ f.frobenius(b)));
      GF2k::Elem x = a;
      for (int i = 0; i < n; ++i) x = f.frobenius(x);
      CHECK(x == a);
    }
  }
}

TEST_CASE("F_4 embeds in even-degree fields") {
  for (int n : {2, 4, 6, 8}) {
    GF2k f(n);
    const auto w = f.embed_f4(2);
    CHECK(f.mul(w, w) == (w ^ 1));
    CHECK(f.embed_f4(3) == (w ^ 1));
  }
  CHECK_THROWS(GF2k(3).embed_f4(2));
}
