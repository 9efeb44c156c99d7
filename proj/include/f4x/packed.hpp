#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "f4x/chevalley.hpp"

namespace f4x {

/// Bit-sliced vector of V over F_{2^N}: plane b holds bit b of every
/// coordinate, coordinate c at bit c (root layout, then h_3, h_4, hbar_1,
/// hbar_2).  For N = 1 this is the 52-bit packed layout.
template <int N>
struct Packed {
  std::array<std::uint64_t, N> w{};

  Packed& operator^=(const Packed& o) {
    for (int b = 0; b < N; ++b) w[b] ^= o.w[b];
    return *this;
  }
  friend Packed operator^(Packed a, const Packed& b) { return a ^= b; }
  friend bool operator==(const Packed&, const Packed&) = default;
  friend auto operator<=>(const Packed&, const Packed&) = default;

  /// Union of the coordinate supports of all planes.
  std::uint64_t support() const {
    std::uint64_t s = 0;
    for (int b = 0; b < N; ++b) s |= w[b];
    return s;
  }
  void clear(std::uint64_t coords) {
    for (int b = 0; b < N; ++b) w[b] &= ~coords;
  }
  bool agrees_on(const Packed& o, std::uint64_t coords) const {
    for (int b = 0; b < N; ++b)
      if ((w[b] ^ o.w[b]) & coords) return false;
    return true;
  }
};

inline constexpr std::uint64_t kAllCoords = (std::uint64_t{1} << kDimV) - 1;

template <int N>
Packed<N> pack(const VElement& v) {
  Packed<N> p;
  for (int c = 0; c < kDimV; ++c)
    for (int b = 0; b < N; ++b)
      if (v.c[c] >> b & 1) p.w[b] |= std::uint64_t{1} << c;
  return p;
}

template <int N>
VElement unpack(const Packed<N>& p) {
  VElement v;
  for (int c = 0; c < kDimV; ++c)
    for (int b = 0; b < N; ++b)
      if (p.w[b] >> c & 1) v.c[c] |= static_cast<Elem>(1u << b);
  return v;
}

template <int N>
struct PackedHash {
  std::size_t operator()(const Packed<N>& p) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (int b = 0; b < N; ++b) {
      h ^= p.w[b] + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h *= 0xff51afd7ed558ccdull;
    }
    return static_cast<std::size_t>(h ^ (h >> 33));
  }
};

/// An F_2-linear map of V(F_{2^N}) compiled to byte lookup tables.
template <int N>
class PackedMap {
 public:
  static constexpr int kBytes = 7;

  PackedMap() = default;

  /// Tabulates f, which must be additive, from its values on e_c * 2^b.
  explicit PackedMap(const std::function<VElement(const VElement&)>& f) : tables_(N * kBytes) {
    std::array<std::array<Packed<N>, kDimV>, N> col;
    for (int b = 0; b < N; ++b)
      for (int c = 0; c < kDimV; ++c) col[b][c] = pack<N>(f(VElement::basis(c, static_cast<Elem>(1u << b))));
    for (int b = 0; b < N; ++b)
      for (int j = 0; j < kBytes; ++j) {
        auto& t = tables_[b * kBytes + j];
        for (int x = 1; x < 256; ++x) {
          const int low = __builtin_ctz(x);
          const int c = 8 * j + low;
          t[x] = t[x & (x - 1)];
          if (c < kDimV) t[x] ^= col[b][c];
        }
      }
  }

  Packed<N> operator()(const Packed<N>& v) const {
    Packed<N> out;
    for (int b = 0; b < N; ++b) {
      std::uint64_t x = v.w[b];
      const auto* t = &tables_[b * kBytes];
      for (int j = 0; j < kBytes; ++j, x >>= 8) out ^= t[j][x & 0xff];
    }
    return out;
  }

 private:
  std::vector<std::array<Packed<N>, 256>> tables_;
};

template <int N>
PackedMap<N> compile(const VModule& m, const GroupWord& w) {
  if (m.field().degree() != N) throw std::invalid_argument("field degree does not match packing width");
  return PackedMap<N>([&](const VElement& v) { return m.apply(w, v); });
}

}  // namespace f4x
