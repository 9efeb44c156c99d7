#include "f4x/gf2k.hpp"

#include <array>
#include <string>

namespace f4x {

std::uint32_t canonical_modulus(int n) {
  static constexpr std::array<std::uint32_t, 17> kPoly = {
      0,       0x3,    0x7,    0xB,    0x13,   0x25,   0x43,   0x83,    0x11D,
      0x211,   0x409,  0x805,  0x1053, 0x201B, 0x4443, 0x8003, 0x1100B,
  };
  if (n < 1 || n > 16) {
    throw std::invalid_argument("field degree must be in [1, 16], got " + std::to_string(n));
  }
  return kPoly[n];
}

GF2k::GF2k(int n) : n_(n), poly_(canonical_modulus(n)), size_(1u << n) {
  const std::uint32_t units = size_ - 1;
  exp_.assign(2 * units + 1, 0);
  log_.assign(size_, 0);
  if (n == 1) {
    exp_[0] = exp_[1] = exp_[2] = 1;
    return;
  }
  std::uint32_t b = 1;
  for (std::uint32_t k = 0; k < units; ++k) {
    if (k > 0 && b == 1) throw std::logic_error("modulus is not primitive");
    exp_[k] = static_cast<Elem>(b);
    log_[b] = k;
    b <<= 1;
    if (b & size_) b ^= poly_;
  }
  if (b != 1) throw std::logic_error("modulus is not primitive");
  for (std::uint32_t k = units; k < exp_.size(); ++k) exp_[k] = exp_[k - units];
}

GF2k::Elem GF2k::inv(Elem a) const {
  if (a == 0) throw std::domain_error("inverse of zero in F_2^n");
  const std::uint32_t units = size_ - 1;
  return exp_[(units - log_[a]) % units];
}

GF2k::Elem GF2k::pow(Elem a, std::int64_t e) const {
  if (a == 0) {
    if (e < 0) throw std::domain_error("negative power of zero");
    return e == 0 ? 1 : 0;
  }
  const std::int64_t units = size_ - 1;
  std::int64_t k = (static_cast<std::int64_t>(log_[a]) * (e % units)) % units;
  if (k < 0) k += units;
  return exp_[static_cast<std::size_t>(k)];
}

std::vector<GF2k::Elem> GF2k::elements() const {
  std::vector<Elem> out(size_);
  for (std::uint32_t i = 0; i < size_; ++i) out[i] = static_cast<Elem>(i);
  return out;
}

std::vector<GF2k::Elem> GF2k::additive_basis() const {
  std::vector<Elem> out;
  for (int i = 0; i < n_; ++i) out.push_back(static_cast<Elem>(1u << i));
  return out;
}

GF2k::Elem GF2k::embed_f4(Elem a) const {
  if (a <= 1) return a;
  if (a > 3 || n_ % 2 != 0) throw std::invalid_argument("F_4 does not embed in F_2^" + std::to_string(n_));
  // w = g^{(2^n-1)/3} is a root of x^2 + x + 1; F_4's element 2 maps to w.
  const Elem w = pow(generator(), (size_ - 1) / 3);
  return a == 2 ? w : static_cast<Elem>(w ^ 1);
}

}  // namespace f4x
