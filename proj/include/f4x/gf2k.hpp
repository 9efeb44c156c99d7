#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace f4x {

/// Arithmetic in F_{2^n}, 1 <= n <= 16.
///
/// Elements are polynomials over F_2 of degree < n packed into the low bits
/// of a 16-bit word (bit i is the coefficient of x^i).  Multiplication reduces
/// modulo one fixed primitive polynomial per degree:
///
///   n  polynomial                     n  polynomial
///   1  x + 1                          9  x^9 + x^4 + 1
///   2  x^2 + x + 1                   10  x^10 + x^3 + 1
///   3  x^3 + x + 1                   11  x^11 + x^2 + 1
///   4  x^4 + x + 1                   12  x^12 + x^6 + x^4 + x + 1
///   5  x^5 + x^2 + 1                 13  x^13 + x^4 + x^3 + x + 1
///   6  x^6 + x + 1                   14  x^14 + x^10 + x^6 + x + 1
///   7  x^7 + x + 1                   15  x^15 + x + 1
///   8  x^8 + x^4 + x^3 + x^2 + 1     16  x^16 + x^12 + x^3 + x + 1
///
/// For n >= 2 the class x is a generator of the multiplicative group; every
/// enumeration in the project iterates elements in increasing integer order.
class GF2k {
 public:
  using Elem = std::uint16_t;

  explicit GF2k(int n);

  int degree() const { return n_; }
  std::uint32_t order() const { return size_; }
  std::uint32_t modulus() const { return poly_; }

  static Elem add(Elem a, Elem b) { return a ^ b; }

  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }

  /// Throws std::domain_error on zero.
  Elem inv(Elem a) const;

  Elem frobenius(Elem a) const { return mul(a, a); }

  Elem pow(Elem a, std::int64_t e) const;

  /// x, the polynomial generator (the element called theta for n = 2).
  Elem generator() const { return n_ == 1 ? 1 : 2; }

  /// All field elements 0, 1, ..., 2^n - 1.
  std::vector<Elem> elements() const;

  /// The F_2-basis 1, x, ..., x^{n-1}.
  std::vector<Elem> additive_basis() const;

  /// Image of a in F_4 = {0, 1, w, w+1} (encoded 0..3) inside this field.
  /// Requires n even (or a in {0, 1}).
  Elem embed_f4(Elem a) const;

  bool contains(Elem a) const { return a < size_; }

 private:
  int n_;
  std::uint32_t poly_;
  std::uint32_t size_;
  std::vector<Elem> exp_;  // doubled so mul needs no modular reduction
  std::vector<std::uint32_t> log_;
};

/// Canonical primitive polynomial for F_{2^n} (bit i = coefficient of x^i).
std::uint32_t canonical_modulus(int n);

}  // namespace f4x
