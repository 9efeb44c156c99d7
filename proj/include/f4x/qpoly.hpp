#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <utility>
#include <vector>

namespace f4x {

using BigInt = boost::multiprecision::cpp_int;

/// Exact polynomial in q with integer coefficients.  coeffs()[i] is the
/// coefficient of q^i; the vector never has trailing zeros.
class QPolynomial {
 public:
  QPolynomial() = default;
  QPolynomial(long long c);  // NOLINT: constants convert implicitly
  explicit QPolynomial(std::vector<BigInt> coeffs);

  static QPolynomial q(int power = 1);

  /// Parses expressions like "q^4*(1+q^2+q^4)*(q^8-1)" or "q^4(q^8-1)".
  /// Throws std::invalid_argument on malformed input.
  static QPolynomial parse(const std::string& text);

  const std::vector<BigInt>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  /// Exponent of the largest power of q dividing this (0 for zero).
  int q_valuation() const;

  BigInt evaluate(const BigInt& x) const;

  QPolynomial& operator+=(const QPolynomial& o);
  QPolynomial& operator-=(const QPolynomial& o);
  QPolynomial& operator*=(const QPolynomial& o);
  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
  friend QPolynomial operator*(QPolynomial a, const QPolynomial& b) { return a *= b; }
  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

  QPolynomial pow(int e) const;

  /// Quotient and remainder by a monic-or-unit-leading divisor, exact over Z
  /// when the leading coefficient of `d` divides every step.  Throws
  /// std::domain_error for d = 0 or a non-integral quotient.
  std::pair<QPolynomial, QPolynomial> divmod(const QPolynomial& d) const;
  /// Quotient if the division is exact, else throws std::domain_error.
  QPolynomial exact_div(const QPolynomial& d) const;
  bool divisible_by(const QPolynomial& d) const;

  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> c_;
};

}  // namespace f4x
