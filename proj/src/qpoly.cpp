#include "f4x/qpoly.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace f4x {

QPolynomial::QPolynomial(long long c) {
  if (c != 0) c_.push_back(BigInt(c));
}

QPolynomial::QPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

QPolynomial QPolynomial::q(int power) {
  if (power < 0) throw std::invalid_argument("negative power of q");
  std::vector<BigInt> c(power + 1);
  c[power] = 1;
  return QPolynomial(std::move(c));
}

void QPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int QPolynomial::q_valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return static_cast<int>(i);
  return 0;
}

BigInt QPolynomial::evaluate(const BigInt& x) const {
  BigInt r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

QPolynomial& QPolynomial::operator*=(const QPolynomial& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<BigInt> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  c_ = std::move(r);
  trim();
  return *this;
}

QPolynomial QPolynomial::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative exponent");
  QPolynomial r(1), b = *this;
  for (; e; e >>= 1, b *= b)
    if (e & 1) r *= b;
  return r;
}

std::pair<QPolynomial, QPolynomial> QPolynomial::divmod(const QPolynomial& d) const {
  if (d.is_zero()) throw std::domain_error("division by the zero polynomial");
  std::vector<BigInt> rem = c_;
  const int dd = d.degree();
  std::vector<BigInt> quo(c_.size() >= d.c_.size() ? c_.size() - d.c_.size() + 1 : 0);
  const BigInt& lead = d.c_.back();
  for (int k = static_cast<int>(rem.size()) - 1; k >= dd; --k) {
    if (rem[k] == 0) continue;
    if (rem[k] % lead != 0) throw std::domain_error("quotient is not integral");
    const BigInt f = rem[k] / lead;
    quo[k - dd] = f;
    for (int j = 0; j <= dd; ++j) rem[k - dd + j] -= f * d.c_[j];
  }
  return {QPolynomial(std::move(quo)), QPolynomial(std::move(rem))};
}

QPolynomial QPolynomial::exact_div(const QPolynomial& d) const {
  auto [q, r] = divmod(d);
  if (!r.is_zero()) throw std::domain_error("division leaves remainder " + r.to_string());
  return q;
}

bool QPolynomial::divisible_by(const QPolynomial& d) const {
  try {
    return divmod(d).second.is_zero();
  } catch (const std::domain_error&) {
    return false;
  }
}

std::string QPolynomial::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    BigInt a = c_[i];
    if (a == 0) continue;
    const bool neg = a < 0;
    if (neg) a = -a;
    if (first) os << (neg ? "-" : "");
    else os << (neg ? " - " : " + ");
    first = false;
    if (i == 0 || a != 1) os << a;
    if (i > 0) os << (a != 1 ? "*q" : "q");
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

// --- parser -----------------------------------------------------------------

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  QPolynomial parse() {
    QPolynomial r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("cannot parse polynomial '" + s_ + "' at " + std::to_string(pos_) + ": " + why);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  QPolynomial expr() {
    QPolynomial r;
    bool neg = false;
    if (peek() == '-' || peek() == '+') neg = s_[pos_++] == '-';
    r = term();
    if (neg) r = QPolynomial(0) - r;
    for (char c = peek(); c == '+' || c == '-'; c = peek()) {
      ++pos_;
      if (c == '+') r += term();
      else r -= term();
    }
    return r;
  }

  QPolynomial term() {
    QPolynomial r = factor();
    for (;;) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        r *= factor();
      } else if (c == '(' || c == 'q' || std::isdigit(static_cast<unsigned char>(c))) {
        r *= factor();
      } else {
        return r;
      }
    }
  }

  QPolynomial factor() {
    QPolynomial base = primary();
    if (peek() == '^') {
      ++pos_;
      skip();
      base = base.pow(integer());
    }
    return base;
  }

  QPolynomial primary() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      QPolynomial r = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return r;
    }
    if (c == 'q') {
      ++pos_;
      return QPolynomial::q();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return QPolynomial(integer());
    fail("expected a term");
  }

  int integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    if (pos_ - start > 6) fail("integer too large");
    return std::stoi(s_.substr(start, pos_ - start));
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

QPolynomial QPolynomial::parse(const std::string& text) { return Parser(text).parse(); }

}  // namespace f4x
