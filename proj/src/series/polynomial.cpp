#include "conjlang/series/polynomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace conjlang {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(long long constant) {
  if (constant != 0) c_.push_back(BigInt(constant));
}

IntPolynomial IntPolynomial::monomial(BigInt c, std::size_t degree) {
  std::vector<BigInt> v(degree + 1);
  v[degree] = std::move(c);
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigInt IntPolynomial::content() const {
  BigInt g = 0;
  for (const auto& x : c_) {
    g = boost::multiprecision::gcd(g, x);
    if (g == 1) break;
  }
  return abs(g);
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return *this;
  BigInt g = content();
  if (leading() < 0) g = -g;
  return divide_exact(g);
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

IntPolynomial operator+(const IntPolynomial& x, const IntPolynomial& y) {
  std::vector<BigInt> v(std::max(x.c_.size(), y.c_.size()));
  for (std::size_t i = 0; i < x.c_.size(); ++i) v[i] += x.c_[i];
  for (std::size_t i = 0; i < y.c_.size(); ++i) v[i] += y.c_[i];
  return IntPolynomial(std::move(v));
}

IntPolynomial operator-(const IntPolynomial& x, const IntPolynomial& y) { return x + (-y); }

IntPolynomial operator*(const IntPolynomial& x, const IntPolynomial& y) {
  if (x.is_zero() || y.is_zero()) return {};
  std::vector<BigInt> v(x.c_.size() + y.c_.size() - 1);
  for (std::size_t i = 0; i < x.c_.size(); ++i) {
    if (x.c_[i] == 0) continue;
    for (std::size_t j = 0; j < y.c_.size(); ++j) v[i + j] += x.c_[i] * y.c_[j];
  }
  return IntPolynomial(std::move(v));
}

IntPolynomial operator*(const BigInt& s, const IntPolynomial& x) {
  std::vector<BigInt> v = x.c_;
  for (auto& c : v) c *= s;
  return IntPolynomial(std::move(v));
}

IntPolynomial divide_exact(const IntPolynomial& x, const IntPolynomial& y) {
  if (y.is_zero()) throw std::domain_error("polynomial division by zero");
  if (x.is_zero()) return {};
  if (x.degree() < y.degree()) throw std::domain_error("polynomial division is not exact");
  std::vector<BigInt> rem = x.c_;
  std::vector<BigInt> q(x.c_.size() - y.c_.size() + 1);
  const BigInt& lead = y.leading();
  for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i) {
    BigInt& top = rem[i + y.c_.size() - 1];
    if (top == 0) continue;
    BigInt r;
    divide_qr(top, lead, q[i], r);
    if (r != 0) throw std::domain_error("polynomial division is not exact");
    for (std::size_t j = 0; j < y.c_.size(); ++j) rem[i + j] -= q[i] * y.c_[j];
  }
  for (const auto& r : rem)
    if (r != 0) throw std::domain_error("polynomial division is not exact");
  return IntPolynomial(std::move(q));
}

IntPolynomial IntPolynomial::divide_exact(const BigInt& s) const {
  if (s == 0) throw std::domain_error("division by zero");
  std::vector<BigInt> v = c_;
  for (auto& c : v) {
    BigInt q, r;
    divide_qr(c, s, q, r);
    if (r != 0) throw std::domain_error("coefficient division is not exact");
    c = std::move(q);
  }
  return IntPolynomial(std::move(v));
}

std::string IntPolynomial::to_string() const {
  if (c_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ",";
    s += c_[i].str();
  }
  return s;
}

IntPolynomial pseudo_remainder(const IntPolynomial& x, const IntPolynomial& y) {
  if (y.is_zero()) throw std::domain_error("pseudo-remainder by zero");
  IntPolynomial r = x;
  const int dy = y.degree();
  while (!r.is_zero() && r.degree() >= dy) {
    IntPolynomial shift = IntPolynomial::monomial(r.leading(), r.degree() - dy);
    r = y.leading() * r - shift * y;
  }
  return r;
}

IntPolynomial gcd(const IntPolynomial& x, const IntPolynomial& y) {
  if (x.is_zero()) return !y.is_zero() && y.leading() < 0 ? -y : y;
  if (y.is_zero()) return x.leading() < 0 ? -x : x;
  BigInt c = boost::multiprecision::gcd(x.content(), y.content());
  IntPolynomial a = x.primitive_part(), b = y.primitive_part();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPolynomial r = pseudo_remainder(a, b);
    a = std::move(b);
    b = r.primitive_part();
  }
  return c * a.primitive_part();
}

}  // namespace conjlang
