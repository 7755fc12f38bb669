#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace conjlang {

using BigInt = boost::multiprecision::cpp_int;

/// Polynomial in z with integer coefficients, lowest degree first.
/// Trailing zeros are trimmed; the zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(std::vector<BigInt> coeffs);
  IntPolynomial(long long constant);

  static IntPolynomial monomial(BigInt c, std::size_t degree);

  const std::vector<BigInt>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  BigInt coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }
  const BigInt& leading() const { return c_.back(); }

  /// gcd of the coefficients, nonnegative; 0 for the zero polynomial.
  BigInt content() const;
  IntPolynomial primitive_part() const;

  IntPolynomial operator-() const;
  friend IntPolynomial operator+(const IntPolynomial& x, const IntPolynomial& y);
  friend IntPolynomial operator-(const IntPolynomial& x, const IntPolynomial& y);
  friend IntPolynomial operator*(const IntPolynomial& x, const IntPolynomial& y);
  friend IntPolynomial operator*(const BigInt& s, const IntPolynomial& x);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// Exact quotient; throws std::domain_error if y does not divide x in Z[z].
  friend IntPolynomial divide_exact(const IntPolynomial& x, const IntPolynomial& y);
  /// Divides every coefficient by s, which must divide each exactly.
  IntPolynomial divide_exact(const BigInt& s) const;

  /// Comma-separated coefficients, "0" for the zero polynomial.
  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> c_;
};

/// Pseudo-remainder of x by y (y nonzero).
IntPolynomial pseudo_remainder(const IntPolynomial& x, const IntPolynomial& y);

/// Greatest common divisor in Z[z], positive leading coefficient.
IntPolynomial gcd(const IntPolynomial& x, const IntPolynomial& y);

}  // namespace conjlang
