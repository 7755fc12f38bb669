#pragma once

#include <string>
#include <vector>

#include "conjlang/fsa/automata.hpp"
#include "conjlang/series/polynomial.hpp"

namespace conjlang {

/// num/den in lowest terms: no common factor in Z[z], the pair of
/// coefficient lists has content 1 and den(0) > 0.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  /// Normalizes; throws std::domain_error when den(0) == 0 after reduction.
  RationalFunction(IntPolynomial num, IntPolynomial den);

  const IntPolynomial& num() const { return num_; }
  const IntPolynomial& den() const { return den_; }

  friend RationalFunction operator+(const RationalFunction& x, const RationalFunction& y);
  friend RationalFunction operator*(const RationalFunction& x, const RationalFunction& y);
  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

  /// "num: c0,c1,... ; den: c0,c1,..."
  std::string to_string() const;
  static RationalFunction parse(const std::string& text);

 private:
  IntPolynomial num_;
  IntPolynomial den_;
};

/// Entry i is |L(d) ∩ Σ^i| for 0 <= i <= n, by path counting.
std::vector<BigInt> count_by_length(const Dfa& d, int n);

/// Strict growth series of L(d), from the fraction-free solution of
/// (I - zA) f = accept over the live states.
RationalFunction rational_series(const Dfa& d);

/// Taylor coefficients 0..n. Throws std::domain_error if den(0) == 0 or the
/// coefficients are not integers.
std::vector<BigInt> expand(const RationalFunction& r, int n);

/// Cross-multiplication identity.
bool eq_rational(const RationalFunction& x, const RationalFunction& y);

/// Lines "n<TAB>count".
std::string counts_tsv(const std::vector<BigInt>& counts);

}  // namespace conjlang
