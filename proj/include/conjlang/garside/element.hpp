#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "conjlang/fsa/alphabet.hpp"
#include "conjlang/garside/model.hpp"

namespace conjlang {

/// Δ^p a₁⋯a_k in left greedy normal form: every a_i ∉ {1, Δ} and each
/// pair a_i a_{i+1} is left-weighted.
struct GarsideElement {
  std::int64_t p = 0;
  std::vector<Simple> factors;

  friend bool operator==(const GarsideElement&, const GarsideElement&) = default;
  friend auto operator<=>(const GarsideElement&, const GarsideElement&) = default;
};

/// Letters 2i and 2i+1 are atom i and its inverse.
Alphabet atom_alphabet(const GarsideModel& m);

GarsideElement simple_element(const GarsideModel& m, Simple s);
GarsideElement delta_power(std::int64_t p);

GarsideElement compose(const GarsideModel& m, const GarsideElement& x, const GarsideElement& y);
GarsideElement invert(const GarsideModel& m, const GarsideElement& x);
/// Normal form of a word over atom_alphabet(m).
GarsideElement normalize(const GarsideModel& m, const Word& w);
/// Parses with atom_alphabet(m) and normalizes.
GarsideElement normalize(const GarsideModel& m, const std::string& text);

struct InfSupLength {
  std::int64_t inf = 0;
  std::int64_t sup = 0;
  /// Geodesic length over the simples and their inverses.
  std::int64_t length = 0;
  friend bool operator==(const InfSupLength&, const InfSupLength&) = default;
};
InfSupLength inf_sup_len(const GarsideElement& x);

enum class CycleDirection { cycling, decycling };

/// Cycling (conjugation by τ^{-p}(a₁)) or decycling (by a_k⁻¹), renormalized.
/// nullopt when x is a power of Δ.
std::optional<GarsideElement> cycle(const GarsideModel& m, const GarsideElement& x, CycleDirection d);
/// The element h with h⁻¹ x h = cycle(m, x, d).
std::optional<GarsideElement> cycle_conjugator(const GarsideModel& m, const GarsideElement& x, CycleDirection d);

struct ShortenResult {
  bool shortened = false;
  GarsideElement result;      // shorter conjugate, or x itself when stable
  GarsideElement conjugator;  // h with h⁻¹ x h = result
  CycleDirection direction = CycleDirection::cycling;
  int steps = 0;
};

/// Up to K cyclings, then up to K decyclings, stopping at the first
/// conjugate of smaller length.
ShortenResult conj_shorten(const GarsideModel& m, const GarsideElement& x, int K);

/// `D^p | s1 . s2 . ... . sk` (just `D^p |` when k = 0).
std::string format_nf(const GarsideModel& m, const GarsideElement& x);

/// A letter of S ∪ S⁻¹ (identity excluded).
struct GarsideLetter {
  Simple simple = 0;
  bool inverse = false;
  friend bool operator==(const GarsideLetter&, const GarsideLetter&) = default;
};

/// Inverses first by increasing degree, then positives by decreasing
/// degree; ties by encoding. Proper divisors have smaller degree, so the
/// order puts t before s when s left-divides t and s⁻¹ before t⁻¹ when s
/// right-divides t.
std::vector<GarsideLetter> garside_sl_order(const GarsideModel& m);
/// Alphabet over S ∪ S⁻¹ in garside_sl_order; inverse letters are named
/// name + "^-1".
Alphabet simples_alphabet(const GarsideModel& m);

struct FractionForm {
  std::vector<Simple> u;  // left greedy, may contain Δ
  std::vector<Simple> v;
};
/// x = u⁻¹v with u ∧ v = 1.
FractionForm garside_fraction(const GarsideModel& m, const GarsideElement& x);
/// The word u⁻¹v over simples_alphabet(m).
Word garside_sl_nf(const GarsideModel& m, const GarsideElement& x);

}  // namespace conjlang
