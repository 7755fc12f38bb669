#pragma once

#include <cstdint>
#include <string>

#include "conjlang/langkit/group_oracle.hpp"

namespace conjlang {

/// Element of D8 = ⟨r, s | r⁴, s², (rs)²⟩ written r^rot s^flip.
/// t = s and u = rs; the element acts on Z² by swapping the coordinates
/// exactly when rot + flip is odd.
struct D8 {
  int rot = 0;
  int flip = 0;

  static D8 t() { return {0, 1}; }
  static D8 u() { return {1, 1}; }
  D8 operator*(const D8& o) const { return {((flip ? rot - o.rot : rot + o.rot) % 4 + 4) % 4, flip ^ o.flip}; }
  D8 inverse() const { return flip ? *this : D8{(4 - rot) % 4, 0}; }
  bool swaps() const { return ((rot + flip) & 1) != 0; }
  friend bool operator==(const D8&, const D8&) = default;
  /// Shortest word in t, u ("", "t", "u", "tu", "ut", "tut", "utu", "tutu").
  std::string name() const;
};

/// Z² ⋊ F for F = ⟨t⟩ ≅ Z/2 or F = ⟨t, u⟩ ≅ D8, elements a^i b^j h with
/// b = tat. Encoded as {i, j, rot, flip}.
class SemidirectOracle : public GroupOracle {
 public:
  enum class Spec { zd2_Z, zd2_X, zd8_Zp, zd8_Xp };

  explicit SemidirectOracle(Spec spec);

  std::string name() const override;
  Element identity() const override { return {0, 0, 0, 0}; }
  Element generator(Letter x) const override { return generators_[x]; }
  Element multiply(const Element& g, const Element& h) const override;
  Element inverse(const Element& g) const override;
  Element right_multiply(const Element& g, Letter x) const override { return multiply(g, generators_[x]); }
  std::optional<Element> conj_key(const Element& g) const override;
  bool exact_conjugacy() const override { return true; }
  std::string describe(const Element& g) const override;

  Spec spec() const { return spec_; }
  static Element make(std::int64_t i, std::int64_t j, D8 h) { return {i, j, h.rot, h.flip}; }

 private:
  Spec spec_;
  std::vector<Element> generators_;
};

}  // namespace conjlang
