#pragma once

#include "conjlang/langkit/group_oracle.hpp"

namespace conjlang {

/// Letters a, A, b, B, ... for rank k (k ≤ 26), in that order.
Alphabet rank_alphabet(int k);

/// Free group of rank k; elements are freely reduced letter sequences.
class FreeGroupOracle : public GroupOracle {
 public:
  explicit FreeGroupOracle(int rank);

  std::string name() const override { return "free:" + std::to_string(rank_); }
  Element identity() const override { return {}; }
  Element generator(Letter x) const override { return {static_cast<std::int64_t>(x)}; }
  Element multiply(const Element& g, const Element& h) const override;
  Element inverse(const Element& g) const override;
  Element right_multiply(const Element& g, Letter x) const override;
  /// Cyclic reduction followed by the least rotation.
  std::optional<Element> conj_key(const Element& g) const override;
  bool exact_conjugacy() const override { return true; }
  std::string describe(const Element& g) const override;

 private:
  int rank_;
};

/// Z^k with the standard generators; elements are exponent vectors.
class FreeAbelianOracle : public GroupOracle {
 public:
  explicit FreeAbelianOracle(int rank);

  std::string name() const override { return "free_abelian:" + std::to_string(rank_); }
  Element identity() const override { return Element(rank_, 0); }
  Element generator(Letter x) const override;
  Element multiply(const Element& g, const Element& h) const override;
  Element inverse(const Element& g) const override;
  std::optional<Element> conj_key(const Element& g) const override { return g; }
  bool exact_conjugacy() const override { return true; }

 private:
  int rank_;
};

/// Z ⋊ Z/2 = ⟨x, s | s², sxs = x⁻¹⟩ over {x, X, s}; elements x^k s^e as {k, e}.
class InfiniteDihedralOracle : public GroupOracle {
 public:
  InfiniteDihedralOracle();

  std::string name() const override { return "inf_dihedral"; }
  Element identity() const override { return {0, 0}; }
  Element generator(Letter x) const override;
  Element multiply(const Element& g, const Element& h) const override;
  Element inverse(const Element& g) const override;
  /// x^k ↦ |k|; reflections ↦ parity of k.
  std::optional<Element> conj_key(const Element& g) const override;
  bool exact_conjugacy() const override { return true; }
  std::string describe(const Element& g) const override;
};

}  // namespace conjlang
