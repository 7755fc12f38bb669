#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace conjlang {

/// Index of a simple element (a divisor of Δ) in its model.
using Simple = std::uint32_t;

/// Tables for a homogeneous Garside structure: the simples, their partial
/// product, and everything derived from it (divisibility, meets,
/// complements, τ). Simple 0 is the identity.
class GarsideModel {
 public:
  virtual ~GarsideModel() = default;

  const std::string& name() const { return name_; }
  std::size_t size() const { return degree_.size(); }
  Simple identity() const { return 0; }
  Simple delta() const { return delta_; }

  /// Atoms in generator order; atom i is written atom_name(i).
  const std::vector<Simple>& atoms() const { return atoms_; }
  const std::string& atom_name(std::size_t i) const { return atom_names_[i]; }
  const std::string& atom_inverse_name(std::size_t i) const { return atom_inverse_names_[i]; }

  /// x·y when it is simple.
  std::optional<Simple> product(Simple x, Simple y) const;
  bool left_divides(Simple x, Simple y) const { return left_quotient_[x * size() + y] != none; }
  bool right_divides(Simple x, Simple y) const;
  /// Greatest common left divisor.
  Simple meet(Simple x, Simple y) const { return meet_[x * size() + y]; }
  /// x⁻¹y; requires x to left-divide y.
  Simple left_quotient(Simple x, Simple y) const { return left_quotient_[x * size() + y]; }
  /// The simple c with s·c = Δ.
  Simple complement(Simple s) const { return complement_[s]; }
  /// τ^k(s) = Δ^{-k} s Δ^k.
  Simple tau(Simple s, std::int64_t k = 1) const;
  int degree(Simple s) const { return degree_[s]; }

  /// "1" for the identity, "D" for Δ, otherwise the atom names of the
  /// lexicographically least atom word of s, concatenated.
  const std::string& simple_name(Simple s) const { return names_[s]; }
  std::optional<Simple> find_simple(const std::string& name) const;
  /// Lexicographically least atom word (atom indices) of s.
  const std::vector<std::size_t>& atom_word(Simple s) const { return atom_words_[s]; }

  /// Conjugator length bound for cycling/decycling.
  int conj_bound() const { return conj_bound_; }

 protected:
  struct Spec {
    std::string name;
    std::size_t count = 0;
    Simple delta = 0;
    std::vector<Simple> atoms;
    std::vector<std::string> atom_names;
    std::vector<std::string> atom_inverse_names;
    std::vector<int> degree;
    std::function<std::optional<Simple>(Simple, Simple)> product;
    int conj_bound = 0;
  };
  void build(Spec spec);

 private:
  static constexpr Simple none = ~Simple{0};

  std::string name_;
  Simple delta_ = 0;
  std::vector<Simple> atoms_;
  std::vector<std::string> atom_names_, atom_inverse_names_;
  std::vector<int> degree_;
  std::vector<Simple> product_, left_quotient_, meet_, complement_, tau_, tau_inverse_;
  int tau_order_ = 1;
  std::vector<std::string> names_;
  std::vector<std::vector<std::size_t>> atom_words_;
  int conj_bound_ = 0;
};

/// Positive permutation braids of B_n: simples are the n! permutations.
class BraidModel : public GarsideModel {
 public:
  explicit BraidModel(int strands);
  int strands() const { return n_; }
  const std::vector<int>& permutation(Simple s) const { return perms_[s]; }

 private:
  int n_;
  std::vector<std::vector<int>> perms_;
};

/// Dihedral Artin group ⟨a, b | _m(a,b) = _m(b,a)⟩: simples are 1, Δ and
/// the alternating words of length 1..m−1 starting with a or b.
class DihedralModel : public GarsideModel {
 public:
  explicit DihedralModel(int m);
  int m() const { return m_; }

 private:
  int m_;
};

}  // namespace conjlang
