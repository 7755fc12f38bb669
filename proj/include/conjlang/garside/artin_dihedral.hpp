#pragma once

#include <vector>

#include "conjlang/fsa/alphabet.hpp"

namespace conjlang {

/// Standard generators of a dihedral Artin group: a < A < b < B, the same
/// letters as atom_alphabet(DihedralModel(m)).
Alphabet dihedral_alphabet();

struct MmProfile {
  int p = 0;  // longest positive alternating factor, capped at m
  int n = 0;  // longest negative alternating factor, capped at m
  bool freely_reduced = true;
};
MmProfile mm_profile(int m, const Word& w);

/// Geodesic test over {a, b}±: w is freely reduced and p(w) + n(w) ≤ m.
bool mm_geodesic(int m, const Word& w);
/// For a geodesic w: true iff its element has more than one geodesic
/// word, i.e. p(w) + n(w) = m.
bool mm_multiple_geodesics(int m, const Word& w);

/// Applies a ↔ b, A ↔ B for odd m; identity for even m (Δ central).
Word delta_twist(int m, const Word& w);

/// True iff w is a product of a² and b² (every maximal run has even length).
bool is_square_word(const Word& w);

/// Rotations of w and of delta_twist(m, w), sorted shortlex and
/// deduplicated. Throws std::invalid_argument unless is_square_word(w).
std::vector<Word> equal_length_class(int m, const Word& w);

struct ConjSlMembership {
  bool member = false;
  /// False when mm ≤ 2 or nn ≤ 2, outside the range the class result covers.
  bool in_range = true;
  Word word;            // a^{2mm} b² a^{2nn} b²
  Word representative;  // shortlex least word of equal_length_class(word)
};
ConjSlMembership dihedral_conjsl_member(int m, int mm, int nn);

}  // namespace conjlang
