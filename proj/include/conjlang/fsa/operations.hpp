#pragma once

#include <optional>
#include <vector>

#include "conjlang/fsa/automata.hpp"
#include "conjlang/fsa/regex.hpp"

namespace conjlang {

/// Subset construction after epsilon closure. The result is total; the
/// empty subset becomes the dead state.
Dfa determinize(const Nfa& n);

/// Removes unreachable states, merges equivalent states by partition
/// refinement and renumbers in breadth-first order from the start state
/// (letters in alphabet order). Two machines accept the same language iff
/// their minimizations compare equal.
Dfa minimize(const Dfa& d);

/// minimize(determinize(n)).
Dfa to_dfa(const Nfa& n);
Dfa to_dfa(const Regex& r, const Alphabet& a);

enum class BoolOp { union_of, intersection, difference };

/// Product construction, minimized. Throws std::invalid_argument when the
/// alphabets differ.
Dfa boolean_op(const Dfa& x, const Dfa& y, BoolOp mode);
Dfa complement(const Dfa& x);

inline Dfa union_of(const Dfa& x, const Dfa& y) { return boolean_op(x, y, BoolOp::union_of); }
inline Dfa intersection(const Dfa& x, const Dfa& y) { return boolean_op(x, y, BoolOp::intersection); }
inline Dfa difference(const Dfa& x, const Dfa& y) { return boolean_op(x, y, BoolOp::difference); }
Dfa union_all(const Alphabet& a, const std::vector<Dfa>& parts);

/// Words of L(d) whose length lies in [lo, hi] (hi < 0: unbounded).
Dfa restrict_length(const Dfa& d, int lo, int hi);

/// All cyclic permutations of words of L(d). For each state q the machine
/// holds two copies of d: copy 1 starts at q, its accepting states have
/// epsilon moves to the start state of copy 2, and q in copy 2 accepts.
/// The result is the union of these machines over all useful q.
Nfa cyclic_closure(const Dfa& d);

/// {z'wz'' : z'z'' in L(l1), w in L(l2)}.
Nfa insertion(const Dfa& l1, const Dfa& l2);

/// Concatenation L(x)L(y).
Nfa concatenation(const Dfa& x, const Dfa& y);

enum class Side { left, right };

/// Left: {v : wv in L}. Right: {v : vw in L}.
Dfa quotient(const Dfa& d, const Word& w, Side side);

bool accepts(const Dfa& d, const Word& w);

/// L(d) ∩ Σ^{≤n}, grouped by length; each group in lexicographic order of
/// the alphabet order.
std::vector<std::vector<Word>> enumerate(const Dfa& d, int n);

struct Equivalence {
  bool equal = true;
  /// Shortlex-least word of the symmetric difference when not equal.
  std::optional<Word> counterexample;
};

Equivalence equivalent(const Dfa& x, const Dfa& y);

/// Words containing none of `forbidden` as a scattered subword.
Dfa piecewise_excluding(const Alphabet& a, const std::vector<Word>& forbidden);

/// States reachable from the start that can still reach an accepting state.
std::vector<bool> useful_states(const Dfa& d);

}  // namespace conjlang
