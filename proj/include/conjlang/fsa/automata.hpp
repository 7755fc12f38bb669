#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "conjlang/fsa/alphabet.hpp"

namespace conjlang {

using State = std::uint32_t;

/// Nondeterministic acceptor with epsilon moves.
class Nfa {
 public:
  struct Edge {
    State from;
    Letter letter;
    State to;
    friend bool operator==(const Edge&, const Edge&) = default;
  };

  Nfa() = default;
  Nfa(Alphabet alphabet, std::size_t states);

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t state_count() const { return state_count_; }

  State add_state();
  void add_start(State q);
  void add_accept(State q);
  void add_edge(State from, Letter x, State to);
  void add_epsilon(State from, State to);

  const std::vector<State>& starts() const { return starts_; }
  const std::vector<State>& accepts() const { return accepts_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::pair<State, State>>& epsilons() const { return epsilons_; }

  /// Appends a disjoint copy of `other` (same alphabet); returns the offset
  /// applied to its state numbers. Start/accept sets are not copied.
  State embed(const Nfa& other);

 private:
  void check_state(State q) const;

  Alphabet alphabet_;
  std::size_t state_count_ = 0;
  std::vector<State> starts_;
  std::vector<State> accepts_;
  std::vector<Edge> edges_;
  std::vector<std::pair<State, State>> epsilons_;
};

/// Complete deterministic acceptor. Every (state, letter) pair has a
/// successor; a dead state is allowed.
class Dfa {
 public:
  Dfa() = default;
  Dfa(Alphabet alphabet, std::size_t states, State start, std::vector<bool> accept,
      std::vector<State> delta);

  /// Single dead state: accepts nothing.
  static Dfa empty_language(const Alphabet& a);
  /// Single accepting state looping on every letter.
  static Dfa universal(const Alphabet& a);
  /// Trie-shaped machine for a finite set of words.
  static Dfa from_words(const Alphabet& a, const std::vector<Word>& words);
  /// Words of length in [lo, hi] (hi < 0: no upper bound).
  static Dfa length_range(const Alphabet& a, int lo, int hi);

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t state_count() const { return state_count_; }
  State start() const { return start_; }
  bool accepting(State q) const { return accept_[q]; }
  const std::vector<bool>& accept_flags() const { return accept_; }
  State next(State q, Letter x) const { return delta_[q * alphabet_.size() + x]; }
  const std::vector<State>& table() const { return delta_; }

  State run(State q, const Word& w) const;

  /// Equivalent Nfa (no epsilon moves).
  Nfa to_nfa() const;

  friend bool operator==(const Dfa&, const Dfa&) = default;

 private:
  Alphabet alphabet_;
  std::size_t state_count_ = 0;
  State start_ = 0;
  std::vector<bool> accept_;
  std::vector<State> delta_;
};

}  // namespace conjlang
