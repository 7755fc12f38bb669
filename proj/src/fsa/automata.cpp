#include "conjlang/fsa/automata.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace conjlang {

Nfa::Nfa(Alphabet alphabet, std::size_t states) : alphabet_(std::move(alphabet)), state_count_(states) {}

State Nfa::add_state() { return static_cast<State>(state_count_++); }

void Nfa::check_state(State q) const {
  if (q >= state_count_) throw std::out_of_range("nfa state " + std::to_string(q) + " out of range");
}

void Nfa::add_start(State q) {
  check_state(q);
  starts_.push_back(q);
}

void Nfa::add_accept(State q) {
  check_state(q);
  accepts_.push_back(q);
}

void Nfa::add_edge(State from, Letter x, State to) {
  check_state(from);
  check_state(to);
  if (x >= alphabet_.size()) throw std::out_of_range("nfa letter out of range");
  edges_.push_back({from, x, to});
}

void Nfa::add_epsilon(State from, State to) {
  check_state(from);
  check_state(to);
  epsilons_.emplace_back(from, to);
}

State Nfa::embed(const Nfa& other) {
  if (!(other.alphabet_ == alphabet_)) throw std::invalid_argument("alphabet mismatch");
  auto offset = static_cast<State>(state_count_);
  state_count_ += other.state_count_;
  for (const auto& e : other.edges_) edges_.push_back({e.from + offset, e.letter, e.to + offset});
  for (const auto& [p, q] : other.epsilons_) epsilons_.emplace_back(p + offset, q + offset);
  return offset;
}

Dfa::Dfa(Alphabet alphabet, std::size_t states, State start, std::vector<bool> accept,
         std::vector<State> delta)
    : alphabet_(std::move(alphabet)),
      state_count_(states),
      start_(start),
      accept_(std::move(accept)),
      delta_(std::move(delta)) {
  if (states == 0) throw std::invalid_argument("dfa needs at least one state");
  if (start >= states) throw std::invalid_argument("dfa start out of range");
  if (accept_.size() != states) throw std::invalid_argument("dfa accept vector size mismatch");
  if (delta_.size() != states * alphabet_.size()) throw std::invalid_argument("dfa transition table is not total");
  for (State q : delta_)
    if (q >= states) throw std::invalid_argument("dfa transition target out of range");
}

Dfa Dfa::empty_language(const Alphabet& a) {
  return Dfa(a, 1, 0, {false}, std::vector<State>(a.size(), 0));
}

Dfa Dfa::universal(const Alphabet& a) {
  return Dfa(a, 1, 0, {true}, std::vector<State>(a.size(), 0));
}

Dfa Dfa::from_words(const Alphabet& a, const std::vector<Word>& words) {
  const std::size_t k = a.size();
  // State 0 is dead, state 1 is the root.
  std::vector<State> delta(2 * k, 0);
  std::vector<bool> accept{false, false};
  for (const auto& w : words) {
    State q = 1;
    for (Letter x : w) {
      if (x >= k) throw std::out_of_range("word letter out of range");
      State& next = delta[q * k + x];
      if (next == 0) {
        next = static_cast<State>(accept.size());
        accept.push_back(false);
        delta.resize(delta.size() + k, 0);
      }
      q = delta[q * k + x];
    }
    accept[q] = true;
  }
  std::size_t n = accept.size();
  return Dfa(a, n, 1, std::move(accept), std::move(delta));
}

Dfa Dfa::length_range(const Alphabet& a, int lo, int hi) {
  const std::size_t k = a.size();
  if (lo < 0) lo = 0;
  if (hi >= 0 && hi < lo) return empty_language(a);
  // States 0..top count letters read (saturating at top); extra dead state if bounded.
  int top = hi >= 0 ? hi + 1 : lo;
  std::size_t n = static_cast<std::size_t>(top) + 1;
  std::vector<bool> accept(n, false);
  std::vector<State> delta(n * k);
  for (int i = 0; i <= top; ++i) {
    bool ok = i >= lo && (hi < 0 || i <= hi);
    accept[static_cast<std::size_t>(i)] = ok;
    State nxt = static_cast<State>(i < top ? i + 1 : top);
    for (std::size_t x = 0; x < k; ++x) delta[static_cast<std::size_t>(i) * k + x] = nxt;
  }
  return Dfa(a, n, 0, std::move(accept), std::move(delta));
}

State Dfa::run(State q, const Word& w) const {
  for (Letter x : w) q = next(q, x);
  return q;
}

Nfa Dfa::to_nfa() const {
  Nfa n(alphabet_, state_count_);
  n.add_start(start_);
  for (State q = 0; q < state_count_; ++q) {
    if (accept_[q]) n.add_accept(q);
    for (Letter x = 0; x < alphabet_.size(); ++x) n.add_edge(q, x, next(q, x));
  }
  return n;
}

}  // namespace conjlang
