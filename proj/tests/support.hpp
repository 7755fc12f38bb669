#pragma once

// Small helpers shared by the test programs: random machines and
// brute-force word enumeration that do not go through the library's own
// enumeration code.

#include <random>
#include <set>
#include <vector>

#include "conjlang/fsa/automata.hpp"

namespace testing_support {

using conjlang::Alphabet;
using conjlang::Dfa;
using conjlang::Letter;
using conjlang::State;
using conjlang::Word;

inline Dfa random_dfa(const Alphabet& a, std::size_t states, std::mt19937& rng, double accept_p = 0.4) {
  std::uniform_int_distribution<State> pick(0, static_cast<State>(states - 1));
  std::bernoulli_distribution acc(accept_p);
  std::vector<bool> accept(states);
  for (std::size_t q = 0; q < states; ++q) accept[q] = acc(rng);
  std::vector<State> delta(states * a.size());
  for (auto& t : delta) t = pick(rng);
  return Dfa(a, states, 0, accept, delta);
}

/// Every word of length exactly n, in lexicographic order.
inline std::vector<Word> all_words(std::size_t k, int n) {
  std::vector<Word> out{Word{}};
  for (int len = 0; len < n; ++len) {
    std::vector<Word> next;
    next.reserve(out.size() * k);
    for (const auto& w : out)
      for (Letter x = 0; x < k; ++x) {
        Word v = w;
        v.push_back(x);
        next.push_back(std::move(v));
      }
    out = std::move(next);
  }
  return out;
}

/// Members of L(d) up to length n, by running the machine on every word.
inline std::set<Word> brute_language(const Dfa& d, int n) {
  std::set<Word> out;
  for (int len = 0; len <= n; ++len)
    for (const auto& w : all_words(d.alphabet().size(), len))
      if (d.accepting(d.run(d.start(), w))) out.insert(w);
  return out;
}

inline std::set<Word> flatten(const std::vector<std::vector<Word>>& groups) {
  std::set<Word> out;
  for (const auto& g : groups) out.insert(g.begin(), g.end());
  return out;
}

}  // namespace testing_support
