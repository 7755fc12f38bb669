#include "conjlang/fsa/operations.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace conjlang {

namespace {

struct VectorHash {
  std::size_t operator()(const std::vector<State>& v) const noexcept {
    std::size_t h = v.size();
    for (State s : v) h ^= s + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

void require_same_alphabet(const Dfa& x, const Dfa& y) {
  if (!(x.alphabet() == y.alphabet())) throw std::invalid_argument("alphabet mismatch");
}

}  // namespace

Dfa determinize(const Nfa& n) {
  const std::size_t k = n.alphabet().size();
  const std::size_t ns = n.state_count();
  std::vector<std::vector<State>> eps(ns);
  for (const auto& [p, q] : n.epsilons()) eps[p].push_back(q);
  std::vector<std::vector<std::vector<State>>> moves(ns, std::vector<std::vector<State>>(k));
  for (const auto& e : n.edges()) moves[e.from][e.letter].push_back(e.to);
  std::vector<bool> is_accept(ns, false);
  for (State q : n.accepts()) is_accept[q] = true;

  std::vector<char> mark(ns, 0);
  auto closure = [&](std::vector<State> seed) {
    std::vector<State> stack = seed;
    std::vector<State> out;
    for (State q : seed) mark[q] = 1;
    while (!stack.empty()) {
      State q = stack.back();
      stack.pop_back();
      out.push_back(q);
      for (State r : eps[q])
        if (!mark[r]) {
          mark[r] = 1;
          stack.push_back(r);
        }
    }
    for (State q : out) mark[q] = 0;
    std::sort(out.begin(), out.end());
    return out;
  };

  std::unordered_map<std::vector<State>, State, VectorHash> ids;
  std::vector<std::vector<State>> subsets;
  std::vector<State> delta;
  auto intern = [&](std::vector<State> s) {
    auto it = ids.find(s);
    if (it != ids.end()) return it->second;
    auto id = static_cast<State>(subsets.size());
    ids.emplace(s, id);
    subsets.push_back(std::move(s));
    return id;
  };

  std::vector<State> seed(n.starts().begin(), n.starts().end());
  std::sort(seed.begin(), seed.end());
  seed.erase(std::unique(seed.begin(), seed.end()), seed.end());
  intern(closure(seed));
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    for (std::size_t x = 0; x < k; ++x) {
      std::vector<State> target;
      for (State q : subsets[i])
        for (State r : moves[q][x])
          if (!mark[r]) {
            mark[r] = 1;
            target.push_back(r);
          }
      for (State r : target) mark[r] = 0;
      State id = intern(closure(std::move(target)));
      delta.push_back(id);
    }
  }
  std::vector<bool> accept(subsets.size(), false);
  for (std::size_t i = 0; i < subsets.size(); ++i)
    accept[i] = std::any_of(subsets[i].begin(), subsets[i].end(), [&](State q) { return is_accept[q]; });
  return Dfa(n.alphabet(), subsets.size(), 0, std::move(accept), std::move(delta));
}

Dfa minimize(const Dfa& d) {
  const std::size_t k = d.alphabet().size();
  // Reachable states in breadth-first order.
  std::vector<State> order;
  std::vector<int> seen(d.state_count(), -1);
  order.push_back(d.start());
  seen[d.start()] = 0;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t x = 0; x < k; ++x) {
      State r = d.next(order[i], static_cast<Letter>(x));
      if (seen[r] < 0) {
        seen[r] = static_cast<int>(order.size());
        order.push_back(r);
      }
    }
  const std::size_t n = order.size();

  // Moore refinement over the reachable part.
  std::vector<State> cls(n);
  for (std::size_t i = 0; i < n; ++i) cls[i] = d.accepting(order[i]) ? 1 : 0;
  std::size_t classes = 0;
  {
    bool any_acc = false, any_rej = false;
    for (std::size_t i = 0; i < n; ++i) (cls[i] ? any_acc : any_rej) = true;
    classes = (any_acc ? 1 : 0) + (any_rej ? 1 : 0);
  }
  while (true) {
    std::unordered_map<std::vector<State>, State, VectorHash> sig_ids;
    std::vector<State> next_cls(n);
    std::vector<State> sig(k + 1);
    for (std::size_t i = 0; i < n; ++i) {
      sig[0] = cls[i];
      for (std::size_t x = 0; x < k; ++x)
        sig[x + 1] = cls[static_cast<std::size_t>(seen[d.next(order[i], static_cast<Letter>(x))])];
      auto it = sig_ids.find(sig);
      if (it == sig_ids.end()) it = sig_ids.emplace(sig, static_cast<State>(sig_ids.size())).first;
      next_cls[i] = it->second;
    }
    std::size_t count = sig_ids.size();
    cls = std::move(next_cls);
    if (count == classes) break;
    classes = count;
  }

  // Renumber classes breadth-first from the start class.
  std::vector<std::size_t> rep(classes, n);
  for (std::size_t i = 0; i < n; ++i)
    if (rep[cls[i]] == n) rep[cls[i]] = i;
  std::vector<int> id(classes, -1);
  std::vector<State> bfs{cls[0]};
  id[cls[0]] = 0;
  for (std::size_t i = 0; i < bfs.size(); ++i)
    for (std::size_t x = 0; x < k; ++x) {
      State c = cls[static_cast<std::size_t>(seen[d.next(order[rep[bfs[i]]], static_cast<Letter>(x))])];
      if (id[c] < 0) {
        id[c] = static_cast<int>(bfs.size());
        bfs.push_back(c);
      }
    }
  std::vector<bool> accept(classes);
  std::vector<State> delta(classes * k);
  for (std::size_t j = 0; j < classes; ++j) {
    State src = order[rep[bfs[j]]];
    accept[j] = d.accepting(src);
    for (std::size_t x = 0; x < k; ++x) {
      State c = cls[static_cast<std::size_t>(seen[d.next(src, static_cast<Letter>(x))])];
      delta[j * k + x] = static_cast<State>(id[c]);
    }
  }
  return Dfa(d.alphabet(), classes, 0, std::move(accept), std::move(delta));
}

Dfa to_dfa(const Nfa& n) { return minimize(determinize(n)); }

Dfa to_dfa(const Regex& r, const Alphabet& a) { return to_dfa(compile_regex(r, a)); }

Dfa boolean_op(const Dfa& x, const Dfa& y, BoolOp mode) {
  require_same_alphabet(x, y);
  const std::size_t k = x.alphabet().size();
  std::map<std::pair<State, State>, State> ids;
  std::vector<std::pair<State, State>> pairs;
  std::vector<State> delta;
  auto intern = [&](State p, State q) {
    auto [it, fresh] = ids.emplace(std::make_pair(p, q), static_cast<State>(pairs.size()));
    if (fresh) pairs.emplace_back(p, q);
    return it->second;
  };
  intern(x.start(), y.start());
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t a = 0; a < k; ++a) {
      auto [p, q] = pairs[i];
      delta.push_back(intern(x.next(p, static_cast<Letter>(a)), y.next(q, static_cast<Letter>(a))));
    }
  std::vector<bool> accept(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    bool a = x.accepting(pairs[i].first), b = y.accepting(pairs[i].second);
    switch (mode) {
      case BoolOp::union_of: accept[i] = a || b; break;
      case BoolOp::intersection: accept[i] = a && b; break;
      case BoolOp::difference: accept[i] = a && !b; break;
    }
  }
  return minimize(Dfa(x.alphabet(), pairs.size(), 0, std::move(accept), std::move(delta)));
}

Dfa complement(const Dfa& x) {
  std::vector<bool> accept(x.state_count());
  for (State q = 0; q < x.state_count(); ++q) accept[q] = !x.accepting(q);
  return minimize(Dfa(x.alphabet(), x.state_count(), x.start(), std::move(accept), x.table()));
}

Dfa union_all(const Alphabet& a, const std::vector<Dfa>& parts) {
  Dfa out = Dfa::empty_language(a);
  for (const auto& p : parts) out = union_of(out, p);
  return out;
}

Dfa restrict_length(const Dfa& d, int lo, int hi) {
  return intersection(d, Dfa::length_range(d.alphabet(), lo, hi));
}

std::vector<bool> useful_states(const Dfa& d) {
  const std::size_t n = d.state_count(), k = d.alphabet().size();
  std::vector<bool> reach(n, false), coreach(n, false);
  std::vector<State> stack{d.start()};
  reach[d.start()] = true;
  std::vector<std::vector<State>> rev(n);
  for (State q = 0; q < n; ++q)
    for (std::size_t x = 0; x < k; ++x) rev[d.next(q, static_cast<Letter>(x))].push_back(q);
  while (!stack.empty()) {
    State q = stack.back();
    stack.pop_back();
    for (std::size_t x = 0; x < k; ++x) {
      State r = d.next(q, static_cast<Letter>(x));
      if (!reach[r]) {
        reach[r] = true;
        stack.push_back(r);
      }
    }
  }
  for (State q = 0; q < n; ++q)
    if (d.accepting(q)) {
      coreach[q] = true;
      stack.push_back(q);
    }
  while (!stack.empty()) {
    State q = stack.back();
    stack.pop_back();
    for (State p : rev[q])
      if (!coreach[p]) {
        coreach[p] = true;
        stack.push_back(p);
      }
  }
  std::vector<bool> out(n);
  for (State q = 0; q < n; ++q) out[q] = reach[q] && coreach[q];
  return out;
}

Nfa cyclic_closure(const Dfa& d) {
  const std::size_t n = d.state_count(), k = d.alphabet().size();
  auto useful = useful_states(d);
  Nfa out(d.alphabet(), 0);
  for (State q = 0; q < n; ++q) {
    if (!useful[q]) continue;
    // copy 1 occupies [base, base+n), copy 2 occupies [base+n, base+2n).
    State base = static_cast<State>(out.state_count());
    for (std::size_t i = 0; i < 2 * n; ++i) out.add_state();
    for (State p = 0; p < n; ++p) {
      if (!useful[p]) continue;
      for (std::size_t x = 0; x < k; ++x) {
        State r = d.next(p, static_cast<Letter>(x));
        if (!useful[r]) continue;
        out.add_edge(base + p, static_cast<Letter>(x), base + r);
        out.add_edge(base + static_cast<State>(n) + p, static_cast<Letter>(x), base + static_cast<State>(n) + r);
      }
      if (d.accepting(p)) out.add_epsilon(base + p, base + static_cast<State>(n) + d.start());
    }
    out.add_start(base + q);
    out.add_accept(base + static_cast<State>(n) + q);
  }
  return out;
}

Nfa insertion(const Dfa& l1, const Dfa& l2) {
  require_same_alphabet(l1, l2);
  const std::size_t n1 = l1.state_count(), n2 = l2.state_count(), k = l1.alphabet().size();
  // Phase 0: l1 before the insertion point; phase 1: (p, s) reading w in l2
  // while l1 is parked at p; phase 2: l1 after the insertion.
  Nfa out(l1.alphabet(), n1 + n1 * n2 + n1);
  auto phase1 = [&](State p, State s) { return static_cast<State>(n1 + p * n2 + s); };
  auto phase2 = [&](State p) { return static_cast<State>(n1 + n1 * n2 + p); };
  for (State p = 0; p < n1; ++p) {
    for (std::size_t x = 0; x < k; ++x) {
      State r = l1.next(p, static_cast<Letter>(x));
      out.add_edge(p, static_cast<Letter>(x), r);
      out.add_edge(phase2(p), static_cast<Letter>(x), phase2(r));
    }
    out.add_epsilon(p, phase1(p, l2.start()));
    for (State s = 0; s < n2; ++s) {
      for (std::size_t x = 0; x < k; ++x)
        out.add_edge(phase1(p, s), static_cast<Letter>(x), phase1(p, l2.next(s, static_cast<Letter>(x))));
      if (l2.accepting(s)) out.add_epsilon(phase1(p, s), phase2(p));
    }
    if (l1.accepting(p)) out.add_accept(phase2(p));
  }
  out.add_start(l1.start());
  return out;
}

Nfa concatenation(const Dfa& x, const Dfa& y) {
  require_same_alphabet(x, y);
  const std::size_t k = x.alphabet().size();
  const auto off = static_cast<State>(x.state_count());
  Nfa out(x.alphabet(), x.state_count() + y.state_count());
  for (State q = 0; q < x.state_count(); ++q) {
    for (std::size_t a = 0; a < k; ++a) out.add_edge(q, static_cast<Letter>(a), x.next(q, static_cast<Letter>(a)));
    if (x.accepting(q)) out.add_epsilon(q, off + y.start());
  }
  for (State q = 0; q < y.state_count(); ++q) {
    for (std::size_t a = 0; a < k; ++a)
      out.add_edge(off + q, static_cast<Letter>(a), off + y.next(q, static_cast<Letter>(a)));
    if (y.accepting(q)) out.add_accept(off + q);
  }
  out.add_start(x.start());
  return out;
}

Dfa quotient(const Dfa& d, const Word& w, Side side) {
  if (side == Side::left) {
    return minimize(Dfa(d.alphabet(), d.state_count(), d.run(d.start(), w), d.accept_flags(), d.table()));
  }
  std::vector<bool> accept(d.state_count());
  for (State q = 0; q < d.state_count(); ++q) accept[q] = d.accepting(d.run(q, w));
  return minimize(Dfa(d.alphabet(), d.state_count(), d.start(), std::move(accept), d.table()));
}

bool accepts(const Dfa& d, const Word& w) {
  for (Letter x : w)
    if (x >= d.alphabet().size()) return false;
  return d.accepting(d.run(d.start(), w));
}

std::vector<std::vector<Word>> enumerate(const Dfa& d, int n) {
  std::vector<std::vector<Word>> groups(static_cast<std::size_t>(std::max(n, -1) + 1));
  if (n < 0) return groups;
  const std::size_t k = d.alphabet().size(), ns = d.state_count();
  // dist[q]: length of a shortest path from q to an accepting state.
  const int inf = 1 << 30;
  std::vector<int> dist(ns, inf);
  std::vector<std::vector<State>> rev(ns);
  for (State q = 0; q < ns; ++q)
    for (std::size_t x = 0; x < k; ++x) rev[d.next(q, static_cast<Letter>(x))].push_back(q);
  std::deque<State> queue;
  for (State q = 0; q < ns; ++q)
    if (d.accepting(q)) {
      dist[q] = 0;
      queue.push_back(q);
    }
  while (!queue.empty()) {
    State q = queue.front();
    queue.pop_front();
    for (State p : rev[q])
      if (dist[p] == inf) {
        dist[p] = dist[q] + 1;
        queue.push_back(p);
      }
  }
  Word w;
  // Preorder over the trie in letter order yields every length group sorted.
  auto dfs = [&](auto&& self, State q) -> void {
    if (d.accepting(q)) groups[w.size()].push_back(w);
    if (static_cast<int>(w.size()) == n) return;
    for (std::size_t x = 0; x < k; ++x) {
      State r = d.next(q, static_cast<Letter>(x));
      if (dist[r] == inf || dist[r] + static_cast<int>(w.size()) + 1 > n) continue;
      w.push_back(static_cast<Letter>(x));
      self(self, r);
      w.pop_back();
    }
  };
  if (dist[d.start()] <= n) dfs(dfs, d.start());
  return groups;
}

Equivalence equivalent(const Dfa& x, const Dfa& y) {
  require_same_alphabet(x, y);
  const std::size_t k = x.alphabet().size();
  std::map<std::pair<State, State>, std::pair<std::size_t, Letter>> parent;
  std::vector<std::pair<State, State>> queue{{x.start(), y.start()}};
  parent[{x.start(), y.start()}] = {static_cast<std::size_t>(-1), 0};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    auto [p, q] = queue[i];
    if (x.accepting(p) != y.accepting(q)) {
      Word w;
      std::size_t j = i;
      while (true) {
        auto [from, letter] = parent[queue[j]];
        if (from == static_cast<std::size_t>(-1)) break;
        w.push_back(letter);
        j = from;
      }
      std::reverse(w.begin(), w.end());
      return {false, w};
    }
    for (std::size_t a = 0; a < k; ++a) {
      std::pair<State, State> nxt{x.next(p, static_cast<Letter>(a)), y.next(q, static_cast<Letter>(a))};
      if (parent.emplace(nxt, std::make_pair(i, static_cast<Letter>(a))).second) queue.push_back(nxt);
    }
  }
  return {true, std::nullopt};
}

Dfa piecewise_excluding(const Alphabet& a, const std::vector<Word>& forbidden) {
  for (const auto& w : forbidden)
    if (w.empty()) return Dfa::empty_language(a);
  const std::size_t k = a.size();
  // State = how much of each forbidden word has been matched greedily as a
  // scattered subword; any complete match goes to the dead state.
  std::map<std::vector<State>, State> ids;
  std::vector<std::vector<State>> states;
  std::vector<State> delta;
  const std::vector<State> dead_key{static_cast<State>(-1)};
  auto intern = [&](const std::vector<State>& s) {
    auto [it, fresh] = ids.emplace(s, static_cast<State>(states.size()));
    if (fresh) states.push_back(s);
    return it->second;
  };
  intern(std::vector<State>(forbidden.size(), 0));
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (std::size_t x = 0; x < k; ++x) {
      std::vector<State> s = states[i];
      if (s == dead_key) {
        delta.push_back(static_cast<State>(i));
        continue;
      }
      bool dead = false;
      for (std::size_t j = 0; j < forbidden.size(); ++j) {
        if (forbidden[j][s[j]] == x) ++s[j];
        if (s[j] == forbidden[j].size()) dead = true;
      }
      delta.push_back(intern(dead ? dead_key : s));
    }
  }
  std::vector<bool> accept(states.size());
  for (std::size_t i = 0; i < states.size(); ++i) accept[i] = states[i] != dead_key;
  return minimize(Dfa(a, states.size(), 0, std::move(accept), std::move(delta)));
}

}  // namespace conjlang
