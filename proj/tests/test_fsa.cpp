#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "conjlang/fsa/io.hpp"
#include "conjlang/fsa/operations.hpp"
#include "support.hpp"

using namespace conjlang;
using testing_support::all_words;
using testing_support::brute_language;
using testing_support::flatten;
using testing_support::random_dfa;

namespace {

const Alphabet ab = Alphabet::plain({"a", "b"});
const Alphabet abc = Alphabet::plain({"a", "b", "c"});

Regex lit(const char* s) { return Regex::literal(s); }

Dfa dfa(const Regex& r, const Alphabet& a = ab) { return to_dfa(r, a); }

bool member(const Dfa& d, const Alphabet& a, const char* w) { return accepts(d, a.parse(w)); }

std::set<Word> words(const Alphabet& a, std::initializer_list<const char*> ws) {
  std::set<Word> out;
  for (auto w : ws) out.insert(a.parse(w));
  return out;
}

}  // namespace

TEST_CASE("alphabet parsing and formatting") {
  Alphabet z2({{"a", "A"}, {"A", "a"}, {"b", "B"}, {"B", "b"}});
  CHECK(z2.parse("aAb") == Word{0, 1, 2});
  CHECK(z2.format(Word{2, 3, 0}) == "bBa");
  CHECK(z2.inverse(z2.parse("ab")) == z2.parse("BA"));
  CHECK(z2.parse("").empty());
  CHECK_THROWS_AS(z2.parse("ax"), std::invalid_argument);
  CHECK_THROWS(Alphabet({{"a", "b"}, {"b", "c"}, {"c", "a"}}));

  Alphabet braid({{"s1", "S1"}, {"S1", "s1"}, {"s2", "S2"}, {"S2", "s2"}});
  CHECK(braid.parse("s1 S2") == Word{0, 3});
  CHECK(braid.format(Word{0, 3}) == "s1 S2");
}

TEST_CASE("regex compilation") {
  Dfa astar_b = dfa(Regex::concat({Regex::star(lit("a")), lit("b")}));
  CHECK(member(astar_b, ab, "aaab"));
  CHECK_FALSE(member(astar_b, ab, "ba"));
  Dfa all = dfa(Regex::star(Regex::any_of({"a", "b"})));
  CHECK(all == minimize(Dfa::universal(ab)));
  CHECK_THROWS_AS(compile_regex(lit("z"), ab), std::invalid_argument);
  CHECK(dfa(Regex::empty()) == minimize(Dfa::empty_language(ab)));
  CHECK(accepts(dfa(Regex::epsilon()), Word{}));
  Dfa opt = dfa(Regex::optional(lit("a")));
  CHECK(flatten(enumerate(opt, 4)) == words(ab, {"", "a"}));
  Dfa plus = dfa(Regex::plus(lit("b")));
  CHECK(flatten(enumerate(plus, 3)) == words(ab, {"b", "bb", "bbb"}));
}

TEST_CASE("determinize") {
  Nfa n(ab, 0);
  State s = n.add_state();
  State f = n.add_state();
  State m1 = n.add_state(), m2 = n.add_state();
  n.add_start(s);
  n.add_accept(f);
  n.add_edge(s, 0, m1);
  n.add_edge(m1, 1, f);
  n.add_edge(s, 1, m2);
  n.add_edge(m2, 0, f);
  Dfa d = minimize(determinize(n));
  CHECK(flatten(enumerate(d, 4)) == words(ab, {"ab", "ba"}));
  auto live = useful_states(d);
  CHECK(std::count(live.begin(), live.end(), true) == 4);

  Nfa empty(ab, 3);
  CHECK(minimize(determinize(empty)) == minimize(Dfa::empty_language(ab)));

  // An epsilon cycle through two states must not hang the closure.
  Nfa cyc(ab, 3);
  cyc.add_start(0);
  cyc.add_epsilon(0, 1);
  cyc.add_epsilon(1, 0);
  cyc.add_edge(1, 0, 2);
  cyc.add_epsilon(2, 0);
  cyc.add_accept(2);
  Dfa dc = determinize(cyc);
  CHECK(flatten(enumerate(dc, 6)) == brute_language(dfa(Regex::plus(lit("a"))), 6));
}

TEST_CASE("minimize is canonical") {
  Dfa x = dfa(Regex::concat({Regex::star(lit("a")), Regex::star(lit("b"))}));
  // a hand-made redundant machine for a*b*: states 0,1 both "in a-block"
  std::vector<bool> acc{true, true, true, false};
  std::vector<State> delta{1, 2, 0, 2, 3, 2, 3, 3};
  Dfa y(ab, 4, 0, acc, delta);
  CHECK(minimize(y) == x);
  CHECK(minimize(x) == x);
  CHECK(minimize(Dfa::empty_language(ab)).state_count() == 1);
}

TEST_CASE("boolean algebra") {
  Dfa astar = dfa(Regex::star(lit("a")));
  Dfa bstar = dfa(Regex::star(lit("b")));
  Dfa ab_ = dfa(Regex::concat({Regex::star(lit("a")), Regex::star(lit("b"))}));
  Dfa ba_ = dfa(Regex::concat({Regex::star(lit("b")), Regex::star(lit("a"))}));
  Dfa meet = intersection(ab_, ba_);
  CHECK(flatten(enumerate(meet, 6)) == flatten(enumerate(union_of(astar, bstar), 6)));
  CHECK(equivalent(meet, union_of(astar, bstar)).equal);
  CHECK(complement(complement(ab_)) == ab_);
  CHECK(difference(Dfa::universal(ab), Dfa::empty_language(ab)) == minimize(Dfa::universal(ab)));
  CHECK_THROWS_AS(intersection(ab_, Dfa::universal(abc)), std::invalid_argument);

  std::mt19937 rng(7);
  for (int i = 0; i < 50; ++i) {
    Dfa p = random_dfa(abc, 4, rng), q = random_dfa(abc, 4, rng), r = random_dfa(abc, 3, rng);
    CHECK(complement(union_of(p, q)) == intersection(complement(p), complement(q)));
    CHECK(intersection(p, union_of(q, r)) == union_of(intersection(p, q), intersection(p, r)));
    CHECK(difference(p, q) == intersection(p, complement(q)));
  }
}

TEST_CASE("cyclic closure") {
  Dfa single = Dfa::from_words(ab, {ab.parse("ab")});
  CHECK(flatten(enumerate(to_dfa(cyclic_closure(single)), 4)) == words(ab, {"ab", "ba"}));

  Dfa astar_b = dfa(Regex::concat({Regex::star(lit("a")), lit("b")}));
  Dfa expected = dfa(Regex::concat({Regex::star(lit("a")), lit("b"), Regex::star(lit("a"))}));
  CHECK(equivalent(to_dfa(cyclic_closure(astar_b)), expected).equal);
  CHECK(to_dfa(cyclic_closure(Dfa::empty_language(ab))) == minimize(Dfa::empty_language(ab)));

  std::mt19937 rng(11);
  for (int i = 0; i < 40; ++i) {
    Dfa d = random_dfa(abc, 4, rng);
    Dfa c = to_dfa(cyclic_closure(d));
    std::set<Word> rot;
    for (const auto& w : brute_language(d, 6))
      for (const auto& r : rotations(w)) rot.insert(r);
    CHECK(brute_language(c, 6) == rot);
    // cyc is idempotent. Closing a large closure again is exponential, so
    // big machines are checked for rotation-closedness by brute force.
    if (c.state_count() <= 40) {
      CHECK(equivalent(to_dfa(cyclic_closure(c)), c).equal);
    } else {
      for (const auto& w : brute_language(c, 6))
        for (const auto& r : rotations(w)) CHECK(accepts(c, r));
    }
    CHECK(difference(d, c) == minimize(Dfa::empty_language(abc)));
  }
}

TEST_CASE("insertion") {
  Alphabet abx = Alphabet::plain({"a", "b", "x"});
  Dfa z = Dfa::from_words(abx, {abx.parse("ab")});
  Dfa w = Dfa::from_words(abx, {abx.parse("x")});
  CHECK(flatten(enumerate(to_dfa(insertion(z, w)), 5)) == words(abx, {"xab", "axb", "abx"}));

  Dfa astar = dfa(Regex::star(lit("a")));
  Dfa b = Dfa::from_words(ab, {ab.parse("b")});
  Dfa expected = dfa(Regex::concat({Regex::star(lit("a")), lit("b"), Regex::star(lit("a"))}));
  CHECK(equivalent(to_dfa(insertion(astar, b)), expected).equal);

  Dfa eps = Dfa::from_words(ab, {Word{}});
  std::mt19937 rng(3);
  for (int i = 0; i < 25; ++i) {
    Dfa l1 = random_dfa(ab, 4, rng), l2 = random_dfa(ab, 3, rng);
    CHECK(equivalent(to_dfa(insertion(l1, eps)), l1).equal);
    std::set<Word> got = brute_language(to_dfa(insertion(l1, l2)), 7);
    std::set<Word> want;
    for (int len = 0; len <= 7; ++len)
      for (const auto& word : all_words(2, len)) {
        bool found = false;
        for (std::size_t s = 0; s <= word.size() && !found; ++s)
          for (std::size_t e = s; e <= word.size() && !found; ++e) {
            Word mid(word.begin() + s, word.begin() + e);
            Word rest(word.begin(), word.begin() + s);
            rest.insert(rest.end(), word.begin() + e, word.end());
            found = accepts(l2, mid) && accepts(l1, rest);
          }
        if (found) want.insert(word);
      }
    CHECK(got == want);
  }
}

TEST_CASE("concatenation") {
  Dfa a = Dfa::from_words(ab, {ab.parse("a"), ab.parse("ab")});
  Dfa b = Dfa::from_words(ab, {ab.parse("b"), Word{}});
  CHECK(flatten(enumerate(to_dfa(concatenation(a, b)), 4)) == words(ab, {"a", "ab", "abb"}));
}

TEST_CASE("quotients") {
  Dfa astar_bstar = dfa(Regex::concat({Regex::star(lit("a")), Regex::star(lit("b"))}));
  CHECK(quotient(astar_bstar, ab.parse("a"), Side::left) == astar_bstar);
  Dfa astar_b = dfa(Regex::concat({Regex::star(lit("a")), lit("b")}));
  CHECK(quotient(astar_b, ab.parse("b"), Side::right) == dfa(Regex::star(lit("a"))));
  Dfa single = Dfa::from_words(ab, {ab.parse("ab")});
  CHECK(quotient(single, ab.parse("b"), Side::left) == minimize(Dfa::empty_language(ab)));

  std::mt19937 rng(5);
  for (int i = 0; i < 20; ++i) {
    Dfa d = random_dfa(ab, 4, rng);
    Word w = ab.parse("ab");
    Dfa l = quotient(d, w, Side::left), r = quotient(d, w, Side::right);
    for (int len = 0; len <= 5; ++len)
      for (const auto& v : all_words(2, len)) {
        Word wv = w, vw = v;
        wv.insert(wv.end(), v.begin(), v.end());
        vw.insert(vw.end(), w.begin(), w.end());
        CHECK(accepts(l, v) == accepts(d, wv));
        CHECK(accepts(r, v) == accepts(d, vw));
      }
  }
}

TEST_CASE("enumeration order and equivalence witnesses") {
  auto groups = enumerate(dfa(Regex::star(lit("a"))), 3);
  REQUIRE(groups.size() == 4);
  CHECK(groups[3] == std::vector<Word>{ab.parse("aaa")});
  for (const auto& g : enumerate(Dfa::empty_language(ab), 5)) CHECK(g.empty());

  auto all = enumerate(Dfa::universal(abc), 2);
  CHECK(all[2].size() == 9);
  CHECK(std::is_sorted(all[2].begin(), all[2].end()));

  Dfa astar_bstar = dfa(Regex::concat({Regex::star(lit("a")), Regex::star(lit("b"))}));
  auto eq = equivalent(astar_bstar, Dfa::universal(ab));
  CHECK_FALSE(eq.equal);
  REQUIRE(eq.counterexample);
  CHECK(ab.format(*eq.counterexample) == "ba");

  std::mt19937 rng(9);
  for (int i = 0; i < 30; ++i) {
    Dfa d = random_dfa(abc, 5, rng);
    CHECK(equivalent(d, minimize(d)).equal);
    CHECK(flatten(enumerate(d, 5)) == brute_language(d, 5));
  }
}

TEST_CASE("piecewise excluding") {
  Dfa no_ab = piecewise_excluding(ab, {ab.parse("ab")});
  CHECK(member(no_ab, ab, "ba"));
  CHECK(member(no_ab, ab, "bbaa"));
  CHECK_FALSE(member(no_ab, ab, "ab"));
  CHECK_FALSE(member(no_ab, ab, "aab"));
  CHECK_FALSE(member(no_ab, ab, "abba"));
  CHECK(piecewise_excluding(ab, {}) == minimize(Dfa::universal(ab)));

  // Closed under deleting letters.
  Dfa p = piecewise_excluding(abc, {abc.parse("aba"), abc.parse("cc")});
  for (const auto& w : brute_language(p, 6))
    for (std::size_t i = 0; i < w.size(); ++i) {
      Word v = w;
      v.erase(v.begin() + static_cast<long>(i));
      CHECK(accepts(p, v));
    }
}

TEST_CASE("json and dot") {
  Dfa d = Dfa::from_words(Alphabet({{"a", "A"}, {"A", "a"}}), {Word{0}});
  Dfa m = minimize(d);
  std::string js = to_json(m);
  CHECK(js ==
        R"({"alphabet":[{"name":"a","inverse":"A"},{"name":"A","inverse":"a"}],"states":3,"start":[0],)"
        R"("accept":[1],"transitions":[[0,"a",1],[0,"A",2],[1,"a",2],[1,"A",2],[2,"a",2],[2,"A",2]]})");
  CHECK(dfa_from_json(js) == m);

  Nfa n = cyclic_closure(m);
  Nfa back = nfa_from_json(to_json(n));
  CHECK(to_json(back) == to_json(n));
  CHECK(to_dfa(back) == to_dfa(n));
  CHECK(to_json(n).find("\"epsilon\"") != std::string::npos);

  // partial machine: missing transitions complete to a dead state
  std::string partial =
      R"({"alphabet":[{"name":"a","inverse":"a"}],"states":2,"start":[0],"accept":[1],"transitions":[[0,"a",1]]})";
  Dfa pd = dfa_from_json(partial);
  CHECK(flatten(enumerate(pd, 3)) == std::set<Word>{Word{0}});
  CHECK_THROWS(dfa_from_json("{not json"));

  std::string dot = to_dot(m);
  CHECK(dot.find("digraph dfa {") == 0);
  CHECK(dot.find("q1 [shape=doublecircle];") != std::string::npos);
  CHECK(dot.find("q1 -> q2 [label=\"a,A\"];") != std::string::npos);
}
