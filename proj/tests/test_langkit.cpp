#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>

#include "conjlang/fsa/operations.hpp"
#include "conjlang/fsa/regex.hpp"
#include "conjlang/groups/free.hpp"
#include "conjlang/groups/registry.hpp"
#include "conjlang/langkit/ball.hpp"
#include "conjlang/langkit/fftp.hpp"
#include "conjlang/langkit/languages.hpp"
#include "conjlang/langkit/local_test.hpp"
#include "support.hpp"

using namespace conjlang;
using testing_support::all_words;
using testing_support::flatten;

namespace {

// Letters 2i and 2i+1 are mutually inverse in rank_alphabet.
bool freely_reduced(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if ((w[i] ^ 1) == w[i - 1]) return false;
  return true;
}

bool cyclically_reduced(const Word& w) {
  return freely_reduced(w) && (w.size() < 2 || (w.front() ^ 1) != w.back());
}

std::size_t reduced_length(const Word& w) {
  Word s;
  for (auto x : w) {
    if (!s.empty() && (s.back() ^ 1) == x) s.pop_back();
    else s.push_back(x);
  }
  return s.size();
}

Word rotate(const Word& w, std::size_t r) {
  Word v(w.begin() + static_cast<long>(r), w.end());
  v.insert(v.end(), w.begin(), w.begin() + static_cast<long>(r));
  return v;
}

std::set<Word> words_where(std::size_t k, int n, const std::function<bool(const Word&)>& pred) {
  std::set<Word> out;
  for (int len = 0; len <= n; ++len)
    for (const auto& w : all_words(k, len))
      if (pred(w)) out.insert(w);
  return out;
}

Dfa free_geodesics(const Alphabet& a) {
  std::vector<Regex> pairs;
  for (Letter x = 0; x < a.size(); ++x) pairs.push_back(Regex::word({a.name(x), a.name(a.inverse(x))}));
  Regex sigma = Regex::star(Regex::any_of(a.names()));
  return complement(to_dfa(Regex::concat({sigma, Regex::union_of(pairs), sigma}), a));
}

// The free group with its conjugacy key hidden, to exercise the bounded
// search paths.
class KeylessFree : public GroupOracle {
 public:
  KeylessFree() : GroupOracle(rank_alphabet(2)), inner_(2) {}
  std::string name() const override { return "free:2 (no key)"; }
  Element identity() const override { return inner_.identity(); }
  Element generator(Letter x) const override { return inner_.generator(x); }
  Element multiply(const Element& g, const Element& h) const override { return inner_.multiply(g, h); }
  Element inverse(const Element& g) const override { return inner_.inverse(g); }

 private:
  FreeGroupOracle inner_;
};

}  // namespace

TEST_CASE("ball sizes and normal forms") {
  auto f2 = make_group("free:2");
  Ball b(*f2, 3);
  CHECK(b.sphere_sizes() == std::vector<std::size_t>{1, 4, 12, 36});
  CHECK(Ball(*f2, 2).size() == 17);
  CHECK(Ball(*make_group("free_abelian:2"), 1).size() == 5);
  CHECK(Ball(*make_group("zd2_Z"), 1).size() == 6);
  CHECK(b.length(0) == 0);
  CHECK(b.normal_form(0).empty());

  // Normal forms are shortlex-least among all words reaching the element.
  auto g = make_group("zd2_Z");
  Ball gb(*g, 4);
  std::map<Element, Word> least;
  for (int len = 0; len <= 4; ++len)
    for (const auto& w : all_words(g->alphabet().size(), len)) least.emplace(g->evaluate(w), w);
  std::size_t found = 0;
  for (const auto& [e, w] : least) {
    auto id = gb.find(e);
    REQUIRE(id);
    CHECK(gb.normal_form(*id) == w);
    CHECK(gb.length(*id) == static_cast<int>(w.size()));
    ++found;
  }
  CHECK(found == gb.size());
  for (Ball::Id id = 1; id < gb.size(); ++id) {
    const Word& p = gb.normal_form(id - 1);
    const Word& q = gb.normal_form(id);
    CHECK((p.size() < q.size() || (p.size() == q.size() && p < q)));
  }
  CHECK_THROWS_AS(Ball(*f2, 8, 1000), std::length_error);
}

TEST_CASE("free group languages against reduction oracles") {
  auto f2 = make_group("free:2");
  const int n = 6;
  LanguageLab lab(*f2, n);
  CHECK(lab.exact());
  auto k = f2->alphabet().size();
  auto conjsl = [](const Word& w) {
    if (!cyclically_reduced(w)) return false;
    for (std::size_t r = 1; r < w.size(); ++r)
      if (rotate(w, r) < w) return false;
    return true;
  };
  CHECK(flatten(lab.sample(LanguageKind::geo).words) == words_where(k, n, freely_reduced));
  CHECK(flatten(lab.sample(LanguageKind::sl).words) == words_where(k, n, freely_reduced));
  CHECK(flatten(lab.sample(LanguageKind::cycgeo).words) == words_where(k, n, cyclically_reduced));
  CHECK(flatten(lab.sample(LanguageKind::conjgeo).words) == words_where(k, n, cyclically_reduced));
  CHECK(flatten(lab.sample(LanguageKind::mincl).words) == words_where(k, n, cyclically_reduced));
  CHECK(flatten(lab.sample(LanguageKind::conjsl).words) == words_where(k, n, conjsl));
}

TEST_CASE("free abelian languages") {
  auto z2 = make_group("free_abelian:2");
  const int n = 5;
  auto no_cancelling_pair = [](const Word& w) {
    std::set<Letter> seen(w.begin(), w.end());
    for (auto x : seen)
      if (seen.count(static_cast<Letter>(x ^ 1))) return false;
    return true;
  };
  auto sorted_nf = [&](const Word& w) { return no_cancelling_pair(w) && std::is_sorted(w.begin(), w.end()); };
  LanguageLab lab(*z2, n);
  auto k = z2->alphabet().size();
  CHECK(flatten(lab.sample(LanguageKind::geo).words) == words_where(k, n, no_cancelling_pair));
  CHECK(flatten(lab.sample(LanguageKind::conjgeo).words) == words_where(k, n, no_cancelling_pair));
  CHECK(flatten(lab.sample(LanguageKind::sl).words) == words_where(k, n, sorted_nf));
  CHECK(flatten(lab.sample(LanguageKind::conjsl).words) == words_where(k, n, sorted_nf));
}

TEST_CASE("inexact classes agree with exact ones on the free group") {
  KeylessFree keyless;
  CHECK_THROWS_AS(language_sample(keyless, LanguageKind::conjgeo, 4), std::runtime_error);
  SampleOptions opts;
  opts.force_inexact = true;
  opts.budget = 1;
  auto inexact = language_sample(keyless, LanguageKind::conjsl, 5, opts);
  CHECK_FALSE(inexact.exact);
  auto exact = language_sample(*make_group("free:2"), LanguageKind::conjsl, 5);
  CHECK(inexact.words == exact.words);
  CHECK(language_sample(keyless, LanguageKind::geo, 5).words == language_sample(*make_group("free:2"), LanguageKind::geo, 5).words);

  const Alphabet& a = keyless.alphabet();
  auto r = conj_min_length(keyless, keyless.evaluate(a.parse("Abaa")), 2);
  CHECK(r.length == 2);
  CHECK_FALSE(r.exact);
  REQUIRE(r.conjugator);
  CHECK(keyless.conjugate(keyless.evaluate(a.parse("Abaa")), keyless.evaluate(*r.conjugator)).size() == 2);
  auto e = conj_min_length(*make_group("free:2"), keyless.evaluate(a.parse("Abaa")), 0);
  CHECK(e.exact);
  CHECK(e.length == 2);
}

TEST_CASE("lattice of the six languages") {
  for (std::string tag : {"zd2_Z", "inf_dihedral", "free:2"}) {
    auto o = make_group(tag);
    LanguageLab lab(*o, 6);
    auto s = [&](LanguageKind k) { return flatten(lab.sample(k).words); };
    auto sub = [](const std::set<Word>& x, const std::set<Word>& y) {
      return std::includes(y.begin(), y.end(), x.begin(), x.end());
    };
    auto geo = s(LanguageKind::geo), cyc = s(LanguageKind::cycgeo), cg = s(LanguageKind::conjgeo);
    auto sl = s(LanguageKind::sl), mc = s(LanguageKind::mincl), cs = s(LanguageKind::conjsl);
    INFO(tag);
    CHECK(sub(cs, mc));
    CHECK(sub(mc, sl));
    CHECK(sub(sl, geo));
    CHECK(sub(mc, cg));
    CHECK(sub(cg, cyc));
    CHECK(sub(cyc, geo));
  }
}

TEST_CASE("ngeo automata") {
  auto f2 = make_group("free:2");
  const Alphabet& a = f2->alphabet();
  for (int K : {0, 2}) {
    Dfa d = ngeo_automaton(*f2, K, 2);
    for (int len = 0; len <= 6; ++len)
      for (const auto& w : all_words(a.size(), len)) {
        bool expected = reduced_length(w) + static_cast<std::size_t>(K) >= w.size();
        if (accepts(d, w) != expected) {
          INFO("K=" << K << " w=" << a.format(w));
          CHECK(accepts(d, w) == expected);
        }
      }
  }
  Dfa z = ngeo_automaton(*make_group("free_abelian:2"), 0, 2);
  Dfa zgeo = piecewise_excluding(z.alphabet(), {{0, 1}, {1, 0}, {2, 3}, {3, 2}});
  CHECK(equivalent(restrict_length(z, 0, 7), restrict_length(zgeo, 0, 7)).equal);
}

TEST_CASE("conjugacy geodesic pipeline") {
  auto f2 = make_group("free:2");
  Dfa geo = free_geodesics(f2->alphabet());
  Dfa cyc = cycgeo_from_geo(geo);
  auto k = f2->alphabet().size();
  CHECK(flatten(enumerate(cyc, 6)) == words_where(k, 6, cyclically_reduced));

  Dfa cg = conjgeo_pipeline(*f2, 1, geo, 3);
  CHECK(flatten(enumerate(cg, 10)) == words_where(k, 10, cyclically_reduced));

  auto z2 = make_group("free_abelian:2");
  Dfa zgeo = piecewise_excluding(z2->alphabet(), {{0, 1}, {1, 0}, {2, 3}, {3, 2}});
  Dfa zcg = conjgeo_pipeline(*z2, 1, zgeo, 3);
  CHECK(equivalent(restrict_length(zcg, 0, 8), restrict_length(zgeo, 0, 8)).equal);

  // A wrong geodesic automaton is rejected.
  CHECK_THROWS_AS(conjgeo_pipeline(*f2, 1, Dfa::universal(f2->alphabet()), 3), std::invalid_argument);
}

TEST_CASE("local testability") {
  auto f2 = make_group("free:2");
  auto geo = language_sample(*f2, LanguageKind::geo, 6);
  CHECK(local_testability_report(geo, 2).empty());
  auto conjsl = language_sample(*f2, LanguageKind::conjsl, 6);
  auto v = local_testability_report(conjsl, 2);
  REQUIRE_FALSE(v.empty());
  CHECK(conjsl.contains(v.front().member));
  CHECK_FALSE(conjsl.contains(v.front().non_member));
  CHECK(local_testability_report(conjsl, 2, 1).size() == 1);
}

TEST_CASE("sample comparison and reports") {
  auto z2 = make_group("free_abelian:2");
  auto geo = language_sample(*z2, LanguageKind::geo, 3);
  Dfa zgeo = piecewise_excluding(z2->alphabet(), {{0, 1}, {1, 0}, {2, 3}, {3, 2}});
  auto eq = compare_sample_to_dfa(geo, zgeo);
  CHECK(eq.equal);
  CHECK(report_json(geo, eq) == R"({"kind":"Geo","bound":3,"status":"equal"})");

  Dfa smaller = difference(zgeo, Dfa::from_words(z2->alphabet(), {z2->alphabet().parse("ba"), z2->alphabet().parse("Ab")}));
  auto diff = compare_sample_to_dfa(geo, smaller);
  CHECK_FALSE(diff.equal);
  REQUIRE(diff.word);
  CHECK(z2->alphabet().format(*diff.word) == "Ab");
  CHECK(diff.in_sample);
  CHECK(report_json(geo, diff) ==
        R"({"kind":"Geo","bound":3,"status":"divergent","divergence":{"word":"Ab","length":2,"side":"sample-only"}})");

  auto sl = language_sample(*z2, LanguageKind::sl, 1);
  CHECK(sample_tsv(sl) == "0\t\n1\ta\n1\tA\n1\tb\n1\tB\n");
  CHECK(sl.counts() == std::vector<std::size_t>{1, 4});
  CHECK(sl.total() == 5);

  CHECK(parse_kind("geocl") == LanguageKind::conjgeo);
  CHECK(parse_kind("SPHCL") == LanguageKind::conjsl);
  CHECK(parse_kind("geocpl") == LanguageKind::cycgeo);
  CHECK(parse_kind("sphl") == LanguageKind::sl);
  CHECK_FALSE(parse_kind("nonsense"));
}
