#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <numeric>
#include <random>
#include <set>

#include "conjlang/fsa/operations.hpp"
#include "conjlang/groups/paper_languages.hpp"
#include "conjlang/groups/registry.hpp"
#include "conjlang/groups/semidirect.hpp"
#include "conjlang/groups/witness.hpp"
#include "conjlang/langkit/ball.hpp"
#include "conjlang/langkit/languages.hpp"
#include "conjlang/series/growth.hpp"
#include "support.hpp"

using namespace conjlang;

namespace {

const std::vector<std::string> all_tags = {"zd2_Z", "zd2_X", "zd8_Zp", "zd8_Xp", "free:2", "free_abelian:2", "inf_dihedral"};

// Defining relators of each presentation, as words that must evaluate to 1.
std::vector<std::string> relators(const std::string& tag) {
  if (tag == "zd2_Z") return {"tt", "abAB", "tatB"};
  if (tag == "zd2_X") return {"tt", "adAD", "cAA", "tatDa"};
  if (tag == "zd8_Zp") return {"tt", "uu", "tutututu", "abAB", "tatB", "uauA", "ubuB"};
  if (tag == "zd8_Xp") return {"tt", "uu", "tutututu", "adAD", "cAA", "tatDa", "uauA", "uduD"};
  if (tag == "free_abelian:2") return {"abAB"};
  if (tag == "inf_dihedral") return {"ss", "sxsx"};
  return {};
}

struct UnionFind {
  std::vector<std::size_t> p;
  explicit UnionFind(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  std::size_t find(std::size_t x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(std::size_t x, std::size_t y) { p[find(x)] = find(y); }
};

Word w(const GroupOracle& o, const std::string& s) { return o.alphabet().parse(s); }

Element ev(const GroupOracle& o, const std::string& s) { return o.evaluate(w(o, s)); }

SampleComparison compare(const std::string& expr, LanguageKind kind, int n) {
  auto o = make_group(paper_expression(expr).group);
  return compare_sample_to_dfa(language_sample(*o, kind, n), paper_language_dfa(expr));
}

std::string divergence(const std::string& expr, LanguageKind kind, int n) {
  auto c = compare(expr, kind, n);
  if (c.equal) return "";
  return make_group(paper_expression(expr).group)->alphabet().format(*c.word);
}

}  // namespace

TEST_CASE("relators evaluate to the identity") {
  for (const auto& tag : all_tags) {
    auto o = make_group(tag);
    for (const auto& r : relators(tag)) {
      INFO(tag << " " << r);
      CHECK(ev(*o, r) == o->identity());
    }
  }
  auto g = make_group("zd2_Z");
  CHECK(ev(*g, "tat") == ev(*g, "b"));
  auto x = make_group("zd2_X");
  CHECK(ev(*x, "c") == ev(*x, "aa"));
  auto k = make_group("zd8_Xp");
  CHECK(ev(*k, "uau") == ev(*k, "a"));
}

TEST_CASE("oracle soundness on random words") {
  std::mt19937 rng(7);
  for (const auto& tag : all_tags) {
    auto o = make_group(tag);
    const Alphabet& a = o->alphabet();
    auto rels = relators(tag);
    std::uniform_int_distribution<int> len(0, 12);
    std::uniform_int_distribution<Letter> letter(0, static_cast<Letter>(a.size() - 1));
    int bad = 0;
    for (int trial = 0; trial < 10000; ++trial) {
      Word u;
      for (int i = len(rng); i > 0; --i) u.push_back(letter(rng));
      Element g = o->evaluate(u);
      Word uu = u;
      Word inv = a.inverse(u);
      uu.insert(uu.end(), inv.begin(), inv.end());
      if (o->evaluate(uu) != o->identity()) ++bad;
      if (o->multiply(g, o->inverse(g)) != o->identity()) ++bad;
      if (!rels.empty()) {
        Word r = a.parse(rels[static_cast<std::size_t>(trial) % rels.size()]);
        std::size_t at = u.empty() ? 0 : static_cast<std::size_t>(rng() % (u.size() + 1));
        Word v = u;
        v.insert(v.begin() + static_cast<long>(at), r.begin(), r.end());
        if (o->evaluate(v) != g) ++bad;
      }
    }
    INFO(tag);
    CHECK(bad == 0);
  }
}

TEST_CASE("conjugacy key examples") {
  auto g = make_group("zd2_Z");
  CHECK(g->conj_key(ev(*g, "aabbbbb")) == g->conj_key(ev(*g, "aaaaabb")));
  CHECK(g->conj_key(ev(*g, "aaat")) == g->conj_key(ev(*g, "bbbt")));
  CHECK(g->conj_key(ev(*g, "aaat")) == g->conj_key(ev(*g, "abbt")));
  CHECK(g->conj_key(ev(*g, "aaat")) != g->conj_key(ev(*g, "aat")));
  auto k = make_group("zd8_Zp");
  using S = SemidirectOracle;
  CHECK(k->conj_key(S::make(2, 6, D8::u())) == k->conj_key(S::make(6, 2, D8::t() * D8::u() * D8::t())));
  CHECK(k->conj_key(S::make(2, 6, D8::u())) != k->conj_key(S::make(2, 6, D8::t() * D8::u() * D8::t())));
}

TEST_CASE("conjugacy keys match bounded conjugation closure") {
  const int R = 6, slack = 2;
  for (const auto& tag : all_tags) {
    auto o = make_group(tag);
    Ball b(*o, R + slack);
    UnionFind uf(b.size());
    for (Ball::Id id = 0; id < b.size(); ++id)
      for (Letter x = 0; x < o->alphabet().size(); ++x) {
        auto h = b.find(o->conjugate(b.element(id), o->generator(x)));
        if (h) uf.unite(id, *h);
      }
    std::map<Element, std::size_t> key_to_class;
    std::map<std::size_t, Element> class_to_key;
    bool consistent = true;
    for (Ball::Id id = 0; id < b.size(); ++id) {
      if (b.length(id) > R) continue;
      Element key = *o->conj_key(b.element(id));
      std::size_t c = uf.find(id);
      auto [k1, fresh1] = key_to_class.emplace(key, c);
      auto [k2, fresh2] = class_to_key.emplace(c, key);
      if (k1->second != c || k2->second != key) consistent = false;
    }
    INFO(tag);
    CHECK(consistent);
  }
}

TEST_CASE("expression membership examples") {
  auto gz = make_group("zd2_Z");
  Dfa geocl = paper_language_dfa("geocl_G_Z");
  CHECK(accepts(geocl, w(*gz, "atb")));
  CHECK_FALSE(accepts(geocl, w(*gz, "aAt")));
  Dfa mincl = paper_language_dfa("mincl_G_Z");
  CHECK(accepts(mincl, w(*gz, "aabt")));
  CHECK_FALSE(accepts(mincl, w(*gz, "bta")));
  auto gx = make_group("zd2_X");
  Dfa l4 = paper_language_dfa("L4_G_X");
  for (auto s : {"ccD", "accD", "cDca", "Dcc", "ccaD"}) CHECK(accepts(l4, w(*gx, s)));
  for (auto s : {"cD", "aacD", "ccDD", "ccd"}) CHECK_FALSE(accepts(l4, w(*gx, s)));
  CHECK_THROWS_AS(paper_language_dfa("no_such_expression"), std::invalid_argument);
  for (const auto& e : paper_expressions()) CHECK_NOTHROW(make_group(e.group));
}

TEST_CASE("worked-example identities up to length 10") {
  const int n = 10;
  CHECK(compare("geo_G_Z", LanguageKind::geo, n).equal);
  CHECK(compare("sl_G_Z", LanguageKind::sl, n).equal);
  CHECK(compare("geocl_G_Z", LanguageKind::conjgeo, n).equal);
  CHECK(compare("mincl_G_Z", LanguageKind::mincl, n).equal);
  CHECK(compare("sl_K_Zp", LanguageKind::sl, n).equal);
  CHECK(compare("geocl_K_Zp", LanguageKind::conjgeo, n).equal);
  CHECK(compare("mincl_K_Zp", LanguageKind::mincl, n).equal);
  CHECK(compare("geo_K_Zp_corrected", LanguageKind::geo, n).equal);
  CHECK(compare("geocl_G_X_corrected", LanguageKind::conjgeo, n).equal);
  CHECK(compare("mincl_G_X_corrected", LanguageKind::mincl, n).equal);
  CHECK(compare("sphcl_G_X_corrected", LanguageKind::conjsl, n).equal);
}

TEST_CASE("displayed expressions that miss words") {
  CHECK(divergence("geo_K_Zp", LanguageKind::geo, 6) == "utu");
  CHECK(divergence("geocl_G_X", LanguageKind::conjgeo, 8) == "actCt");
  CHECK(divergence("mincl_G_X", LanguageKind::mincl, 8) == "ctACt");
  CHECK(divergence("sphcl_G_X", LanguageKind::conjsl, 8) == "ctACt");
  // Every displayed piece is contained in its corrected language.
  for (auto [shown, fixed] : std::vector<std::pair<std::string, std::string>>{
           {"geo_K_Zp", "geo_K_Zp_corrected"},
           {"geocl_G_X", "geocl_G_X_corrected"},
           {"mincl_G_X", "mincl_G_X_corrected"}})
    CHECK(equivalent(difference(paper_language_dfa(shown), paper_language_dfa(fixed)), Dfa::empty_language(paper_language_dfa(shown).alphabet())).equal);
}

TEST_CASE("lengths over X and conjugacy lengths") {
  auto gx = make_group("zd2_X");
  Ball b(*gx, 10);
  using S = SemidirectOracle;
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n) {
      auto id = b.find(S::make(2 * m, 2 * n, D8{}));
      REQUIRE(id);
      CHECK(b.length(*id) == (m >= n ? m + n : m + n + 2));
      if (m < n) {
        std::string expect = std::string(static_cast<std::size_t>(m), 'c') + "t" + std::string(static_cast<std::size_t>(n), 'c') + "t";
        CHECK(gx->alphabet().format(b.normal_form(*id)) == expect);
      }
    }
  auto gz = make_group("zd2_Z");
  for (int i = -4; i <= 4; ++i)
    for (int j = -4; j <= 4; ++j) {
      int s = std::abs(i + j);
      CHECK(conj_min_length(*gx, S::make(i, j, D8::t()), 0).length == (s + 1) / 2 + 1);
      CHECK(conj_min_length(*gz, S::make(i, j, D8::t()), 0).length == s + 1);
    }
}

TEST_CASE("infinite dihedral conjugacy representatives") {
  auto d = make_group("inf_dihedral");
  auto s = language_sample(*d, LanguageKind::conjsl, 15);
  std::set<std::string> got;
  for (const auto& level : s.words)
    for (const auto& v : level) got.insert(d->alphabet().format(v));
  std::set<std::string> expected{"", "s", "xs"};
  for (int k = 1; k <= 15; ++k) expected.insert(std::string(static_cast<std::size_t>(k), 'x'));
  CHECK(got == expected);
  auto counts = s.counts();
  for (std::size_t k = 3; k < counts.size(); ++k) CHECK(counts[k] == 1);
}

TEST_CASE("conjugacy growth of (G,Z)") {
  auto g = make_group("zd2_Z");
  auto counts = language_sample(*g, LanguageKind::conjsl, 14).counts();
  std::vector<BigInt> got(counts.begin(), counts.end());
  auto f = RationalFunction::parse("num: 1,3,5,2,-2,-1 ; den: 1,0,-2,0,1");
  CHECK(expand(f, 14) == got);
  CHECK(count_by_length(paper_language_dfa("conjsl_count_G_Z"), 14) == got);
}

TEST_CASE("witness tables") {
  for (const auto& p : witness_patterns()) {
    auto o = make_group(p.group);
    auto t = nonregularity_witness(*o, p);
    Dfa family = pattern_dfa(p, o->alphabet());
    REQUIRE_FALSE(t.rows.empty());
    for (const auto& r : t.rows) {
      CHECK(accepts(family, r.word));
      int m = r.params[0], n = r.params[1];
      bool expected = (p.name == "a*b*" || p.name == "c*tc*utu") ? m >= n : m < n;
      INFO(p.name << " " << m << "," << n);
      CHECK(r.member == expected);
    }
  }
  auto gx = make_group("zd2_X");
  auto t = nonregularity_witness(*gx, witness_pattern("c*tc*t"), 4);
  CHECK(witness_tsv(t).substr(0, 18) == "0\t0\t0\n0\t1\t1\n0\t2\t1\n");
  CHECK(t.rows.size() == 6);
  CHECK_THROWS_AS(witness_pattern("zzz"), std::invalid_argument);
}

TEST_CASE("registry") {
  CHECK_THROWS_AS(make_group("nope"), std::invalid_argument);
  CHECK_THROWS_AS(make_group("free:0"), std::invalid_argument);
  CHECK_THROWS_AS(make_group("free:x"), std::invalid_argument);
  CHECK(make_group("free:3")->alphabet().size() == 6);
  CHECK(group_json(*make_group("zd2_Z")) ==
        R"({"tag":"zd2_Z","alphabet":[{"name":"a","inverse":"A"},{"name":"A","inverse":"a"},{"name":"b","inverse":"B"},{"name":"B","inverse":"b"},{"name":"t","inverse":"t"}],"order":["a","A","b","B","t"]})");
  CHECK(make_group("zd8_Xp")->alphabet().names() == std::vector<std::string>{"a", "c", "A", "C", "d", "D", "t", "u"});
}
