#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "conjlang/graphprod/graph_product.hpp"
#include "conjlang/langkit/ball.hpp"
#include "conjlang/langkit/languages.hpp"
#include "support.hpp"

using namespace conjlang;

namespace {

GraphProductSpec graph(const std::string& name) {
  using V = GraphVertex;
  auto Z = VertexType::Z;
  auto Z2 = VertexType::Z2;
  if (name == "free") return GraphProductSpec({V{"a", Z}, V{"b", Z}}, {});
  if (name == "Z2") return GraphProductSpec({V{"a", Z}, V{"b", Z}}, {{"a", "b"}});
  if (name == "path3") return GraphProductSpec({V{"a", Z}, V{"b", Z}, V{"c", Z}}, {{"a", "b"}, {"b", "c"}});
  if (name == "racg_edge") return GraphProductSpec({V{"a", Z2}, V{"b", Z2}}, {{"a", "b"}});
  if (name == "racg_path3") return GraphProductSpec({V{"a", Z2}, V{"b", Z2}, V{"c", Z2}}, {{"a", "b"}, {"b", "c"}});
  throw std::invalid_argument(name);
}

const std::vector<std::string> graphs = {"free", "Z2", "path3", "racg_edge", "racg_path3"};

// Every test graph is a join of a complete part (vertices adjacent to all
// others) with an edgeless part, so the group is a direct product of an
// abelian group and a free product of cyclic groups. Elements are the
// central exponent sums (mod 2 at Z/2 vertices) followed by the
// free-product reduced word of the remaining letters.
class JoinOracle : public GroupOracle {
 public:
  explicit JoinOracle(const GraphProductSpec& s) : GroupOracle(s.alphabet()), spec_(s) {
    for (std::size_t i = 0; i < s.vertex_count(); ++i) {
      bool all = true;
      for (std::size_t j = 0; j < s.vertex_count(); ++j)
        if (j != i && !s.adjacent(i, j)) all = false;
      central_.push_back(all);
      if (all) slot_.push_back(static_cast<int>(count_++));
      else slot_.push_back(-1);
    }
    for (std::size_t i = 0; i < s.vertex_count(); ++i)
      for (std::size_t j = 0; j < s.vertex_count(); ++j)
        if (i != j && !central_[i] && !central_[j] && s.adjacent(i, j))
          throw std::invalid_argument("not a join of a clique and an edgeless graph");
  }
  std::string name() const override { return "join"; }
  Element identity() const override { return Element(count_, 0); }
  Element generator(Letter x) const override { return right_multiply(identity(), x); }
  Element right_multiply(const Element& g, Letter x) const override {
    Element r = g;
    auto v = spec_.vertex_of(x);
    if (central_[v]) {
      auto& e = r[static_cast<std::size_t>(slot_[v])];
      e += spec_.exponent(x);
      if (spec_.vertex(v).type == VertexType::Z2) e = (e % 2 + 2) % 2;
    } else if (r.size() > count_ && alphabet().inverse(static_cast<Letter>(r.back())) == x) {
      r.pop_back();
    } else {
      r.push_back(x);
    }
    return r;
  }
  Element multiply(const Element& g, const Element& h) const override {
    Element r = g;
    for (std::size_t i = 0; i < count_; ++i) {
      r[i] += h[i];
      if (spec_.vertex(central_index(i)).type == VertexType::Z2) r[i] %= 2;
    }
    for (std::size_t k = count_; k < h.size(); ++k) r = right_multiply(r, static_cast<Letter>(h[k]));
    return r;
  }
  Element inverse(const Element& g) const override {
    Element r(count_, 0);
    for (std::size_t i = 0; i < count_; ++i)
      r[i] = spec_.vertex(central_index(i)).type == VertexType::Z2 ? g[i] : -g[i];
    for (std::size_t k = g.size(); k-- > count_;) r.push_back(alphabet().inverse(static_cast<Letter>(g[k])));
    return r;
  }

 private:
  std::size_t central_index(std::size_t slot) const {
    for (std::size_t v = 0; v < slot_.size(); ++v)
      if (slot_[v] == static_cast<int>(slot)) return v;
    return 0;
  }
  GraphProductSpec spec_;
  std::vector<bool> central_;
  std::vector<int> slot_;
  std::size_t count_ = 0;
};

std::vector<Word> words_up_to(std::size_t k, int n) {
  std::vector<Word> out;
  for (int len = 0; len <= n; ++len)
    for (auto& w : testing_support::all_words(k, len)) out.push_back(std::move(w));
  return out;
}

}  // namespace

TEST_CASE("spec construction and JSON") {
  auto s = GraphProductSpec::from_json(
      R"({"vertices":[{"name":"a","type":"Z"},{"name":"b","type":"Z2"}],"edges":[["a","b"]],"order":["b","a","A"]})");
  CHECK(s.alphabet().names() == std::vector<std::string>{"b", "a", "A"});
  CHECK(s.adjacent(0, 1));
  CHECK(s.vertex_of(0) == 1);
  CHECK(s.exponent(2) == -1);
  CHECK(GraphProductSpec::from_json(s.to_json()).to_json() == s.to_json());
  CHECK(graph("free").alphabet().names() == std::vector<std::string>{"a", "A", "b", "B"});
  CHECK_THROWS_AS(GraphProductSpec::from_json(R"({"vertices":[{"name":"a"}],"edges":[["a","a"]]})"), std::invalid_argument);
  CHECK_THROWS_AS(GraphProductSpec::from_json(R"({"vertices":[{"name":"a"},{"name":"b"}],"edges":[["a","b"],["b","a"]]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(GraphProductSpec::from_json(R"({"vertices":[{"name":"a"}],"edges":[["a","q"]]})"), std::invalid_argument);
  CHECK_THROWS_AS(GraphProductSpec::from_json(R"({"vertices":[{"name":"a","type":"Q"}]})"), std::invalid_argument);
  CHECK_THROWS_AS(GraphProductSpec::from_json(R"({"vertices":[{"name":"a"}],"order":["a"]})"), std::invalid_argument);
  CHECK_THROWS_AS(GraphProductSpec::from_json("{"), std::invalid_argument);
}

TEST_CASE("projections") {
  auto g = GraphProductSpec({{"a", VertexType::Z}, {"b", VertexType::Z}, {"c", VertexType::Z}}, {{"a", "b"}, {"b", "c"}});
  const auto& A = g.alphabet();
  auto w = A.parse("ac");
  CHECK(rho(g, 0, w).format(A) == "a$");
  CHECK(rho(g, 1, w).format(A).empty());
  CHECK(rho(g, 2, w).format(A) == "$c");
  CHECK(rho(g, 0, A.parse("aAa")).format(A) == "aAa");
  CHECK(rho(g, 0, A.parse("ab")).format(A) == "a");
  CHECK(rho(g, 0, A.parse("acbc")).segments().size() == 3);
}

TEST_CASE("membership examples") {
  auto free = graph("free");
  auto z2 = graph("Z2");
  auto racg = graph("racg_edge");
  CHECK_FALSE(gp_geodesic(free, free.alphabet().parse("aA")));
  CHECK(gp_geodesic(z2, z2.alphabet().parse("aba")));
  CHECK_FALSE(gp_geodesic(racg, racg.alphabet().parse("aa")));
  CHECK(gp_geodesic(free, free.alphabet().parse("abA")));
  CHECK_FALSE(gp_conjgeo(free, free.alphabet().parse("abA")));
  CHECK(gp_conjgeo(z2, z2.alphabet().parse("abAB")) == false);
  CHECK(gp_conjgeo(z2, z2.alphabet().parse("aabb")));
  auto p = graph("path3");
  CHECK_FALSE(gp_conjgeo(p, p.alphabet().parse("acA")));
  CHECK(gp_conjgeo(p, p.alphabet().parse("acac")));
}

TEST_CASE("word problem oracle against direct-product arithmetic") {
  for (const auto& name : graphs) {
    CAPTURE(name);
    auto spec = graph(name);
    auto gp = gp_oracle(spec);
    JoinOracle join(spec);
    std::map<Element, Element> a2b, b2a;
    for (const auto& w : words_up_to(spec.alphabet().size(), 6)) {
      auto x = gp->evaluate(w), y = join.evaluate(w);
      CHECK(a2b.emplace(x, y).first->second == y);
      CHECK(b2a.emplace(y, x).first->second == x);
      CHECK(gp->multiply(x, gp->inverse(x)) == gp->identity());
    }
  }
  auto z2 = graph("Z2");
  auto o = gp_oracle(z2);
  CHECK(o->evaluate(z2.alphabet().parse("ab")) == o->evaluate(z2.alphabet().parse("ba")));
  auto f = graph("free");
  auto of = gp_oracle(f);
  CHECK(of->evaluate(f.alphabet().parse("ab")) != of->evaluate(f.alphabet().parse("ba")));
  auto r = graph("racg_edge");
  auto orr = gp_oracle(r);
  CHECK(orr->evaluate(r.alphabet().parse("abab")) == orr->identity());
}

TEST_CASE("projection criteria against brute force up to length 7") {
  for (const auto& name : graphs) {
    CAPTURE(name);
    auto spec = graph(name);
    JoinOracle join(spec);
    SampleOptions opt;
    opt.budget = 1;
    LanguageLab lab(join, 7, opt);
    std::size_t geo = 0, conj = 0;
    for (const auto& w : words_up_to(spec.alphabet().size(), 7)) {
      bool g = gp_geodesic(spec, w);
      bool c = gp_conjgeo(spec, w);
      CHECK(g == lab.member(LanguageKind::geo, w));
      CHECK(c == lab.member(LanguageKind::conjgeo, w));
      CHECK(c == lab.member(LanguageKind::cycgeo, w));
      if (c && !w.empty()) {
        Word rot(w.begin() + 1, w.end());
        rot.push_back(w.front());
        CHECK(gp_conjgeo(spec, rot));
      }
      geo += g;
      conj += c;
    }
    if (name == "Z2" || name == "racg_edge") CHECK(geo == conj);
    else CHECK(geo > conj);
    CHECK(lab.sample(LanguageKind::cycgeo).words == lab.sample(LanguageKind::conjgeo).words);
  }
}
