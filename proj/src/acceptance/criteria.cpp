#include "conjlang/acceptance/criteria.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "conjlang/acceptance/burau.hpp"
#include "conjlang/fsa/operations.hpp"
#include "conjlang/garside/artin_dihedral.hpp"
#include "conjlang/garside/element.hpp"
#include "conjlang/garside/oracle.hpp"
#include "conjlang/graphprod/graph_product.hpp"
#include "conjlang/groups/paper_languages.hpp"
#include "conjlang/groups/registry.hpp"
#include "conjlang/groups/witness.hpp"
#include "conjlang/langkit/ball.hpp"
#include "conjlang/langkit/fftp.hpp"
#include "conjlang/langkit/languages.hpp"
#include "conjlang/series/growth.hpp"

namespace conjlang {

namespace {

// Collects the outcome of one criterion: every failed check adds a note,
// the first few of which make up the detail line.
struct Outcome {
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  std::vector<Artifact> artifacts;

  void check(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  std::string detail() const {
    const auto& src = failures.empty() ? notes : failures;
    std::string s;
    for (std::size_t i = 0; i < src.size() && i < 6; ++i) s += (i ? "; " : "") + src[i];
    if (src.size() > 6) s += "; ... (" + std::to_string(src.size()) + " in all)";
    return s;
  }
};

std::vector<Word> words_of_length(std::size_t k, int n) {
  std::vector<Word> out{Word{}};
  for (int len = 0; len < n; ++len) {
    std::vector<Word> next;
    next.reserve(out.size() * k);
    for (const auto& w : out)
      for (Letter x = 0; x < k; ++x) {
        next.push_back(w);
        next.back().push_back(x);
      }
    out = std::move(next);
  }
  return out;
}

std::vector<Word> words_up_to(std::size_t k, int n) {
  std::vector<Word> out;
  for (int len = 0; len <= n; ++len)
    for (auto& w : words_of_length(k, len)) out.push_back(std::move(w));
  return out;
}

std::set<Word> flatten(const std::vector<std::vector<Word>>& levels) {
  std::set<Word> s;
  for (const auto& l : levels) s.insert(l.begin(), l.end());
  return s;
}

std::vector<Word> rotations(const Word& w) {
  std::vector<Word> out;
  for (std::size_t r = 0; r < std::max<std::size_t>(w.size(), 1); ++r) {
    Word v(w.begin() + static_cast<long>(r), w.end());
    v.insert(v.end(), w.begin(), w.begin() + static_cast<long>(r));
    out.push_back(std::move(v));
  }
  return out;
}

std::string join(const std::vector<BigInt>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + v[i].str();
  return s;
}

// ---------------------------------------------------------------------------

void growth_series(Outcome& out) {
  const int n = 20;
  auto g = make_group("zd2_Z");
  auto counts = language_sample(*g, LanguageKind::conjsl, n).counts();
  std::vector<BigInt> got(counts.begin(), counts.end());
  bool pattern = got[0] == 1 && got[1] == 3;
  for (int i = 2; i <= n; ++i) pattern = pattern && got[i] == (i % 2 == 0 ? 2 * i + 3 : 2 * i + 2);
  out.check(pattern, "coefficients do not follow 1, 3, 4k+3, 4k+4: " + join(got));

  IntPolynomial num = IntPolynomial({1, 1}) * IntPolynomial({1, 2, 3, -1, -1});
  IntPolynomial den = IntPolynomial({1, 0, -1}) * IntPolynomial({1, 0, -1});
  RationalFunction f(num, den);
  auto series = expand(f, n);
  out.check(series == got, "expansion " + join(series) + " differs from enumeration " + join(got));
  out.notes.push_back("ConjSL(G,Z) counts to n=20: " + join(got));
  out.artifacts.push_back({"series_G_Z.tsv", counts_tsv(got)});
  out.artifacts.push_back({"series_G_Z.txt", f.to_string() + "\n"});
}

void language_identities(Outcome& out, const AcceptanceOptions& opt) {
  const int n = 10;
  struct Identity {
    std::string expr;
    LanguageKind kind;
  };
  const std::vector<std::pair<std::string, std::vector<Identity>>> groups = {
      {"zd2_Z", {{"geocl_G_Z", LanguageKind::conjgeo}, {"mincl_G_Z", LanguageKind::mincl}}},
      {"zd2_X",
       {{"geocl_G_X", LanguageKind::conjgeo}, {"mincl_G_X", LanguageKind::mincl}, {"sphcl_G_X", LanguageKind::conjsl}}},
      {"zd8_Zp",
       {{"geo_K_Zp", LanguageKind::geo},
        {"sl_K_Zp", LanguageKind::sl},
        {"geocl_K_Zp", LanguageKind::conjgeo},
        {"mincl_K_Zp", LanguageKind::mincl}}},
  };
  std::string reports;
  int equal = 0, total = 0;
  for (const auto& [tag, ids] : groups) {
    auto o = make_group(tag);
    LanguageLab lab(*o, n);
    for (const auto& id : ids) {
      std::string name = id.expr;
      if (opt.corrected) {
        for (const auto& e : paper_expressions())
          if (e.name == name + "_corrected") name = e.name;
      }
      auto it = opt.replacements.find(name);
      Dfa d = it != opt.replacements.end() ? it->second : paper_language_dfa(name);
      auto s = lab.sample(id.kind);
      ++total;
      if (!(d.alphabet() == s.alphabet)) {
        out.check(false, name + ": alphabet differs from " + tag);
        continue;
      }
      auto eq = equivalent(minimize(Dfa::from_words(s.alphabet, [&] {
                             std::vector<Word> ws;
                             for (const auto& l : s.words) ws.insert(ws.end(), l.begin(), l.end());
                             return ws;
                           }())),
                           restrict_length(d, 0, n));
      auto cmp = compare_sample_to_dfa(s, d);
      reports += name + "\t" + report_json(s, cmp) + "\n";
      if (eq.equal) {
        ++equal;
      } else {
        bool in_sample = cmp.word && cmp.in_sample;
        out.check(false, name + " vs " + to_string(id.kind) + "(" + tag + ") differs at '" +
                             s.alphabet.format(*eq.counterexample) + "' (" +
                             (in_sample ? "enumerated, not in expression" : "in expression, not enumerated") + ")");
      }
    }
  }
  out.notes.push_back(std::to_string(equal) + "/" + std::to_string(total) + " identities equal at n=10" +
                      (opt.corrected ? " (corrected expressions)" : ""));
  out.artifacts.push_back({"identities.tsv", reports});
}

void witnesses(Outcome& out) {
  struct Expect {
    std::string pattern;
    std::function<bool(int, int)> member;
  };
  const std::vector<Expect> expects = {
      {"c*tc*t", [](int m, int n) { return m < n; }},
      {"c*tc*utu", [](int m, int n) { return m >= n; }},
      {"c*tc*tu", [](int m, int n) { return m < n; }},
  };
  for (const auto& e : expects) {
    const auto& p = witness_pattern(e.pattern);
    auto o = make_group(p.group);
    auto t = nonregularity_witness(*o, p);
    std::size_t bad = 0;
    for (const auto& r : t.rows)
      if (r.member != e.member(r.params[0], r.params[1])) ++bad;
    out.check(bad == 0 && !t.rows.empty(), e.pattern + ": " + std::to_string(bad) + " rows differ");
    out.notes.push_back(e.pattern + " " + std::to_string(t.rows.size()) + " rows");
    std::string file = "witness_" + e.pattern + ".tsv";
    std::replace(file.begin(), file.end(), '*', 'S');
    out.artifacts.push_back({file, witness_tsv(t)});
  }
}

void cyclic_closures(Outcome& out, unsigned seed) {
  const Alphabet abc = Alphabet::plain({"a", "b", "c"});
  std::mt19937 rng(seed);
  std::uniform_int_distribution<State> pick(0, 3);
  std::bernoulli_distribution acc(0.4);
  int agree = 0;
  for (int i = 0; i < 100; ++i) {
    std::vector<bool> accept(4);
    for (auto&& a : accept) a = acc(rng);
    std::vector<State> delta(4 * abc.size());
    for (auto& t : delta) t = pick(rng);
    Dfa d(abc, 4, 0, accept, delta);
    std::set<Word> expected;
    for (const auto& w : flatten(enumerate(d, 8)))
      for (const auto& r : rotations(w)) expected.insert(r);
    auto got = flatten(enumerate(to_dfa(cyclic_closure(d)), 8));
    if (got == expected) ++agree;
    else out.check(false, "machine " + std::to_string(i) + " differs");
  }
  out.notes.push_back(std::to_string(agree) + "/100 random machines agree to length 8");
}

Dfa free_geodesics(const Alphabet& a) {
  std::vector<Regex> pairs;
  for (Letter x = 0; x < a.size(); ++x) pairs.push_back(Regex::word({a.name(x), a.name(a.inverse(x))}));
  Regex sigma = Regex::star(Regex::any_of(a.names()));
  return complement(to_dfa(Regex::concat({sigma, Regex::union_of(pairs), sigma}), a));
}

void free_pipeline(Outcome& out) {
  auto f2 = make_group("free:2");
  const Alphabet& a = f2->alphabet();
  Dfa cg = conjgeo_pipeline(*f2, 1, free_geodesics(a), 3);
  auto cyclically_reduced = [&](const Word& w) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (a.inverse(w[i]) == w[i + 1]) return false;
    return w.size() < 2 || a.inverse(w.back()) != w.front();
  };
  std::set<Word> expected;
  for (const auto& w : words_up_to(a.size(), 10))
    if (cyclically_reduced(w)) expected.insert(w);
  auto got = flatten(enumerate(cg, 10));
  out.check(got == expected, "pipeline output differs from the cyclically reduced words");
  out.notes.push_back(std::to_string(got.size()) + " words to n=10, " + std::to_string(cg.state_count()) + " states");
}

void piecewise_z2(Outcome& out) {
  auto z = make_group("free_abelian:2");
  const Alphabet& a = z->alphabet();
  std::vector<Word> W;
  for (const char* w : {"aA", "Aa", "bB", "Bb"}) W.push_back(a.parse(w));
  Dfa pe = piecewise_excluding(a, W);
  LanguageLab lab(*z, 8);
  for (auto k : {LanguageKind::geo, LanguageKind::conjgeo}) {
    auto c = compare_sample_to_dfa(lab.sample(k), pe);
    out.check(c.equal, to_string(k) + " differs at '" + (c.word ? a.format(*c.word) : "") + "'");
  }
  out.notes.push_back("Geo = ConjGeo = piecewise_excluding(aA,Aa,bB,Bb) to n=8, " +
                      std::to_string(lab.sample(LanguageKind::geo).total()) + " words");
}

void dihedral_artin(Outcome& out) {
  for (int m : {3, 4}) {
    auto model = make_model("dihedral:" + std::to_string(m));
    auto bur = reference::burau_over_atoms(*model);
    const std::string tag = "m=" + std::to_string(m);
    Ball ball(bur, 8);
    std::size_t bad = 0, words = 0;
    for (const auto& w : words_up_to(4, 8)) {
      ++words;
      if (mm_geodesic(m, w) != ball.is_geodesic(w).value()) ++bad;
    }
    out.check(bad == 0, tag + ": mm_geodesic differs from BFS on " + std::to_string(bad) + " words");

    // Words of length ≤ 8 by element, for the conjugate search.
    std::map<Element, std::vector<Word>> by_element;
    for (const auto& w : words_up_to(4, 8)) by_element[bur.evaluate(w)].push_back(w);
    Ball conj(bur, 4);
    std::size_t classes = 0;
    for (int len = 2; len <= 8; len += 2)
      for (const auto& w : words_of_length(4, len)) {
        if (!is_square_word(w)) continue;
        ++classes;
        auto g = bur.evaluate(w);
        std::set<Word> found;
        for (Ball::Id id = 0; id < conj.size(); ++id) {
          auto it = by_element.find(bur.conjugate(g, conj.element(id)));
          if (it == by_element.end()) continue;
          for (const auto& u : it->second)
            if (u.size() <= w.size()) found.insert(u);
        }
        auto cls = equal_length_class(m, w);
        if (found != std::set<Word>(cls.begin(), cls.end()))
          out.check(false, tag + ": class of " + dihedral_alphabet().format(w) + " differs from conjugator search");
      }
    for (int mm = 3; mm <= 4; ++mm)
      for (int nn = 3; nn <= 4; ++nn) {
        auto r = dihedral_conjsl_member(m, mm, nn);
        out.check(r.in_range && r.member == (mm >= nn),
                  tag + ": member(" + std::to_string(mm) + "," + std::to_string(nn) + ") wrong");
      }
    out.notes.push_back(tag + ": " + std::to_string(words) + " words, " + std::to_string(classes) + " square words");
  }
}

void garside_engine(Outcome& out) {
  for (const std::string tag : {"braid:3", "dihedral:3"}) {
    auto m = make_model(tag);
    auto bur_atoms = reference::burau_over_atoms(*m);
    std::map<Element, GarsideElement> by_matrix;
    std::map<GarsideElement, Element> by_nf;
    std::size_t clash = 0;
    for (const auto& w : words_up_to(4, 6)) {
      auto mat = bur_atoms.evaluate(w);
      auto nf = normalize(*m, w);
      if (by_matrix.emplace(mat, nf).first->second != nf) ++clash;
      if (by_nf.emplace(nf, mat).first->second != mat) ++clash;
    }
    out.check(clash == 0, tag + ": normal form not unique (" + std::to_string(clash) + " clashes)");

    auto bur = reference::burau_over_simples(*m);
    GarsideOracle g(m, GeneratorSet::simples);
    Ball ball(bur, 3);
    const int K = m->conj_bound();
    Ball conjugators(g, K);
    std::size_t len_bad = 0, shorten_bad = 0, shortened = 0;
    for (Ball::Id id = 0; id < ball.size(); ++id) {
      auto x = GarsideOracle::decode(g.evaluate(ball.normal_form(id)));
      if (inf_sup_len(x).length != ball.length(id)) ++len_bad;
      auto r = conj_shorten(*m, x, K);
      auto e = exhaustive_shorten(g, conjugators, x, K);
      if (r.shortened != e.has_value()) ++shorten_bad;
      shortened += r.shortened;
    }
    out.check(len_bad == 0, tag + ": length formula differs from BFS on " + std::to_string(len_bad) + " elements");
    out.check(shorten_bad == 0, tag + ": conj_shorten disagrees with search on " + std::to_string(shorten_bad));
    out.notes.push_back(tag + ": " + std::to_string(by_nf.size()) + " elements from words <= 6, ball " +
                        std::to_string(ball.size()) + ", K=" + std::to_string(K) + ", " + std::to_string(shortened) +
                        " shortenable");
  }
}

void infinite_dihedral(Outcome& out) {
  auto d = make_group("inf_dihedral");
  const Alphabet& a = d->alphabet();
  auto s = language_sample(*d, LanguageKind::conjsl, 15);
  // {ε, s} ∪ x x* ∪ {xs}
  Regex r = Regex::union_of({Regex::epsilon(), Regex::literal("s"), Regex::plus(Regex::literal("x")),
                             Regex::word({"x", "s"})});
  auto c = compare_sample_to_dfa(s, to_dfa(r, a));
  out.check(c.equal, "ConjSL differs at '" + (c.word ? a.format(*c.word) : "") + "'");
  auto counts = s.counts();
  bool constant = true;
  for (std::size_t k = 3; k < counts.size(); ++k) constant = constant && counts[k] == counts[2 + 1];
  out.check(constant, "counting sequence not constant from length 3");
  std::string cs;
  for (auto v : counts) cs += (cs.empty() ? "" : " ") + std::to_string(v);
  out.notes.push_back("counts to n=15: " + cs);
  out.artifacts.push_back({"conjsl_inf_dihedral.tsv", sample_tsv(s)});
}

GraphProductSpec test_graph(const std::string& name) {
  using V = GraphVertex;
  auto Z = VertexType::Z;
  auto Z2 = VertexType::Z2;
  if (name == "free") return GraphProductSpec({V{"a", Z}, V{"b", Z}}, {});
  if (name == "Z2") return GraphProductSpec({V{"a", Z}, V{"b", Z}}, {{"a", "b"}});
  if (name == "path3") return GraphProductSpec({V{"a", Z}, V{"b", Z}, V{"c", Z}}, {{"a", "b"}, {"b", "c"}});
  if (name == "racg_edge") return GraphProductSpec({V{"a", Z2}, V{"b", Z2}}, {{"a", "b"}});
  return GraphProductSpec({V{"a", Z2}, V{"b", Z2}, V{"c", Z2}}, {{"a", "b"}, {"b", "c"}});
}
const std::vector<std::string> test_graphs = {"free", "Z2", "path3", "racg_edge", "racg_path3"};

void lattice(Outcome& out) {
  const int n = 7;
  struct Shipped {
    std::string name;
    std::unique_ptr<GroupOracle> oracle;
  };
  std::vector<Shipped> oracles;
  for (const std::string tag : {"zd2_Z", "zd2_X", "zd8_Zp", "zd8_Xp", "free:2", "free_abelian:2", "inf_dihedral"})
    oracles.push_back({tag, make_group(tag)});
  for (const std::string tag : {"braid:3", "dihedral:3", "dihedral:4"})
    oracles.push_back({tag, std::make_unique<GarsideOracle>(make_model(tag), GeneratorSet::atoms)});
  for (const auto& gname : test_graphs) oracles.push_back({"gp:" + gname, gp_oracle(test_graph(gname))});

  auto sub = [](const std::set<Word>& x, const std::set<Word>& y) {
    return std::includes(y.begin(), y.end(), x.begin(), x.end());
  };
  for (const auto& [name, o] : oracles) {
    SampleOptions opt;
    opt.budget = 1;
    LanguageLab lab(*o, n, opt);
    auto s = [&](LanguageKind k) { return flatten(lab.sample(k).words); };
    auto geo = s(LanguageKind::geo), cyc = s(LanguageKind::cycgeo), cg = s(LanguageKind::conjgeo);
    auto sl = s(LanguageKind::sl), mc = s(LanguageKind::mincl), cs = s(LanguageKind::conjsl);
    bool ok = sub(cs, mc) && sub(mc, sl) && sub(sl, geo) && sub(mc, cg) && sub(cg, cyc) && sub(cyc, geo);
    for (const auto* lang : {&cyc, &cg})
      for (const auto& w : *lang)
        for (const auto& r : rotations(w)) ok = ok && lang->count(r);
    out.check(ok, name + ": containment or rotation closure fails");
  }
  out.notes.push_back(std::to_string(oracles.size()) + " oracles at n=7");
}

void graph_products(Outcome& out) {
  for (const auto& gname : test_graphs) {
    auto spec = test_graph(gname);
    auto o = gp_oracle(spec);
    SampleOptions opt;
    opt.budget = 1;
    LanguageLab lab(*o, 7, opt);
    std::size_t geo_bad = 0, cg_bad = 0;
    for (const auto& w : words_up_to(spec.alphabet().size(), 7)) {
      if (gp_geodesic(spec, w) != lab.member(LanguageKind::geo, w)) ++geo_bad;
      if (gp_conjgeo(spec, w) != lab.member(LanguageKind::conjgeo, w)) ++cg_bad;
    }
    out.check(geo_bad == 0, gname + ": gp_geodesic differs on " + std::to_string(geo_bad) + " words");
    out.check(cg_bad == 0, gname + ": gp_conjgeo differs on " + std::to_string(cg_bad) + " words");
    out.check(lab.sample(LanguageKind::cycgeo).words == lab.sample(LanguageKind::conjgeo).words,
              gname + ": CycGeo != ConjGeo");
  }
  out.notes.push_back(std::to_string(test_graphs.size()) + " graphs to length 7");
}

const std::vector<std::string> titles = {
    "(G,Z) conjugacy growth series",
    "worked-example language identities",
    "non-regularity witness tables",
    "cyclic closure on random machines",
    "free-group conjugacy geodesic pipeline",
    "Z^2 piecewise excluding",
    "dihedral Artin geodesics and conjugacy",
    "Garside engine",
    "infinite dihedral ConjSL",
    "containment lattice and rotation closure",
    "graph product criteria",
};

}  // namespace

std::vector<int> criterion_ids() { return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}; }

std::string criterion_title(int id) {
  if (id < 1 || id > static_cast<int>(titles.size())) throw std::out_of_range("no criterion " + std::to_string(id));
  return titles[static_cast<std::size_t>(id - 1)];
}

CriterionResult run_criterion(int id, const AcceptanceOptions& options) {
  CriterionResult r;
  r.id = id;
  r.title = criterion_title(id);
  Outcome out;
  try {
    switch (id) {
      case 1: growth_series(out); break;
      case 2: language_identities(out, options); break;
      case 3: witnesses(out); break;
      case 4: cyclic_closures(out, options.seed); break;
      case 5: free_pipeline(out); break;
      case 6: piecewise_z2(out); break;
      case 7: dihedral_artin(out); break;
      case 8: garside_engine(out); break;
      case 9: infinite_dihedral(out); break;
      case 10: lattice(out); break;
      case 11: graph_products(out); break;
    }
  } catch (const std::exception& e) {
    out.failures.push_back(std::string("exception: ") + e.what());
  }
  r.pass = out.failures.empty();
  r.detail = out.detail();
  r.artifacts = std::move(out.artifacts);
  return r;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream s;
  s << (r.pass ? "PASS" : "FAIL") << "  " << r.id << (r.id < 10 ? "   " : "  ") << r.title << ": " << r.detail;
  return s.str();
}

}  // namespace conjlang
