#include "conjlang/langkit/languages.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "conjlang/fsa/operations.hpp"
#include "json.hpp"

namespace conjlang {

std::string to_string(LanguageKind k) {
  switch (k) {
    case LanguageKind::geo: return "Geo";
    case LanguageKind::cycgeo: return "CycGeo";
    case LanguageKind::conjgeo: return "ConjGeo";
    case LanguageKind::sl: return "SL";
    case LanguageKind::mincl: return "MinCl";
    case LanguageKind::conjsl: return "ConjSL";
  }
  return "?";
}

std::optional<LanguageKind> parse_kind(const std::string& text) {
  std::string t;
  for (char c : text) t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (t == "geo") return LanguageKind::geo;
  if (t == "cycgeo" || t == "geocpl") return LanguageKind::cycgeo;
  if (t == "conjgeo" || t == "geocl") return LanguageKind::conjgeo;
  if (t == "sl" || t == "sphl") return LanguageKind::sl;
  if (t == "mincl") return LanguageKind::mincl;
  if (t == "conjsl" || t == "sphcl") return LanguageKind::conjsl;
  return std::nullopt;
}

bool conjugacy_dependent(LanguageKind k) {
  return k == LanguageKind::conjgeo || k == LanguageKind::mincl || k == LanguageKind::conjsl;
}

bool LanguageSample::contains(const Word& w) const {
  if (static_cast<int>(w.size()) > bound) return false;
  const auto& g = words[w.size()];
  return std::binary_search(g.begin(), g.end(), w);
}

std::size_t LanguageSample::total() const {
  std::size_t t = 0;
  for (const auto& g : words) t += g.size();
  return t;
}

std::vector<std::size_t> LanguageSample::counts() const {
  std::vector<std::size_t> c;
  for (const auto& g : words) c.push_back(g.size());
  return c;
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  // keep the smaller index as root so roots are shortlex-least members
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent[b] = a;
  }
};

}  // namespace

LanguageLab::LanguageLab(const GroupOracle& o, int n, SampleOptions options)
    : oracle_(o),
      n_(n),
      exact_(o.exact_conjugacy()),
      ball_(o, o.exact_conjugacy() ? n : n + 2 * options.budget, options.max_elements) {
  const std::size_t size = ball_.size();
  class_.assign(size, 0);
  if (exact_) {
    std::unordered_map<Element, std::size_t, ElementHash> keys;
    for (Ball::Id id = 0; id < size; ++id) {
      Element key = *o.conj_key(ball_.element(id));
      auto [it, fresh] = keys.emplace(std::move(key), class_min_.size());
      if (fresh) {
        // ids run in shortlex order, so the first member seen is the
        // shortlex-least element of minimal length
        class_min_.push_back(ball_.length(id));
        class_rep_.push_back(id);
      }
      class_[id] = it->second;
    }
    return;
  }
  UnionFind uf(size);
  std::vector<Element> gens;
  for (Letter x = 0; x < o.alphabet().size(); ++x) gens.push_back(o.generator(x));
  for (Ball::Id id = 0; id < size; ++id)
    for (const auto& h : gens)
      if (auto other = ball_.find(o.conjugate(ball_.element(id), h))) uf.unite(id, *other);
  std::unordered_map<std::size_t, std::size_t> index;
  for (Ball::Id id = 0; id < size; ++id) {
    auto root = uf.find(id);
    auto [it, fresh] = index.emplace(root, class_min_.size());
    if (fresh) {
      class_min_.push_back(ball_.length(static_cast<Ball::Id>(root)));
      class_rep_.push_back(static_cast<Ball::Id>(root));
    }
    class_[id] = it->second;
  }
}

bool LanguageLab::rotations_geodesic(const Word& w) const {
  for (const auto& r : rotations(w))
    if (!ball_.is_geodesic(r).value_or(false)) return false;
  return true;
}

bool LanguageLab::member(LanguageKind kind, const Word& w) const {
  if (static_cast<int>(w.size()) > n_) throw std::out_of_range("word longer than the sample bound");
  auto id = ball_.walk(w);
  if (!id) return false;
  const bool geodesic = ball_.is_geodesic(w).value_or(false);
  switch (kind) {
    case LanguageKind::geo: return geodesic;
    case LanguageKind::cycgeo: return geodesic && rotations_geodesic(w);
    case LanguageKind::conjgeo: return geodesic && ball_.length(*id) == class_min_length(*id);
    case LanguageKind::sl: return ball_.normal_form(*id) == w;
    case LanguageKind::mincl: return ball_.normal_form(*id) == w && ball_.length(*id) == class_min_length(*id);
    case LanguageKind::conjsl: return ball_.normal_form(*id) == w && class_representative(*id) == *id;
  }
  return false;
}

void LanguageLab::geodesic_walk(Ball::Id id, Word& prefix, LanguageKind kind,
                                std::vector<std::vector<Word>>& out) const {
  const int len = static_cast<int>(prefix.size());
  bool keep = false;
  switch (kind) {
    case LanguageKind::geo: keep = true; break;
    case LanguageKind::cycgeo: keep = rotations_geodesic(prefix); break;
    case LanguageKind::conjgeo: keep = len == class_min_length(id); break;
    default: break;
  }
  if (keep) out[len].push_back(prefix);
  if (len == n_) return;
  for (Letter x = 0; x < ball_.alphabet().size(); ++x) {
    Ball::Id next = ball_.neighbor(id, x);
    if (next == Ball::npos || ball_.length(next) != len + 1) continue;
    prefix.push_back(x);
    geodesic_walk(next, prefix, kind, out);
    prefix.pop_back();
  }
}

LanguageSample LanguageLab::sample(LanguageKind kind) const {
  LanguageSample s;
  s.alphabet = ball_.alphabet();
  s.kind = kind;
  s.bound = n_;
  s.exact = exact_ || !conjugacy_dependent(kind);
  s.words.resize(n_ + 1);
  if (kind == LanguageKind::geo || kind == LanguageKind::cycgeo || kind == LanguageKind::conjgeo) {
    Word prefix;
    geodesic_walk(0, prefix, kind, s.words);
    return s;
  }
  for (Ball::Id id = 0; id < ball_.size(); ++id) {
    const int len = ball_.length(id);
    if (len > n_) break;
    bool keep = kind == LanguageKind::sl || (kind == LanguageKind::mincl && len == class_min_length(id)) ||
                (kind == LanguageKind::conjsl && class_representative(id) == id);
    if (keep) s.words[len].push_back(ball_.normal_form(id));
  }
  return s;
}

LanguageSample language_sample(const GroupOracle& o, LanguageKind kind, int n, SampleOptions options) {
  if (conjugacy_dependent(kind) && !o.exact_conjugacy() && !options.force_inexact)
    throw std::runtime_error(o.name() + " has no conjugacy key; " + to_string(kind) +
                             " would rest on bounded conjugator search");
  return LanguageLab(o, n, options).sample(kind);
}

ConjugacyLength conj_min_length(const GroupOracle& o, const Element& g, int budget, std::size_t max_elements) {
  int radius = 4;
  std::optional<Ball> ball;
  std::optional<Ball::Id> gid;
  while (true) {
    ball.emplace(o, radius, max_elements);
    gid = ball->find(g);
    if (gid) break;
    radius *= 2;
  }
  const int glen = ball->length(*gid);
  ConjugacyLength out;
  out.length = glen;
  if (o.exact_conjugacy()) {
    out.exact = true;
    const Element key = *o.conj_key(g);
    for (Ball::Id id = 0; id < ball->size() && ball->length(id) <= glen; ++id)
      if (*o.conj_key(ball->element(id)) == key) {
        out.length = ball->length(id);
        break;
      }
    for (Ball::Id h = 0; h < ball->size(); ++h) {
      auto c = ball->find(o.conjugate(g, ball->element(h)));
      if (c && ball->length(*c) == out.length) {
        out.conjugator = ball->normal_form(h);
        break;
      }
    }
    return out;
  }
  Ball conjugators(o, budget, max_elements);
  Element current = g;
  Word certificate;
  while (true) {
    int best = out.length;
    std::optional<Ball::Id> best_h;
    Element best_c;
    for (Ball::Id h = 1; h < conjugators.size(); ++h) {
      Element c = o.conjugate(current, conjugators.element(h));
      auto cid = ball->find(c);
      if (cid && ball->length(*cid) < best) {
        best = ball->length(*cid);
        best_h = h;
        best_c = std::move(c);
      }
    }
    if (!best_h) break;
    out.length = best;
    current = std::move(best_c);
    const Word& hw = conjugators.normal_form(*best_h);
    certificate.insert(certificate.end(), hw.begin(), hw.end());
  }
  out.conjugator = certificate;
  return out;
}

SampleComparison compare_sample_to_dfa(const LanguageSample& s, const Dfa& d) {
  if (!(s.alphabet == d.alphabet())) throw std::invalid_argument("alphabet mismatch");
  auto machine = enumerate(d, s.bound);
  SampleComparison out;
  for (int len = 0; len <= s.bound; ++len) {
    const auto& a = s.words[len];
    const auto& b = machine[len];
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i] < b[j])) {
        out.equal = false;
        out.word = a[i];
        out.in_sample = true;
        return out;
      }
      if (i == a.size() || b[j] < a[i]) {
        out.equal = false;
        out.word = b[j];
        out.in_sample = false;
        return out;
      }
      ++i;
      ++j;
    }
  }
  return out;
}

std::string sample_tsv(const LanguageSample& s) {
  std::string out;
  for (int len = 0; len <= s.bound; ++len)
    for (const auto& w : s.words[len]) out += std::to_string(len) + "\t" + s.alphabet.format(w) + "\n";
  return out;
}

std::string report_json(const LanguageSample& s, const SampleComparison& c) {
  nlohmann::ordered_json j;
  j["kind"] = to_string(s.kind);
  j["bound"] = s.bound;
  j["status"] = c.equal ? "equal" : "divergent";
  if (!c.equal && c.word) {
    nlohmann::ordered_json d;
    d["word"] = s.alphabet.format(*c.word);
    d["length"] = c.word->size();
    d["side"] = c.in_sample ? "sample-only" : "automaton-only";
    j["divergence"] = d;
  }
  if (!s.exact) j["exact"] = false;
  return j.dump();
}

}  // namespace conjlang
