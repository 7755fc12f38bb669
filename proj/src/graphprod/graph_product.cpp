#include "conjlang/graphprod/graph_product.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace conjlang {

namespace {

std::string inverse_name(const std::string& name) {
  std::string up = name;
  for (auto& c : up) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return up == name ? name + "^-1" : up;
}

}  // namespace

GraphProductSpec::GraphProductSpec(std::vector<GraphVertex> vertices,
                                   const std::vector<std::pair<std::string, std::string>>& edges,
                                   const std::vector<std::string>& order)
    : vertices_(std::move(vertices)) {
  const std::size_t n = vertices_.size();
  std::set<std::string> names;
  for (const auto& v : vertices_)
    if (v.name.empty() || !names.insert(v.name).second) throw std::invalid_argument("empty or repeated vertex name");
  adjacent_.assign(n * n, false);
  for (const auto& [x, y] : edges) {
    auto i = vertex_index(x), j = vertex_index(y);
    if (i == j) throw std::invalid_argument("loop at vertex " + x);
    if (adjacent_[i * n + j]) throw std::invalid_argument("repeated edge " + x + "-" + y);
    adjacent_[i * n + j] = adjacent_[j * n + i] = true;
  }

  // Letters in default order: generator, then inverse for Z vertices.
  struct Info {
    std::string name, inverse;
    std::size_t vertex;
    int exponent;
  };
  std::vector<Info> letters;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& v = vertices_[i];
    if (v.type == VertexType::Z2) {
      letters.push_back({v.name, "", i, 1});
    } else {
      auto inv = inverse_name(v.name);
      letters.push_back({v.name, inv, i, 1});
      letters.push_back({inv, v.name, i, -1});
    }
  }
  std::set<std::string> letter_names;
  for (const auto& l : letters)
    if (!letter_names.insert(l.name).second) throw std::invalid_argument("letter name used twice: " + l.name);
  if (!order.empty()) {
    if (order.size() != letters.size() || std::set<std::string>(order.begin(), order.end()) != letter_names)
      throw std::invalid_argument("order must list every letter exactly once");
    std::vector<Info> sorted;
    for (const auto& name : order)
      sorted.push_back(*std::find_if(letters.begin(), letters.end(), [&](const Info& l) { return l.name == name; }));
    letters = std::move(sorted);
  }
  std::vector<Alphabet::Symbol> symbols;
  for (const auto& l : letters) {
    symbols.push_back({l.name, l.inverse});
    vertex_of_.push_back(l.vertex);
    exponent_.push_back(l.exponent);
  }
  alphabet_ = Alphabet(std::move(symbols));
}

std::size_t GraphProductSpec::vertex_index(const std::string& name) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i].name == name) return i;
  throw std::invalid_argument("unknown vertex " + name);
}

GraphProductSpec GraphProductSpec::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("graph JSON: ") + e.what());
  }
  try {
    std::vector<GraphVertex> vs;
    for (const auto& v : j.at("vertices")) {
      std::string type = v.value("type", "Z");
      if (type != "Z" && type != "Z2") throw std::invalid_argument("vertex type must be Z or Z2");
      vs.push_back({v.at("name").get<std::string>(), type == "Z" ? VertexType::Z : VertexType::Z2});
    }
    std::vector<std::pair<std::string, std::string>> es;
    for (const auto& e : j.value("edges", nlohmann::json::array())) {
      if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edges are pairs of vertex names");
      es.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
    std::vector<std::string> order = j.value("order", std::vector<std::string>{});
    return GraphProductSpec(std::move(vs), es, order);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("graph JSON: ") + e.what());
  }
}

std::string GraphProductSpec::to_json() const {
  nlohmann::ordered_json j;
  j["vertices"] = nlohmann::ordered_json::array();
  for (const auto& v : vertices_) j["vertices"].push_back({{"name", v.name}, {"type", v.type == VertexType::Z ? "Z" : "Z2"}});
  j["edges"] = nlohmann::ordered_json::array();
  for (std::size_t a = 0; a < vertices_.size(); ++a)
    for (std::size_t b = a + 1; b < vertices_.size(); ++b)
      if (adjacent(a, b)) j["edges"].push_back({vertices_[a].name, vertices_[b].name});
  j["order"] = alphabet_.names();
  return j.dump();
}

std::vector<Word> ProjectedWord::segments() const {
  std::vector<Word> out(1);
  for (Letter x : letters) {
    if (x == dollar) out.emplace_back();
    else out.back().push_back(x);
  }
  return out;
}

std::string ProjectedWord::format(const Alphabet& a) const {
  std::string s;
  for (Letter x : letters) s += x == dollar ? "$" : a.name(x);
  return s;
}

ProjectedWord rho(const GraphProductSpec& spec, std::size_t i, const Word& w) {
  ProjectedWord r;
  for (Letter x : w) {
    auto j = spec.vertex_of(x);
    if (j == i) r.letters.push_back(x);
    else if (!spec.adjacent(i, j)) r.letters.push_back(ProjectedWord::dollar);
  }
  return r;
}

namespace {

// Geo of a cyclic vertex group: Z gives a* ∪ (a⁻¹)*, Z/2 gives {ε, a}.
bool vertex_geodesic(const GraphProductSpec& spec, std::size_t i, const Word& u) {
  if (spec.vertex(i).type == VertexType::Z2) return u.size() <= 1;
  return std::all_of(u.begin(), u.end(), [&](Letter x) { return x == u.front(); });
}

}  // namespace

bool gp_geodesic(const GraphProductSpec& spec, const Word& w) {
  for (std::size_t i = 0; i < spec.vertex_count(); ++i)
    for (const auto& seg : rho(spec, i, w).segments())
      if (!vertex_geodesic(spec, i, seg)) return false;
  return true;
}

bool gp_conjgeo(const GraphProductSpec& spec, const Word& w) {
  for (std::size_t i = 0; i < spec.vertex_count(); ++i) {
    auto segs = rho(spec, i, w).segments();
    // For cyclic vertex groups ConjGeo_i = Geo_i.
    if (segs.size() == 1) {
      if (!vertex_geodesic(spec, i, segs[0])) return false;
      continue;
    }
    Word wrap = segs.back();
    wrap.insert(wrap.end(), segs.front().begin(), segs.front().end());
    if (!vertex_geodesic(spec, i, wrap)) return false;
    for (std::size_t k = 1; k + 1 < segs.size(); ++k)
      if (!vertex_geodesic(spec, i, segs[k])) return false;
  }
  return true;
}

namespace {

class GraphProductOracle : public GroupOracle {
 public:
  explicit GraphProductOracle(const GraphProductSpec& spec) : GroupOracle(spec.alphabet()), spec_(spec) {}

  std::string name() const override { return "graph_product"; }
  Element identity() const override { return {}; }
  Element generator(Letter x) const override { return {static_cast<std::int64_t>(x)}; }

  Element multiply(const Element& g, const Element& h) const override {
    Word w = to_word(g);
    for (auto x : h) push(w, static_cast<Letter>(x));
    return canonical(w);
  }
  Element right_multiply(const Element& g, Letter x) const override {
    Word w = to_word(g);
    push(w, x);
    return canonical(w);
  }
  Element inverse(const Element& g) const override { return canonical(alphabet().inverse(to_word(g))); }
  std::string describe(const Element& g) const override { return alphabet().format(to_word(g)); }

 private:
  bool commute(Letter x, Letter y) const { return spec_.adjacent(spec_.vertex_of(x), spec_.vertex_of(y)); }
  bool cancels(Letter x, Letter y) const { return alphabet().inverse(x) == y; }

  static Word to_word(const Element& g) { return Word(g.begin(), g.end()); }

  // Appends x to a reduced word, cancelling it against the last letter of
  // its vertex when everything after that letter commutes with x.
  void push(Word& w, Letter x) const {
    for (std::size_t k = w.size(); k-- > 0;) {
      if (spec_.vertex_of(w[k]) == spec_.vertex_of(x)) {
        if (cancels(w[k], x)) {
          w.erase(w.begin() + static_cast<long>(k));
          return;
        }
        break;
      }
      if (!commute(w[k], x)) break;
    }
    w.push_back(x);
  }

  // Lexicographically least rearrangement by commuting adjacent letters:
  // repeatedly take the least letter that commutes with everything before it.
  Element canonical(Word w) const {
    Element out;
    out.reserve(w.size());
    while (!w.empty()) {
      std::size_t best = 0;
      for (std::size_t k = 0; k < w.size(); ++k) {
        bool free = true;
        for (std::size_t j = 0; j < k && free; ++j) free = commute(w[j], w[k]);
        if (free && w[k] < w[best]) best = k;
      }
      out.push_back(w[best]);
      w.erase(w.begin() + static_cast<long>(best));
    }
    return out;
  }

  GraphProductSpec spec_;
};

}  // namespace

std::unique_ptr<GroupOracle> gp_oracle(const GraphProductSpec& spec) { return std::make_unique<GraphProductOracle>(spec); }

}  // namespace conjlang
