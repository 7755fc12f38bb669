#include "conjlang/fsa/io.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "conjlang/fsa/operations.hpp"
#include "json.hpp"

namespace conjlang {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json alphabet_json(const Alphabet& a) {
  ordered_json arr = ordered_json::array();
  for (Letter x = 0; x < a.size(); ++x) {
    ordered_json s;
    s["name"] = a.name(x);
    s["inverse"] = a.name(a.inverse(x));
    arr.push_back(std::move(s));
  }
  return arr;
}

Alphabet parse_alphabet(const ordered_json& arr) {
  if (!arr.is_array()) throw std::invalid_argument("alphabet must be an array");
  std::vector<Alphabet::Symbol> symbols;
  for (const auto& s : arr) {
    if (s.is_string()) {
      symbols.push_back({s.get<std::string>(), ""});
    } else {
      std::string name = s.at("name").get<std::string>();
      std::string inv = s.contains("inverse") ? s.at("inverse").get<std::string>() : name;
      symbols.push_back({name, inv});
    }
  }
  return Alphabet(std::move(symbols));
}

std::string dot_label(const Alphabet& a, const std::vector<Letter>& letters) {
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) out += ",";
    out += a.name(letters[i]);
  }
  return out;
}

}  // namespace

std::string to_json(const Dfa& d) {
  ordered_json j;
  j["alphabet"] = alphabet_json(d.alphabet());
  j["states"] = d.state_count();
  j["start"] = ordered_json::array({d.start()});
  ordered_json acc = ordered_json::array();
  for (State q = 0; q < d.state_count(); ++q)
    if (d.accepting(q)) acc.push_back(q);
  j["accept"] = acc;
  ordered_json tr = ordered_json::array();
  for (State q = 0; q < d.state_count(); ++q)
    for (Letter x = 0; x < d.alphabet().size(); ++x)
      tr.push_back(ordered_json::array({q, d.alphabet().name(x), d.next(q, x)}));
  j["transitions"] = tr;
  return j.dump();
}

std::string to_json(const Nfa& n) {
  ordered_json j;
  j["alphabet"] = alphabet_json(n.alphabet());
  j["states"] = n.state_count();
  j["start"] = n.starts();
  j["accept"] = n.accepts();
  ordered_json tr = ordered_json::array();
  for (const auto& e : n.edges()) tr.push_back(ordered_json::array({e.from, n.alphabet().name(e.letter), e.to}));
  j["transitions"] = tr;
  ordered_json eps = ordered_json::array();
  for (const auto& [p, q] : n.epsilons()) eps.push_back(ordered_json::array({p, q}));
  j["epsilon"] = eps;
  return j.dump();
}

Nfa nfa_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("automaton json: ") + e.what());
  }
  Alphabet a = parse_alphabet(j.at("alphabet"));
  Nfa n(a, j.at("states").get<std::size_t>());
  const auto& start = j.at("start");
  if (start.is_array()) {
    for (const auto& s : start) n.add_start(s.get<State>());
  } else {
    n.add_start(start.get<State>());
  }
  for (const auto& s : j.at("accept")) n.add_accept(s.get<State>());
  for (const auto& t : j.at("transitions"))
    n.add_edge(t.at(0).get<State>(), a.at(t.at(1).get<std::string>()), t.at(2).get<State>());
  if (j.contains("epsilon"))
    for (const auto& e : j.at("epsilon")) n.add_epsilon(e.at(0).get<State>(), e.at(1).get<State>());
  return n;
}

Dfa dfa_from_json(const std::string& text) {
  Nfa n = nfa_from_json(text);
  const std::size_t k = n.alphabet().size();
  bool deterministic = n.starts().size() == 1 && n.epsilons().empty();
  std::vector<State> delta(n.state_count() * k, static_cast<State>(-1));
  if (deterministic) {
    for (const auto& e : n.edges()) {
      State& slot = delta[e.from * k + e.letter];
      if (slot != static_cast<State>(-1) && slot != e.to) {
        deterministic = false;
        break;
      }
      slot = e.to;
    }
  }
  bool total = deterministic;
  if (deterministic)
    for (State s : delta)
      if (s == static_cast<State>(-1)) total = false;
  if (!total) return determinize(n);
  std::vector<bool> accept(n.state_count(), false);
  for (State q : n.accepts()) accept[q] = true;
  return Dfa(n.alphabet(), n.state_count(), n.starts()[0], std::move(accept), std::move(delta));
}

std::string alphabet_to_json(const Alphabet& a) { return alphabet_json(a).dump(); }

Alphabet alphabet_from_json(const std::string& text) { return parse_alphabet(ordered_json::parse(text)); }

std::string to_dot(const Dfa& d, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n  rankdir=LR;\n  node [shape=circle];\n";
  for (State q = 0; q < d.state_count(); ++q)
    if (d.accepting(q)) out << "  q" << q << " [shape=doublecircle];\n";
  out << "  init [shape=point];\n  init -> q" << d.start() << ";\n";
  for (State q = 0; q < d.state_count(); ++q) {
    std::map<State, std::vector<Letter>> grouped;
    for (Letter x = 0; x < d.alphabet().size(); ++x) grouped[d.next(q, x)].push_back(x);
    for (const auto& [r, letters] : grouped)
      out << "  q" << q << " -> q" << r << " [label=\"" << dot_label(d.alphabet(), letters) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const Nfa& n, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n  rankdir=LR;\n  node [shape=circle];\n";
  for (State q : n.accepts()) out << "  q" << q << " [shape=doublecircle];\n";
  for (std::size_t i = 0; i < n.starts().size(); ++i)
    out << "  init" << i << " [shape=point];\n  init" << i << " -> q" << n.starts()[i] << ";\n";
  std::map<std::pair<State, State>, std::vector<Letter>> grouped;
  for (const auto& e : n.edges()) grouped[{e.from, e.to}].push_back(e.letter);
  for (auto& [key, letters] : grouped) {
    std::sort(letters.begin(), letters.end());
    letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
    out << "  q" << key.first << " -> q" << key.second << " [label=\"" << dot_label(n.alphabet(), letters)
        << "\"];\n";
  }
  for (const auto& [p, q] : n.epsilons()) out << "  q" << p << " -> q" << q << " [label=\"ε\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace conjlang
