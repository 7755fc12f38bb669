#include "conjlang/groups/witness.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

#include "conjlang/fsa/operations.hpp"
#include "conjlang/fsa/regex.hpp"

namespace conjlang {

const std::vector<WitnessPattern>& witness_patterns() {
  static const std::vector<WitnessPattern> all = {
      {"a*b*", "zd2_Z", LanguageKind::conjsl, {"a*", "b*"}, 6, -1},
      {"c*tc*t", "zd2_X", LanguageKind::geo, {"c*", "t", "c*", "t"}, 6, 6},
      {"c*tc*utu", "zd8_Xp", LanguageKind::conjsl, {"c*", "t", "c*", "u", "t", "u"}, 4, -1},
      {"c*tc*tu", "zd8_Xp", LanguageKind::conjgeo, {"c*", "t", "c*", "t", "u"}, 4, -1},
  };
  return all;
}

const WitnessPattern& witness_pattern(const std::string& name) {
  for (const auto& p : witness_patterns())
    if (p.name == name) return p;
  throw std::invalid_argument("unknown witness pattern: " + name);
}

namespace {

bool is_power(const std::string& s) { return !s.empty() && s.back() == '*'; }
std::string base(const std::string& s) { return is_power(s) ? s.substr(0, s.size() - 1) : s; }

}  // namespace

Dfa pattern_dfa(const WitnessPattern& p, const Alphabet& a) {
  std::vector<Regex> parts;
  for (const auto& s : p.segments)
    parts.push_back(is_power(s) ? Regex::star(Regex::literal(base(s))) : Regex::literal(s));
  return minimize(to_dfa(Regex::concat(parts), a));
}

WitnessTable nonregularity_witness(const GroupOracle& o, const WitnessPattern& p, int n) {
  const Alphabet& a = o.alphabet();
  int fixed = 0, powers = 0;
  for (const auto& s : p.segments) (is_power(s) ? powers : fixed) += 1;

  std::vector<std::vector<int>> params;
  std::vector<int> cur;
  std::function<void()> rec = [&] {
    if (static_cast<int>(cur.size()) == powers) {
      int sum = 0;
      for (int v : cur) sum += v;
      if (p.max_sum >= 0 && sum > p.max_sum) return;
      if (n >= 0 && sum + fixed > n) return;
      params.push_back(cur);
      return;
    }
    for (int v = 0; v <= p.max_param; ++v) {
      cur.push_back(v);
      rec();
      cur.pop_back();
    }
  };
  rec();

  WitnessTable t{p, {}};
  int longest = 0;
  for (const auto& ps : params) {
    WitnessRow row{ps, {}, false};
    std::size_t k = 0;
    for (const auto& s : p.segments) {
      Letter x = a.at(base(s));
      int reps = is_power(s) ? ps[k++] : 1;
      row.word.insert(row.word.end(), static_cast<std::size_t>(reps), x);
    }
    longest = std::max(longest, static_cast<int>(row.word.size()));
    t.rows.push_back(std::move(row));
  }
  LanguageLab lab(o, longest);
  for (auto& row : t.rows) row.member = lab.member(p.kind, row.word);
  return t;
}

std::string witness_tsv(const WitnessTable& t) {
  std::ostringstream out;
  for (const auto& r : t.rows) {
    for (int v : r.params) out << v << '\t';
    out << (r.member ? 1 : 0) << '\n';
  }
  return out.str();
}

}  // namespace conjlang
