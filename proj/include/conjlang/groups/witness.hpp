#pragma once

#include <string>
#include <vector>

#include "conjlang/fsa/automata.hpp"
#include "conjlang/langkit/group_oracle.hpp"
#include "conjlang/langkit/languages.hpp"

namespace conjlang {

/// A two-parameter word family such as c^m t c^n t. Segments are letter
/// names; a segment ending in '*' is a power whose exponent is a parameter.
struct WitnessPattern {
  std::string name;   // e.g. "c*tc*t"
  std::string group;  // group tag
  LanguageKind kind{};
  std::vector<std::string> segments;
  int max_param = 0;  // each exponent ranges over 0..max_param
  int max_sum = -1;   // bound on the exponent sum, -1 for none
};

const std::vector<WitnessPattern>& witness_patterns();
/// Throws std::invalid_argument if unknown.
const WitnessPattern& witness_pattern(const std::string& name);

/// The family as a regular language (every star segment unbounded).
Dfa pattern_dfa(const WitnessPattern& p, const Alphabet& a);

struct WitnessRow {
  std::vector<int> params;
  Word word;
  bool member = false;
};

struct WitnessTable {
  WitnessPattern pattern;
  std::vector<WitnessRow> rows;
};

/// Membership of every family member within the pattern's parameter range
/// (and of length ≤ n when n ≥ 0) in the pattern's language.
WitnessTable nonregularity_witness(const GroupOracle& o, const WitnessPattern& p, int n = -1);

/// "param1<TAB>param2<TAB>member" lines, member as 0/1.
std::string witness_tsv(const WitnessTable& t);

}  // namespace conjlang
