#pragma once

#include <string>
#include <vector>

#include "conjlang/fsa/automata.hpp"

namespace conjlang {

/// A named regular expression for one of the worked examples, built from
/// regular operations and insertion.
struct PaperExpression {
  std::string name;   // stable tag, e.g. "geocl_G_Z"
  std::string group;  // group tag the alphabet comes from
  std::string kind;   // language it describes ("ConjGeo", ...), or "piece"
  std::string text;   // the expression in plain notation
};

const std::vector<PaperExpression>& paper_expressions();

/// Minimal Dfa of the named expression. Throws std::invalid_argument for an
/// unknown name.
Dfa paper_language_dfa(const std::string& name);

/// Looks up the descriptor; throws std::invalid_argument if unknown.
const PaperExpression& paper_expression(const std::string& name);

}  // namespace conjlang
