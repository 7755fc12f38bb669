#pragma once

#include <string>

#include "conjlang/fsa/automata.hpp"

namespace conjlang {

// Automaton JSON, compact, keys in this order:
//   {"alphabet":[{"name":"a","inverse":"A"},...],"states":N,"start":[...],
//    "accept":[...],"transitions":[[from,"letter",to],...],"epsilon":[[from,to],...]}
// A Dfa is written with a one-element "start" array and no "epsilon" key.

std::string to_json(const Dfa& d);
std::string to_json(const Nfa& n);

/// Reads either form. Missing transitions are left missing.
Nfa nfa_from_json(const std::string& text);
/// Reads either form; nondeterministic or partial input is determinized
/// (a partial machine gets a dead state).
Dfa dfa_from_json(const std::string& text);

std::string alphabet_to_json(const Alphabet& a);
Alphabet alphabet_from_json(const std::string& text);

/// Graphviz rendering; parallel edges are merged into one comma-separated
/// label in alphabet order.
std::string to_dot(const Dfa& d, const std::string& name = "dfa");
std::string to_dot(const Nfa& n, const std::string& name = "nfa");

}  // namespace conjlang
