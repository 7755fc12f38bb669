#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "conjlang/fsa/automata.hpp"

namespace conjlang {

/// One file produced while checking a criterion (tables, series, reports).
struct Artifact {
  std::string name;
  std::string content;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  /// One line: what was compared and, on failure, where it broke.
  std::string detail;
  std::vector<Artifact> artifacts;
};

struct AcceptanceOptions {
  /// Compare the worked-example identities against the corrected
  /// expressions where one exists, instead of the displayed ones.
  bool corrected = false;
  /// Expression name -> machine used in its place.
  std::map<std::string, Dfa> replacements;
  unsigned seed = 20240601;
};

/// Criterion ids 1..11 in order.
std::vector<int> criterion_ids();
std::string criterion_title(int id);
/// Throws std::out_of_range for an unknown id.
CriterionResult run_criterion(int id, const AcceptanceOptions& options = {});

/// "PASS  3  title: detail" / "FAIL  3  title: detail".
std::string format_result(const CriterionResult& r);

}  // namespace conjlang
