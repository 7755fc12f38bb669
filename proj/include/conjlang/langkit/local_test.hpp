#pragma once

#include <vector>

#include "conjlang/langkit/languages.hpp"

namespace conjlang {

/// Two words with the same length-(k−1) prefix and suffix and the same set
/// of length-k factors, one in the language and one not.
struct LocalViolation {
  Word member;
  Word non_member;
};

/// Scans every word up to the sample bound. An empty result is evidence
/// (not proof) that the language is k-locally testable. Reports at most
/// `limit` violations, one per offending signature.
std::vector<LocalViolation> local_testability_report(const LanguageSample& s, int k, std::size_t limit = 20);

}  // namespace conjlang
