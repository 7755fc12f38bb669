#pragma once

#include <optional>
#include <string>
#include <vector>

#include "conjlang/fsa/automata.hpp"
#include "conjlang/langkit/ball.hpp"

namespace conjlang {

enum class LanguageKind { geo, cycgeo, conjgeo, sl, mincl, conjsl };

std::string to_string(LanguageKind k);
/// Accepts the display names (Geo, CycGeo, ...) in any case, and the
/// aliases geocpl, geocl, sphl, sphcl.
std::optional<LanguageKind> parse_kind(const std::string& text);
/// Kinds whose definition involves conjugacy classes.
bool conjugacy_dependent(LanguageKind k);

struct LanguageSample {
  Alphabet alphabet;
  LanguageKind kind{};
  int bound = 0;
  /// False when conjugacy lengths came from bounded search.
  bool exact = true;
  /// words[i]: the members of length i, lexicographic.
  std::vector<std::vector<Word>> words;

  bool contains(const Word& w) const;
  std::size_t total() const;
  std::vector<std::size_t> counts() const;
};

struct SampleOptions {
  /// Conjugator radius for groups without a conjugacy key.
  int budget = 2;
  /// Produce conjugacy-dependent samples even without a conjugacy key.
  bool force_inexact = false;
  std::size_t max_elements = 20'000'000;
};

/// Ball of radius n plus conjugacy classes of its elements; computes all
/// six languages from shared data.
///
/// With a conjugacy key the classes are exact: an element of length ≤ n has
/// all minimal-length conjugates inside the ball. Without one, the ball is
/// grown to n + 2·budget and elements are merged under conjugation by
/// single letters while both ends stay inside; the resulting minima are
/// upper bounds and the lab reports itself inexact.
class LanguageLab {
 public:
  LanguageLab(const GroupOracle& o, int n, SampleOptions options = {});

  int bound() const { return n_; }
  bool exact() const { return exact_; }
  const Ball& ball() const { return ball_; }

  /// Class index of a ball element of length ≤ n.
  std::size_t class_of(Ball::Id id) const { return class_[id]; }
  int class_min_length(Ball::Id id) const { return class_min_[class_[id]]; }
  /// Shortlex-least minimal-length element of the class.
  Ball::Id class_representative(Ball::Id id) const { return class_rep_[class_[id]]; }

  /// Membership for words of length ≤ n.
  bool member(LanguageKind kind, const Word& w) const;
  LanguageSample sample(LanguageKind kind) const;

 private:
  void geodesic_walk(Ball::Id id, Word& prefix, LanguageKind kind, std::vector<std::vector<Word>>& out) const;
  bool rotations_geodesic(const Word& w) const;

  const GroupOracle& oracle_;
  int n_;
  bool exact_;
  Ball ball_;
  std::vector<std::size_t> class_;
  std::vector<int> class_min_;
  std::vector<Ball::Id> class_rep_;
};

/// Throws std::runtime_error for a conjugacy-dependent kind on an oracle
/// without a conjugacy key, unless options.force_inexact.
LanguageSample language_sample(const GroupOracle& o, LanguageKind kind, int n, SampleOptions options = {});

struct ConjugacyLength {
  int length = 0;
  /// A word h with |h⁻¹gh| = length, when one was found.
  std::optional<Word> conjugator;
  bool exact = false;
};

/// |g|_c. Exact when the oracle has a conjugacy key; otherwise the result
/// of repeated improvement by conjugators of length ≤ budget.
ConjugacyLength conj_min_length(const GroupOracle& o, const Element& g, int budget, std::size_t max_elements = 5'000'000);

struct SampleComparison {
  bool equal = true;
  /// Shortlex-least word of the symmetric difference.
  std::optional<Word> word;
  /// True if that word is in the sample but not accepted by the machine.
  bool in_sample = false;
};

SampleComparison compare_sample_to_dfa(const LanguageSample& s, const Dfa& d);

/// "n<TAB>word" lines sorted by (n, lex).
std::string sample_tsv(const LanguageSample& s);
/// {"kind":...,"bound":...,"status":"equal"|"divergent","divergence":{...}}
std::string report_json(const LanguageSample& s, const SampleComparison& c);

}  // namespace conjlang
