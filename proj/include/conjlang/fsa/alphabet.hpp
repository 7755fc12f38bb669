#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace conjlang {

/// Index of a letter in its alphabet. The index is also its rank in the
/// alphabet's total order.
using Letter = std::uint16_t;
using Word = std::vector<Letter>;

/// Finite inverse-closed letter set with a fixed total order.
///
/// Letters are numbered 0..size()-1 in increasing order; every comparison
/// that produces shortlex or lexicographic output goes through this
/// numbering. A letter may be its own inverse (e.g. an involution t).
class Alphabet {
 public:
  struct Symbol {
    std::string name;
    std::string inverse;  // empty means self-inverse
  };

  Alphabet() = default;
  explicit Alphabet(std::vector<Symbol> symbols);

  /// Every letter self-inverse; convenient for automata that are not tied
  /// to a group.
  static Alphabet plain(const std::vector<std::string>& names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(Letter x) const { return names_.at(x); }
  Letter inverse(Letter x) const { return inverse_.at(x); }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<Letter> find(std::string_view name) const;
  Letter at(std::string_view name) const;

  /// Parses whitespace-separated letter names, or a run of single-character
  /// names when the text contains no whitespace. "" and "1"/"ε" (when not
  /// letter names) give the empty word.
  Word parse(std::string_view text) const;
  /// Concatenates names; separates with spaces if any name is longer than
  /// one character.
  std::string format(const Word& w) const;

  /// Formal inverse: reversed word with every letter inverted.
  Word inverse(const Word& w) const;

  bool single_char_names() const { return single_char_; }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<Letter> inverse_;
  bool single_char_ = true;
};

/// Shortlex comparison of words (length first, then letter order).
bool shortlex_less(const Word& u, const Word& v);

/// All cyclic permutations of w, in rotation order (w itself first).
std::vector<Word> rotations(const Word& w);

}  // namespace conjlang
