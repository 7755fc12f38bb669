#pragma once

#include <memory>
#include <string>
#include <vector>

#include "conjlang/fsa/automata.hpp"

namespace conjlang {

/// Regular-expression syntax tree. Nodes are immutable and shared, so a
/// sub-expression bound to a name can be reused in several places.
class Regex {
 public:
  enum class Op { literal, epsilon, empty, union_of, concat, star, plus, optional, named };

  static Regex literal(std::string letter);
  static Regex epsilon();
  static Regex empty();
  static Regex union_of(std::vector<Regex> parts);
  static Regex concat(std::vector<Regex> parts);
  static Regex star(Regex r);
  static Regex plus(Regex r);
  static Regex optional(Regex r);
  static Regex named(std::string name, Regex r);

  /// Concatenation of the given letter names.
  static Regex word(const std::vector<std::string>& letters);
  /// Union of the given letter names ("{a,b}").
  static Regex any_of(const std::vector<std::string>& letters);

  Op op() const { return node_->op; }
  const std::string& text() const { return node_->text; }
  const std::vector<Regex>& children() const { return node_->children; }

  std::string to_string() const;

 private:
  struct Node {
    Op op;
    std::string text;
    std::vector<Regex> children;
  };
  explicit Regex(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Regex make(Op op, std::string text, std::vector<Regex> children);

  std::shared_ptr<const Node> node_;
};

/// Thompson construction. Throws std::invalid_argument on an unknown literal.
Nfa compile_regex(const Regex& expr, const Alphabet& a);

}  // namespace conjlang
