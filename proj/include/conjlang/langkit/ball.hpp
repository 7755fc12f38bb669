#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <unordered_map>
#include <vector>

#include "conjlang/langkit/group_oracle.hpp"

namespace conjlang {

/// Elements of length at most R, found breadth-first by right
/// multiplication with the letters in alphabet order. Because parents are
/// expanded in shortlex order of their normal forms, the first path that
/// reaches an element spells its shortlex normal form.
class Ball {
 public:
  using Id = std::uint32_t;
  static constexpr Id npos = std::numeric_limits<Id>::max();

  /// Throws std::length_error when more than max_elements would be stored.
  Ball(const GroupOracle& o, int radius, std::size_t max_elements = 20'000'000);

  int radius() const { return radius_; }
  std::size_t size() const { return elements_.size(); }
  const Alphabet& alphabet() const { return alphabet_; }

  /// Ids are assigned in shortlex order of normal forms; id 0 is the identity.
  const Element& element(Id id) const { return elements_[id]; }
  int length(Id id) const { return lengths_[id]; }
  const Word& normal_form(Id id) const { return normal_forms_[id]; }
  /// Right neighbour g·x, or npos if it lies outside the ball.
  Id neighbor(Id id, Letter x) const { return neighbors_[id * alphabet_.size() + x]; }

  std::optional<Id> find(const Element& g) const;
  /// Follows w from the identity; nullopt if the path leaves the ball.
  std::optional<Id> walk(const Word& w) const;
  /// Geodesic test by prefix lengths; nullopt if w leaves the ball.
  std::optional<bool> is_geodesic(const Word& w) const;

  /// Number of elements of each length 0..R.
  std::vector<std::size_t> sphere_sizes() const;

 private:
  Alphabet alphabet_;
  int radius_;
  std::vector<Element> elements_;
  std::vector<int> lengths_;
  std::vector<Word> normal_forms_;
  std::vector<Id> neighbors_;
  std::unordered_map<Element, Id, ElementHash> index_;
};

}  // namespace conjlang
