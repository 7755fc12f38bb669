#pragma once

#include <memory>
#include <string>
#include <vector>

#include "conjlang/fsa/alphabet.hpp"
#include "conjlang/langkit/group_oracle.hpp"

namespace conjlang {

enum class VertexType { Z, Z2 };

struct GraphVertex {
  std::string name;
  VertexType type = VertexType::Z;
};

/// A finite simplicial graph with a cyclic group at each vertex: Z
/// generated by {a, a⁻¹} or Z/2 generated by {a}. The letters of all
/// vertices form one alphabet with a chosen total order.
class GraphProductSpec {
 public:
  /// Letter names default to the vertex name and, for Z vertices, its
  /// upper-case form (or name + "^-1" if that coincides). `order` lists
  /// every letter once; empty means vertex order with each inverse right
  /// after its letter. Throws std::invalid_argument on loops, repeated
  /// edges, unknown or repeated names.
  GraphProductSpec(std::vector<GraphVertex> vertices, const std::vector<std::pair<std::string, std::string>>& edges,
                   const std::vector<std::string>& order = {});

  /// {"vertices":[{"name":"a","type":"Z"}],"edges":[["a","b"]],"order":["a","A",...]}
  static GraphProductSpec from_json(const std::string& text);
  std::string to_json() const;

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  const GraphVertex& vertex(std::size_t i) const { return vertices_.at(i); }
  /// Index of the vertex with this name; throws std::invalid_argument.
  std::size_t vertex_index(const std::string& name) const;
  bool adjacent(std::size_t i, std::size_t j) const { return adjacent_[i * vertices_.size() + j]; }
  std::size_t vertex_of(Letter x) const { return vertex_of_.at(x); }
  /// +1 for the generator, −1 for its inverse (always +1 at a Z/2 vertex).
  int exponent(Letter x) const { return exponent_.at(x); }

 private:
  std::vector<GraphVertex> vertices_;
  std::vector<bool> adjacent_;
  Alphabet alphabet_;
  std::vector<std::size_t> vertex_of_;
  std::vector<int> exponent_;
};

/// A word over X_i ∪ {$}; `dollar` marks the separator.
struct ProjectedWord {
  static constexpr Letter dollar = 0xFFFF;
  Word letters;

  /// Segments between separators (n+1 segments for n separators).
  std::vector<Word> segments() const;
  std::string format(const Alphabet& a) const;
  friend bool operator==(const ProjectedWord&, const ProjectedWord&) = default;
};

/// Letters of vertex i are kept, letters of vertices adjacent to i are
/// deleted, every other letter becomes $.
ProjectedWord rho(const GraphProductSpec& spec, std::size_t i, const Word& w);

/// Geodesic test: every projection lies in Geo_i ($ Geo_i)*.
bool gp_geodesic(const GraphProductSpec& spec, const Word& w);
/// Conjugacy-geodesic test: every projection lies in ConjGeo_i, or is
/// u₀$u₁…$u_n (n ≥ 1) with u_n u₀, u₁, …, u_{n−1} all in Geo_i.
bool gp_conjgeo(const GraphProductSpec& spec, const Word& w);

/// Word-problem oracle: elements are encoded by the lexicographically
/// least word among the reduced words of the element that differ by
/// commuting adjacent letters. No conjugacy key.
std::unique_ptr<GroupOracle> gp_oracle(const GraphProductSpec& spec);

}  // namespace conjlang
