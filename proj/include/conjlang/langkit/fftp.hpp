#pragma once

#include "conjlang/fsa/automata.hpp"
#include "conjlang/langkit/group_oracle.hpp"

namespace conjlang {

/// ngeo_K = {w : |w| ≥ l(w) − K}, realized through its complement: an
/// automaton guessing a padded shorter word w′ (padding symbol $, only at
/// the end) with l(w′) < l(w) − K, w′ =_G w, whose word differences stay in
/// the ball of radius (K+1)·k. The guess is sound for every k and exact
/// when k is an FFTP constant for the generating set.
Dfa ngeo_automaton(const GroupOracle& o, int K, int k, std::size_t max_elements = 2'000'000);

struct PipelineOptions {
  /// Fellow-traveller constant for the ngeo automata.
  int fftp = 2;
  /// Lengths up to which geo is checked against the ball before use.
  int validate_to = 6;
};

/// Conjugacy geodesics as CycGeo minus the cyclic closure of
/// ∪_{1≤l(α)≤k} L(α), with L(α) = {v ∈ CycGeo : α⁻¹vα ∉ ngeo_{2l(α)}};
/// words shorter than s are replaced by exact sample data.
/// Throws std::invalid_argument if geo disagrees with the oracle.
Dfa conjgeo_pipeline(const GroupOracle& o, int k, const Dfa& geo, int s, PipelineOptions options = {});

/// CycGeo from a geodesic automaton: geo minus cyclic permutations of
/// non-geodesics.
Dfa cycgeo_from_geo(const Dfa& geo);

}  // namespace conjlang
