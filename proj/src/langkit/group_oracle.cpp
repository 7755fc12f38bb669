#include "conjlang/langkit/group_oracle.hpp"

namespace conjlang {

std::string GroupOracle::describe(const Element& g) const {
  std::string s = "(";
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(g[i]);
  }
  return s + ")";
}

Element GroupOracle::evaluate(const Word& w) const {
  Element g = identity();
  for (Letter x : w) g = right_multiply(g, x);
  return g;
}

}  // namespace conjlang
