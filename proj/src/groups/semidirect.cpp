#include "conjlang/groups/semidirect.hpp"

#include <algorithm>

namespace conjlang {

std::string D8::name() const {
  static const char* names[2][4] = {{"", "ut", "tutu", "tu"}, {"t", "u", "utu", "tut"}};
  return names[flip][rot];
}

namespace {

Alphabet spec_alphabet(SemidirectOracle::Spec spec) {
  using S = SemidirectOracle::Spec;
  std::vector<Alphabet::Symbol> s;
  if (spec == S::zd2_Z || spec == S::zd8_Zp) {
    s = {{"a", "A"}, {"A", "a"}, {"b", "B"}, {"B", "b"}, {"t", ""}};
  } else {
    s = {{"a", "A"}, {"c", "C"}, {"A", "a"}, {"C", "c"}, {"d", "D"}, {"D", "d"}, {"t", ""}};
  }
  if (spec == S::zd8_Zp || spec == S::zd8_Xp) s.push_back({"u", ""});
  return Alphabet(std::move(s));
}

}  // namespace

SemidirectOracle::SemidirectOracle(Spec spec) : GroupOracle(spec_alphabet(spec)), spec_(spec) {
  const D8 e{};
  for (const auto& name : alphabet().names()) {
    Element g;
    if (name == "a") g = make(1, 0, e);
    else if (name == "A") g = make(-1, 0, e);
    else if (name == "b") g = make(0, 1, e);
    else if (name == "B") g = make(0, -1, e);
    else if (name == "c") g = make(2, 0, e);
    else if (name == "C") g = make(-2, 0, e);
    else if (name == "d") g = make(1, 1, e);
    else if (name == "D") g = make(-1, -1, e);
    else if (name == "t") g = make(0, 0, D8::t());
    else g = make(0, 0, D8::u());
    generators_.push_back(std::move(g));
  }
}

std::string SemidirectOracle::name() const {
  switch (spec_) {
    case Spec::zd2_Z: return "zd2_Z";
    case Spec::zd2_X: return "zd2_X";
    case Spec::zd8_Zp: return "zd8_Zp";
    case Spec::zd8_Xp: return "zd8_Xp";
  }
  return "?";
}

Element SemidirectOracle::multiply(const Element& g, const Element& h) const {
  D8 hg{static_cast<int>(g[2]), static_cast<int>(g[3])};
  D8 hh{static_cast<int>(h[2]), static_cast<int>(h[3])};
  // (v, x)(v', y) = (v + x·v', xy)
  std::int64_t i = h[0], j = h[1];
  if (hg.swaps()) std::swap(i, j);
  return make(g[0] + i, g[1] + j, hg * hh);
}

Element SemidirectOracle::inverse(const Element& g) const {
  D8 h{static_cast<int>(g[2]), static_cast<int>(g[3])};
  D8 hi = h.inverse();
  // (v, x)⁻¹ = (−x⁻¹·v, x⁻¹)
  std::int64_t i = -g[0], j = -g[1];
  if (hi.swaps()) std::swap(i, j);
  return make(i, j, hi);
}

std::optional<Element> SemidirectOracle::conj_key(const Element& g) const {
  const std::int64_t i = g[0], j = g[1];
  const std::string h = D8{static_cast<int>(g[2]), static_cast<int>(g[3])}.name();
  if (h.empty()) return Element{0, std::min(i, j), std::max(i, j)};
  if (h == "t" || h == "utu") return Element{1, i + j};
  if (h == "u") return Element{2, i, j};
  if (h == "tut") return Element{2, j, i};
  if (h == "tutu") return Element{3, std::min(i, j), std::max(i, j)};
  return Element{4, i + j};  // tu, ut
}

std::string SemidirectOracle::describe(const Element& g) const {
  std::string h = D8{static_cast<int>(g[2]), static_cast<int>(g[3])}.name();
  return "a^" + std::to_string(g[0]) + " b^" + std::to_string(g[1]) + (h.empty() ? "" : " " + h);
}

}  // namespace conjlang
