#include "conjlang/groups/free.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace conjlang {

Alphabet rank_alphabet(int k) {
  if (k < 1 || k > 26) throw std::invalid_argument("rank must lie in 1..26");
  std::vector<Alphabet::Symbol> s;
  for (int i = 0; i < k; ++i) {
    std::string lo(1, static_cast<char>('a' + i)), up(1, static_cast<char>('A' + i));
    s.push_back({lo, up});
    s.push_back({up, lo});
  }
  return Alphabet(std::move(s));
}

namespace {

std::int64_t inv_letter(std::int64_t x) { return x ^ 1; }

}  // namespace

FreeGroupOracle::FreeGroupOracle(int rank) : GroupOracle(rank_alphabet(rank)), rank_(rank) {}

Element FreeGroupOracle::right_multiply(const Element& g, Letter x) const {
  Element r = g;
  if (!r.empty() && r.back() == inv_letter(x)) r.pop_back();
  else r.push_back(x);
  return r;
}

Element FreeGroupOracle::multiply(const Element& g, const Element& h) const {
  Element r = g;
  for (auto x : h) {
    if (!r.empty() && r.back() == inv_letter(x)) r.pop_back();
    else r.push_back(x);
  }
  return r;
}

Element FreeGroupOracle::inverse(const Element& g) const {
  Element r(g.rbegin(), g.rend());
  for (auto& x : r) x = inv_letter(x);
  return r;
}

std::optional<Element> FreeGroupOracle::conj_key(const Element& g) const {
  std::size_t lo = 0, hi = g.size();
  while (hi - lo >= 2 && g[lo] == inv_letter(g[hi - 1])) {
    ++lo;
    --hi;
  }
  Element core(g.begin() + static_cast<long>(lo), g.begin() + static_cast<long>(hi));
  Element best = core;
  for (std::size_t r = 1; r < core.size(); ++r) {
    Element rot(core.begin() + static_cast<long>(r), core.end());
    rot.insert(rot.end(), core.begin(), core.begin() + static_cast<long>(r));
    best = std::min(best, rot);
  }
  return best;
}

std::string FreeGroupOracle::describe(const Element& g) const {
  if (g.empty()) return "1";
  std::string s;
  for (auto x : g) s += alphabet().name(static_cast<Letter>(x));
  return s;
}

FreeAbelianOracle::FreeAbelianOracle(int rank) : GroupOracle(rank_alphabet(rank)), rank_(rank) {}

Element FreeAbelianOracle::generator(Letter x) const {
  Element e(rank_, 0);
  e[x / 2] = (x % 2) ? -1 : 1;
  return e;
}

Element FreeAbelianOracle::multiply(const Element& g, const Element& h) const {
  Element r = g;
  for (int i = 0; i < rank_; ++i) r[i] += h[i];
  return r;
}

Element FreeAbelianOracle::inverse(const Element& g) const {
  Element r = g;
  for (auto& v : r) v = -v;
  return r;
}

InfiniteDihedralOracle::InfiniteDihedralOracle()
    : GroupOracle(Alphabet({{"x", "X"}, {"X", "x"}, {"s", ""}})) {}

Element InfiniteDihedralOracle::generator(Letter x) const {
  switch (x) {
    case 0: return {1, 0};
    case 1: return {-1, 0};
    default: return {0, 1};
  }
}

Element InfiniteDihedralOracle::multiply(const Element& g, const Element& h) const {
  return {g[0] + (g[1] ? -h[0] : h[0]), g[1] ^ h[1]};
}

Element InfiniteDihedralOracle::inverse(const Element& g) const {
  if (g[1]) return g;
  return {-g[0], 0};
}

std::optional<Element> InfiniteDihedralOracle::conj_key(const Element& g) const {
  if (g[1] == 0) return Element{0, std::abs(g[0])};
  return Element{1, ((g[0] % 2) + 2) % 2};
}

std::string InfiniteDihedralOracle::describe(const Element& g) const {
  return "x^" + std::to_string(g[0]) + (g[1] ? " s" : "");
}

}  // namespace conjlang
