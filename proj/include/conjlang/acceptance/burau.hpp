#pragma once

// Reduced Burau representation of B_3 with exact Laurent-polynomial
// entries. It is faithful on B_3, so matrix equality decides the word
// problem there and in the dihedral Artin groups that embed in B_3:
// DA_3 (a = s1, b = s2) and DA_4 (a = s1², b = s2).

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "conjlang/garside/element.hpp"
#include "conjlang/langkit/group_oracle.hpp"

namespace conjlang::reference {

struct Laurent {
  int lo = 0;
  std::vector<long long> c;  // c[i] is the coefficient of t^{lo+i}

  static Laurent monomial(long long k, int e) { return k ? Laurent{e, {k}} : Laurent{}; }
  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
    std::size_t z = 0;
    while (z < c.size() && c[z] == 0) ++z;
    c.erase(c.begin(), c.begin() + static_cast<long>(z));
    lo = c.empty() ? 0 : lo + static_cast<int>(z);
  }
  friend Laurent operator+(const Laurent& x, const Laurent& y) {
    if (x.c.empty()) return y;
    if (y.c.empty()) return x;
    Laurent r;
    r.lo = std::min(x.lo, y.lo);
    int hi = std::max(x.lo + static_cast<int>(x.c.size()), y.lo + static_cast<int>(y.c.size()));
    r.c.assign(static_cast<std::size_t>(hi - r.lo), 0);
    for (std::size_t i = 0; i < x.c.size(); ++i) r.c[static_cast<std::size_t>(x.lo - r.lo) + i] += x.c[i];
    for (std::size_t i = 0; i < y.c.size(); ++i) r.c[static_cast<std::size_t>(y.lo - r.lo) + i] += y.c[i];
    r.trim();
    return r;
  }
  friend Laurent operator*(const Laurent& x, const Laurent& y) {
    if (x.c.empty() || y.c.empty()) return {};
    Laurent r;
    r.lo = x.lo + y.lo;
    r.c.assign(x.c.size() + y.c.size() - 1, 0);
    for (std::size_t i = 0; i < x.c.size(); ++i)
      for (std::size_t j = 0; j < y.c.size(); ++j) r.c[i + j] += x.c[i] * y.c[j];
    r.trim();
    return r;
  }
  Laurent negated() const {
    Laurent r = *this;
    for (auto& v : r.c) v = -v;
    return r;
  }
};

using Mat = std::array<Laurent, 4>;

inline Mat mat_mul(const Mat& x, const Mat& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
          x[2] * y[1] + x[3] * y[3]};
}

inline Mat burau_generator(int g) {
  auto t = [](long long k, int e) { return Laurent::monomial(k, e); };
  switch (g) {
    case 1: return {t(-1, 1), t(1, 0), {}, t(1, 0)};
    case -1: return {t(-1, -1), t(1, -1), {}, t(1, 0)};
    case 2: return {t(1, 0), {}, t(1, 1), t(-1, 1)};
    case -2: return {t(1, 0), {}, t(1, 0), t(-1, -1)};
  }
  throw std::invalid_argument("braid generator out of range");
}

/// Group oracle whose letter x acts as the signed B_3 generator word
/// images[x] (±1 = s1^±1, ±2 = s2^±1).
class BurauOracle : public conjlang::GroupOracle {
 public:
  BurauOracle(conjlang::Alphabet a, std::vector<std::vector<int>> images)
      : GroupOracle(std::move(a)), images_(std::move(images)) {
    for (const auto& im : images_) {
      Mat m = identity_mat();
      for (int g : im) m = mat_mul(m, burau_generator(g));
      gens_.push_back(m);
      std::vector<int> inv(im.rbegin(), im.rend());
      for (auto& g : inv) g = -g;
      Mat mi = identity_mat();
      for (int g : inv) mi = mat_mul(mi, burau_generator(g));
      inv_gens_.push_back(mi);
    }
  }

  std::string name() const override { return "burau"; }
  conjlang::Element identity() const override { return encode(identity_mat()); }
  conjlang::Element generator(conjlang::Letter x) const override { return encode(gens_.at(x)); }
  conjlang::Element multiply(const conjlang::Element& g, const conjlang::Element& h) const override {
    return encode(mat_mul(decode(g), decode(h)));
  }
  conjlang::Element inverse(const conjlang::Element& g) const override {
    // Group elements have monomial determinant ±t^k.
    Mat m = decode(g);
    Laurent det = m[0] * m[3] + (m[1] * m[2]).negated();
    if (det.c.size() != 1 || (det.c[0] != 1 && det.c[0] != -1)) throw std::logic_error("non-unit determinant");
    Laurent inv = Laurent::monomial(det.c[0], -det.lo);
    return encode({m[3] * inv, m[1].negated() * inv, m[2].negated() * inv, m[0] * inv});
  }
  conjlang::Element right_multiply(const conjlang::Element& g, conjlang::Letter x) const override {
    return encode(mat_mul(decode(g), gens_.at(x)));
  }

  static Mat identity_mat() { return {Laurent::monomial(1, 0), {}, {}, Laurent::monomial(1, 0)}; }

  static conjlang::Element encode(const Mat& m) {
    conjlang::Element e;
    for (const auto& p : m) {
      e.push_back(p.lo);
      e.push_back(static_cast<std::int64_t>(p.c.size()));
      e.insert(e.end(), p.c.begin(), p.c.end());
    }
    return e;
  }
  static Mat decode(const conjlang::Element& e) {
    Mat m;
    std::size_t i = 0;
    for (auto& p : m) {
      p.lo = static_cast<int>(e.at(i++));
      auto n = static_cast<std::size_t>(e.at(i++));
      p.c.assign(e.begin() + static_cast<long>(i), e.begin() + static_cast<long>(i + n));
      i += n;
    }
    return m;
  }

 private:
  std::vector<std::vector<int>> images_;
  std::vector<Mat> gens_, inv_gens_;
};


/// Signed B_3 generator word of each atom, for the models that embed in
/// B_3: braid:3, dihedral:3 and dihedral:4.
inline std::vector<std::vector<int>> burau_atom_images(const GarsideModel& m) {
  if (m.name() == "braid:3" || m.name() == "dihedral:3") return {{1}, {2}};
  if (m.name() == "dihedral:4") return {{1, 1}, {2}};
  throw std::invalid_argument("no Burau image for " + m.name());
}

inline std::vector<int> inverted_braid_word(std::vector<int> w) {
  std::reverse(w.begin(), w.end());
  for (auto& g : w) g = -g;
  return w;
}

/// Burau oracle over atom_alphabet(m).
inline BurauOracle burau_over_atoms(const GarsideModel& m) {
  std::vector<std::vector<int>> im;
  for (const auto& a : burau_atom_images(m)) {
    im.push_back(a);
    im.push_back(inverted_braid_word(a));
  }
  return BurauOracle(atom_alphabet(m), im);
}

/// Burau oracle over simples_alphabet(m).
inline BurauOracle burau_over_simples(const GarsideModel& m) {
  auto atoms = burau_atom_images(m);
  std::vector<std::vector<int>> im;
  for (const auto& l : garside_sl_order(m)) {
    std::vector<int> w;
    for (auto i : m.atom_word(l.simple)) w.insert(w.end(), atoms[i].begin(), atoms[i].end());
    im.push_back(l.inverse ? inverted_braid_word(w) : w);
  }
  return BurauOracle(simples_alphabet(m), im);
}

}  // namespace conjlang::reference
