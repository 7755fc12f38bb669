#include "conjlang/garside/artin_dihedral.hpp"

#include <algorithm>
#include <stdexcept>

namespace conjlang {

namespace {

constexpr Letter a_ = 0, A_ = 1, b_ = 2, B_ = 3;

bool positive(Letter x) { return x == a_ || x == b_; }
Letter base(Letter x) { return x / 2; }

void check_word(const Word& w) {
  for (Letter x : w)
    if (x > B_) throw std::invalid_argument("letter outside {a, A, b, B}");
}

}  // namespace

Alphabet dihedral_alphabet() { return Alphabet({{"a", "A"}, {"A", "a"}, {"b", "B"}, {"B", "b"}}); }

MmProfile mm_profile(int m, const Word& w) {
  check_word(w);
  MmProfile r;
  int run = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0 && w[i] == (w[i - 1] ^ 1)) r.freely_reduced = false;
    bool extends = i > 0 && positive(w[i]) == positive(w[i - 1]) && base(w[i]) != base(w[i - 1]);
    run = extends ? run + 1 : 1;
    int& best = positive(w[i]) ? r.p : r.n;
    best = std::max(best, std::min(run, m));
  }
  return r;
}

bool mm_geodesic(int m, const Word& w) {
  auto r = mm_profile(m, w);
  return r.freely_reduced && r.p + r.n <= m;
}

bool mm_multiple_geodesics(int m, const Word& w) {
  auto r = mm_profile(m, w);
  return r.p + r.n == m;
}

Word delta_twist(int m, const Word& w) {
  check_word(w);
  if (m % 2 == 0) return w;
  Word r = w;
  for (auto& x : r) x ^= 2;
  return r;
}

bool is_square_word(const Word& w) {
  std::size_t i = 0;
  while (i < w.size()) {
    if (!positive(w[i])) return false;
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if ((j - i) % 2) return false;
    i = j;
  }
  return true;
}

std::vector<Word> equal_length_class(int m, const Word& w) {
  check_word(w);
  if (!is_square_word(w)) throw std::invalid_argument("word is not a positive word in a^2 and b^2");
  std::vector<Word> out;
  for (const Word& base_word : {w, delta_twist(m, w)}) {
    for (std::size_t k = 0; k < std::max<std::size_t>(base_word.size(), 1); ++k) {
      Word r(base_word.begin() + static_cast<long>(k), base_word.end());
      r.insert(r.end(), base_word.begin(), base_word.begin() + static_cast<long>(k));
      out.push_back(std::move(r));
    }
  }
  std::sort(out.begin(), out.end(), shortlex_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ConjSlMembership dihedral_conjsl_member(int m, int mm, int nn) {
  if (m < 3) throw std::invalid_argument("dihedral Artin parameter must be at least 3");
  if (mm < 0 || nn < 0) throw std::invalid_argument("exponents must be non-negative");
  ConjSlMembership r;
  r.in_range = mm > 2 && nn > 2;
  r.word.assign(static_cast<std::size_t>(2 * mm), a_);
  r.word.insert(r.word.end(), 2, b_);
  r.word.insert(r.word.end(), static_cast<std::size_t>(2 * nn), a_);
  r.word.insert(r.word.end(), 2, b_);
  r.representative = equal_length_class(m, r.word).front();
  r.member = r.representative == r.word;
  return r;
}

}  // namespace conjlang
