#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "conjlang/garside/model.hpp"

namespace conjlang {

namespace {

int inversions(const std::vector<int>& p) {
  int c = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++c;
  return c;
}

}  // namespace

BraidModel::BraidModel(int strands) : n_(strands) {
  if (strands < 2 || strands > 6) throw std::invalid_argument("braid model needs 2..6 strands");
  std::vector<int> p(static_cast<std::size_t>(n_));
  std::iota(p.begin(), p.end(), 0);
  do perms_.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  // next_permutation starts from the identity, so simple 0 is 1.
  std::map<std::vector<int>, Simple> index;
  for (Simple s = 0; s < perms_.size(); ++s) index[perms_[s]] = s;

  Spec spec;
  spec.name = "braid:" + std::to_string(n_);
  spec.count = perms_.size();
  std::vector<int> rev(static_cast<std::size_t>(n_));
  std::iota(rev.rbegin(), rev.rend(), 0);
  spec.delta = index.at(rev);
  for (int i = 0; i + 1 < n_; ++i) {
    std::vector<int> t(static_cast<std::size_t>(n_));
    std::iota(t.begin(), t.end(), 0);
    std::swap(t[static_cast<std::size_t>(i)], t[static_cast<std::size_t>(i) + 1]);
    spec.atoms.push_back(index.at(t));
    spec.atom_names.push_back("s" + std::to_string(i + 1));
    spec.atom_inverse_names.push_back("S" + std::to_string(i + 1));
  }
  for (const auto& q : perms_) spec.degree.push_back(inversions(q));
  spec.product = [this, &index, degree = spec.degree](Simple x, Simple y) -> std::optional<Simple> {
    const auto& px = perms_[x];
    const auto& py = perms_[y];
    std::vector<int> z(px.size());
    for (std::size_t j = 0; j < z.size(); ++j) z[j] = px[static_cast<std::size_t>(py[j])];
    Simple r = index.at(z);
    if (degree[r] != degree[x] + degree[y]) return std::nullopt;
    return r;
  };
  spec.conj_bound = (n_ * n_ - n_) / 2 - 1;
  build(std::move(spec));
}

}  // namespace conjlang
