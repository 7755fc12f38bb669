#include "conjlang/langkit/ball.hpp"

#include <stdexcept>

namespace conjlang {

Ball::Ball(const GroupOracle& o, int radius, std::size_t max_elements)
    : alphabet_(o.alphabet()), radius_(radius) {
  if (radius < 0) throw std::invalid_argument("ball radius must be nonnegative");
  const std::size_t k = alphabet_.size();
  auto add = [&](Element g, int len, Word nf) {
    if (elements_.size() >= max_elements) throw std::length_error("ball exceeds the element budget");
    Id id = static_cast<Id>(elements_.size());
    index_.emplace(g, id);
    elements_.push_back(std::move(g));
    lengths_.push_back(len);
    normal_forms_.push_back(std::move(nf));
    neighbors_.resize(neighbors_.size() + k, npos);
    return id;
  };
  add(o.identity(), 0, {});
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    const bool interior = lengths_[i] < radius_;
    for (Letter x = 0; x < k; ++x) {
      Element h = o.right_multiply(elements_[i], x);
      auto it = index_.find(h);
      Id target;
      if (it != index_.end()) {
        target = it->second;
      } else if (interior) {
        Word nf = normal_forms_[i];
        nf.push_back(x);
        target = add(std::move(h), lengths_[i] + 1, std::move(nf));
      } else {
        target = npos;
      }
      neighbors_[i * k + x] = target;
    }
  }
}

std::optional<Ball::Id> Ball::find(const Element& g) const {
  auto it = index_.find(g);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<Ball::Id> Ball::walk(const Word& w) const {
  Id cur = 0;
  for (Letter x : w) {
    cur = neighbor(cur, x);
    if (cur == npos) return std::nullopt;
  }
  return cur;
}

std::optional<bool> Ball::is_geodesic(const Word& w) const {
  Id cur = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    Id next = neighbor(cur, w[i]);
    if (next == npos) return std::nullopt;
    // a non-geodesic prefix makes the whole word non-geodesic
    if (lengths_[next] != static_cast<int>(i) + 1) return false;
    cur = next;
  }
  return true;
}

std::vector<std::size_t> Ball::sphere_sizes() const {
  std::vector<std::size_t> out(radius_ + 1, 0);
  for (int l : lengths_) ++out[l];
  return out;
}

}  // namespace conjlang
