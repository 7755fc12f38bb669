#include "conjlang/garside/model.hpp"

#include <stdexcept>

namespace conjlang {

namespace {

std::vector<Simple> identity_map(std::size_t n) {
  std::vector<Simple> v(n);
  for (Simple i = 0; i < n; ++i) v[i] = i;
  return v;
}

}  // namespace

void GarsideModel::build(Spec spec) {
  name_ = std::move(spec.name);
  delta_ = spec.delta;
  atoms_ = std::move(spec.atoms);
  atom_names_ = std::move(spec.atom_names);
  atom_inverse_names_ = std::move(spec.atom_inverse_names);
  degree_ = std::move(spec.degree);
  conj_bound_ = spec.conj_bound;
  const std::size_t n = spec.count;

  product_.assign(n * n, none);
  left_quotient_.assign(n * n, none);
  for (Simple x = 0; x < n; ++x)
    for (Simple y = 0; y < n; ++y)
      if (auto z = spec.product(x, y)) {
        product_[x * n + y] = *z;
        left_quotient_[x * n + *z] = y;
      }

  // In a lattice the common left divisor of largest degree is the meet.
  meet_.assign(n * n, 0);
  for (Simple x = 0; x < n; ++x)
    for (Simple y = 0; y < n; ++y) {
      Simple best = 0;
      for (Simple d = 0; d < n; ++d)
        if (left_divides(d, x) && left_divides(d, y) && degree_[d] > degree_[best]) best = d;
      meet_[x * n + y] = best;
    }

  complement_.assign(n, none);
  for (Simple s = 0; s < n; ++s) {
    complement_[s] = left_quotient_[s * n + delta_];
    if (complement_[s] == none) throw std::logic_error("simple does not divide delta");
  }
  tau_.assign(n, 0);
  tau_inverse_.assign(n, 0);
  for (Simple s = 0; s < n; ++s) {
    tau_[s] = complement_[complement_[s]];
    tau_inverse_[tau_[s]] = s;
  }
  tau_order_ = 1;
  for (std::vector<Simple> power = tau_; power != identity_map(n); ++tau_order_) {
    for (auto& v : power) v = tau_[v];
    if (tau_order_ > static_cast<int>(n)) throw std::logic_error("tau has no finite order");
  }

  atom_words_.assign(n, {});
  names_.assign(n, "");
  for (Simple s = 0; s < n; ++s) {
    Simple rest = s;
    while (rest != 0) {
      std::size_t i = 0;
      while (!left_divides(atoms_[i], rest)) ++i;
      atom_words_[s].push_back(i);
      rest = left_quotient(atoms_[i], rest);
    }
    if (s == 0) names_[s] = "1";
    else if (s == delta_) names_[s] = "D";
    else
      for (auto i : atom_words_[s]) names_[s] += atom_names_[i];
  }
}

std::optional<Simple> GarsideModel::product(Simple x, Simple y) const {
  Simple z = product_[x * size() + y];
  if (z == none) return std::nullopt;
  return z;
}

bool GarsideModel::right_divides(Simple x, Simple y) const {
  for (Simple q = 0; q < size(); ++q)
    if (product_[q * size() + x] == y) return true;
  return false;
}

Simple GarsideModel::tau(Simple s, std::int64_t k) const {
  k = ((k % tau_order_) + tau_order_) % tau_order_;
  for (std::int64_t i = 0; i < k; ++i) s = tau_[s];
  return s;
}

std::optional<Simple> GarsideModel::find_simple(const std::string& name) const {
  for (Simple s = 0; s < size(); ++s)
    if (names_[s] == name) return s;
  return std::nullopt;
}

}  // namespace conjlang
