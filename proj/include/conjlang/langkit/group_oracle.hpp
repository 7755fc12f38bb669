#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "conjlang/fsa/alphabet.hpp"

namespace conjlang {

/// Canonical encoding of a group element: two values are equal exactly
/// when they represent the same element.
using Element = std::vector<std::int64_t>;

struct ElementHash {
  std::size_t operator()(const Element& e) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (auto v : e) h ^= std::hash<std::int64_t>{}(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  }
};

/// Group arithmetic over a fixed inverse-closed generating alphabet.
class GroupOracle {
 public:
  virtual ~GroupOracle() = default;

  virtual std::string name() const = 0;
  const Alphabet& alphabet() const { return alphabet_; }

  virtual Element identity() const = 0;
  virtual Element generator(Letter x) const = 0;
  virtual Element multiply(const Element& g, const Element& h) const = 0;
  virtual Element inverse(const Element& g) const = 0;
  virtual Element right_multiply(const Element& g, Letter x) const { return multiply(g, generator(x)); }

  /// Canonical conjugacy-class key; only meaningful when exact_conjugacy().
  virtual std::optional<Element> conj_key(const Element&) const { return std::nullopt; }
  virtual bool exact_conjugacy() const { return false; }

  /// Human-readable element, for reports.
  virtual std::string describe(const Element& g) const;

  Element evaluate(const Word& w) const;
  Element conjugate(const Element& g, const Element& h) const { return multiply(inverse(h), multiply(g, h)); }

 protected:
  explicit GroupOracle(Alphabet a) : alphabet_(std::move(a)) {}

 private:
  Alphabet alphabet_;
};

}  // namespace conjlang
