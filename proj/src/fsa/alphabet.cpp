#include "conjlang/fsa/alphabet.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace conjlang {

Alphabet::Alphabet(std::vector<Symbol> symbols) {
  if (symbols.size() > 0xFFFF) throw std::invalid_argument("alphabet too large");
  names_.reserve(symbols.size());
  for (const auto& s : symbols) {
    if (s.name.empty()) throw std::invalid_argument("empty letter name");
    if (std::find(names_.begin(), names_.end(), s.name) != names_.end())
      throw std::invalid_argument("duplicate letter name: " + s.name);
    names_.push_back(s.name);
    if (s.name.size() != 1) single_char_ = false;
  }
  inverse_.resize(names_.size());
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    const std::string& inv = symbols[i].inverse.empty() ? symbols[i].name : symbols[i].inverse;
    auto it = std::find(names_.begin(), names_.end(), inv);
    if (it == names_.end()) throw std::invalid_argument("inverse of " + symbols[i].name + " is not a letter");
    inverse_[i] = static_cast<Letter>(it - names_.begin());
  }
  for (std::size_t i = 0; i < inverse_.size(); ++i) {
    if (inverse_[inverse_[i]] != i)
      throw std::invalid_argument("inverse map is not an involution at " + names_[i]);
  }
}

Alphabet Alphabet::plain(const std::vector<std::string>& names) {
  std::vector<Symbol> symbols;
  for (const auto& n : names) symbols.push_back({n, n});
  return Alphabet(std::move(symbols));
}

std::optional<Letter> Alphabet::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<Letter>(i);
  return std::nullopt;
}

Letter Alphabet::at(std::string_view name) const {
  if (auto x = find(name)) return *x;
  throw std::invalid_argument("unknown letter: " + std::string(name));
}

Word Alphabet::parse(std::string_view text) const {
  Word w;
  bool has_space = std::any_of(text.begin(), text.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
  if (has_space || !single_char_) {
    std::size_t i = 0;
    while (i < text.size()) {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
      std::size_t j = i;
      while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
      if (j > i) {
        auto token = text.substr(i, j - i);
        if (!((token == "1" || token == "ε") && !find(token))) w.push_back(at(token));
      }
      i = j;
    }
    return w;
  }
  if ((text == "1" || text == "ε") && !find(text)) return w;
  for (char c : text) w.push_back(at(std::string_view(&c, 1)));
  return w;
}

std::string Alphabet::format(const Word& w) const {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!single_char_ && i > 0) out += ' ';
    out += names_.at(w[i]);
  }
  return out;
}

Word Alphabet::inverse(const Word& w) const {
  Word out(w.rbegin(), w.rend());
  for (auto& x : out) x = inverse_.at(x);
  return out;
}

bool shortlex_less(const Word& u, const Word& v) {
  if (u.size() != v.size()) return u.size() < v.size();
  return u < v;
}

std::vector<Word> rotations(const Word& w) {
  std::vector<Word> out;
  if (w.empty()) {
    out.push_back(w);
    return out;
  }
  for (std::size_t i = 0; i < w.size(); ++i) {
    Word r(w.begin() + static_cast<std::ptrdiff_t>(i), w.end());
    r.insert(r.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace conjlang
