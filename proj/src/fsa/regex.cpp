#include "conjlang/fsa/regex.hpp"

#include <stdexcept>

namespace conjlang {

Regex Regex::make(Op op, std::string text, std::vector<Regex> children) {
  return Regex(std::make_shared<const Node>(Node{op, std::move(text), std::move(children)}));
}

Regex Regex::literal(std::string letter) { return make(Op::literal, std::move(letter), {}); }
Regex Regex::epsilon() { return make(Op::epsilon, "", {}); }
Regex Regex::empty() { return make(Op::empty, "", {}); }
Regex Regex::union_of(std::vector<Regex> parts) { return make(Op::union_of, "", std::move(parts)); }
Regex Regex::concat(std::vector<Regex> parts) { return make(Op::concat, "", std::move(parts)); }
Regex Regex::star(Regex r) { return make(Op::star, "", {std::move(r)}); }
Regex Regex::plus(Regex r) { return make(Op::plus, "", {std::move(r)}); }
Regex Regex::optional(Regex r) { return make(Op::optional, "", {std::move(r)}); }
Regex Regex::named(std::string name, Regex r) { return make(Op::named, std::move(name), {std::move(r)}); }

Regex Regex::word(const std::vector<std::string>& letters) {
  std::vector<Regex> parts;
  for (const auto& l : letters) parts.push_back(literal(l));
  if (parts.empty()) return epsilon();
  return concat(std::move(parts));
}

Regex Regex::any_of(const std::vector<std::string>& letters) {
  std::vector<Regex> parts;
  for (const auto& l : letters) parts.push_back(literal(l));
  return union_of(std::move(parts));
}

std::string Regex::to_string() const {
  auto wrap = [](const Regex& r) {
    std::string s = r.to_string();
    bool atomic = r.op() == Op::literal || r.op() == Op::epsilon || r.op() == Op::empty ||
                  r.op() == Op::named || r.op() == Op::union_of;
    return atomic ? s : "(" + s + ")";
  };
  switch (op()) {
    case Op::literal: return text();
    case Op::epsilon: return "ε";
    case Op::empty: return "∅";
    case Op::named: return text();
    case Op::union_of: {
      std::string s = "{";
      for (std::size_t i = 0; i < children().size(); ++i) {
        if (i) s += ",";
        s += children()[i].to_string();
      }
      return s + "}";
    }
    case Op::concat: {
      std::string s;
      for (const auto& c : children()) s += c.op() == Op::union_of ? c.to_string() : wrap(c);
      return s;
    }
    case Op::star: return wrap(children()[0]) + "*";
    case Op::plus: return wrap(children()[0]) + "+";
    case Op::optional: return wrap(children()[0]) + "?";
  }
  return "";
}

namespace {

struct Fragment {
  State in;
  State out;
};

Fragment build(Nfa& n, const Regex& r, const Alphabet& a) {
  switch (r.op()) {
    case Regex::Op::literal: {
      auto x = a.find(r.text());
      if (!x) throw std::invalid_argument("regex literal not in alphabet: " + r.text());
      State in = n.add_state(), out = n.add_state();
      n.add_edge(in, *x, out);
      return {in, out};
    }
    case Regex::Op::epsilon: {
      State in = n.add_state(), out = n.add_state();
      n.add_epsilon(in, out);
      return {in, out};
    }
    case Regex::Op::empty: {
      State in = n.add_state(), out = n.add_state();
      return {in, out};
    }
    case Regex::Op::named: return build(n, r.children()[0], a);
    case Regex::Op::union_of: {
      State in = n.add_state(), out = n.add_state();
      for (const auto& c : r.children()) {
        auto f = build(n, c, a);
        n.add_epsilon(in, f.in);
        n.add_epsilon(f.out, out);
      }
      return {in, out};
    }
    case Regex::Op::concat: {
      if (r.children().empty()) return build(n, Regex::epsilon(), a);
      Fragment whole = build(n, r.children()[0], a);
      for (std::size_t i = 1; i < r.children().size(); ++i) {
        auto f = build(n, r.children()[i], a);
        n.add_epsilon(whole.out, f.in);
        whole.out = f.out;
      }
      return whole;
    }
    case Regex::Op::star:
    case Regex::Op::plus:
    case Regex::Op::optional: {
      State in = n.add_state(), out = n.add_state();
      auto f = build(n, r.children()[0], a);
      n.add_epsilon(in, f.in);
      n.add_epsilon(f.out, out);
      if (r.op() != Regex::Op::plus) n.add_epsilon(in, out);
      if (r.op() != Regex::Op::optional) n.add_epsilon(f.out, f.in);
      return {in, out};
    }
  }
  throw std::logic_error("unhandled regex node");
}

}  // namespace

Nfa compile_regex(const Regex& expr, const Alphabet& a) {
  Nfa n(a, 0);
  auto f = build(n, expr, a);
  n.add_start(f.in);
  n.add_accept(f.out);
  return n;
}

}  // namespace conjlang
