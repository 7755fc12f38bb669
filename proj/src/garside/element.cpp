#include "conjlang/garside/element.hpp"

#include <algorithm>
#include <stdexcept>

namespace conjlang {

namespace {

// Right-multiplies a left-weighted positive sequence by s, restoring the
// left-weighting with one right-to-left sweep.
void append_simple(const GarsideModel& m, std::vector<Simple>& f, Simple s) {
  if (s == m.identity()) return;
  f.push_back(s);
  for (std::size_t i = f.size() - 1; i > 0; --i) {
    Simple t = m.meet(m.complement(f[i - 1]), f[i]);
    if (t == m.identity()) break;
    f[i - 1] = *m.product(f[i - 1], t);
    f[i] = m.left_quotient(t, f[i]);
  }
}

// Moves leading Δ factors into p and drops trailing identities.
GarsideElement finish(const GarsideModel& m, std::int64_t p, std::vector<Simple> f) {
  std::size_t lead = 0;
  while (lead < f.size() && f[lead] == m.delta()) ++lead;
  f.erase(f.begin(), f.begin() + static_cast<long>(lead));
  while (!f.empty() && f.back() == m.identity()) f.pop_back();
  if (std::find(f.begin(), f.end(), m.identity()) != f.end() || std::find(f.begin(), f.end(), m.delta()) != f.end())
    throw std::logic_error("normal form invariant violated");
  return {p + static_cast<std::int64_t>(lead), std::move(f)};
}

}  // namespace

Alphabet atom_alphabet(const GarsideModel& m) {
  std::vector<Alphabet::Symbol> s;
  for (std::size_t i = 0; i < m.atoms().size(); ++i) {
    s.push_back({m.atom_name(i), m.atom_inverse_name(i)});
    s.push_back({m.atom_inverse_name(i), m.atom_name(i)});
  }
  return Alphabet(std::move(s));
}

GarsideElement simple_element(const GarsideModel& m, Simple s) {
  if (s == m.identity()) return {};
  if (s == m.delta()) return {1, {}};
  return {0, {s}};
}

GarsideElement delta_power(std::int64_t p) { return {p, {}}; }

// (Δ^p A)(Δ^q B) = Δ^{p+q} τ^q(A) B.
GarsideElement compose(const GarsideModel& m, const GarsideElement& x, const GarsideElement& y) {
  std::vector<Simple> f;
  f.reserve(x.factors.size() + y.factors.size());
  for (auto s : x.factors) f.push_back(m.tau(s, y.p));
  for (auto s : y.factors) append_simple(m, f, s);
  return finish(m, x.p + y.p, std::move(f));
}

// a⁻¹ = ∂(a) Δ⁻¹ = Δ⁻¹ τ⁻¹(∂(a)).
GarsideElement invert(const GarsideModel& m, const GarsideElement& x) {
  GarsideElement r;
  for (auto it = x.factors.rbegin(); it != x.factors.rend(); ++it) {
    GarsideElement inv{-1, {}};
    Simple c = m.tau(m.complement(*it), -1);
    if (c != m.identity()) inv.factors.push_back(c);
    r = compose(m, r, inv);
  }
  return compose(m, r, delta_power(-x.p));
}

GarsideElement normalize(const GarsideModel& m, const Word& w) {
  GarsideElement r;
  for (Letter x : w) {
    GarsideElement atom = simple_element(m, m.atoms().at(x / 2));
    r = compose(m, r, (x % 2) ? invert(m, atom) : atom);
  }
  return r;
}

GarsideElement normalize(const GarsideModel& m, const std::string& text) {
  return normalize(m, atom_alphabet(m).parse(text));
}

InfSupLength inf_sup_len(const GarsideElement& x) {
  InfSupLength r;
  r.inf = x.p;
  r.sup = x.p + static_cast<std::int64_t>(x.factors.size());
  r.length = std::max({r.sup, r.sup - r.inf, -r.inf});
  return r;
}

std::optional<GarsideElement> cycle_conjugator(const GarsideModel& m, const GarsideElement& x, CycleDirection d) {
  if (x.factors.empty()) return std::nullopt;
  if (d == CycleDirection::cycling) return simple_element(m, m.tau(x.factors.front(), -x.p));
  return invert(m, simple_element(m, x.factors.back()));
}

std::optional<GarsideElement> cycle(const GarsideModel& m, const GarsideElement& x, CycleDirection d) {
  auto h = cycle_conjugator(m, x, d);
  if (!h) return std::nullopt;
  return compose(m, compose(m, invert(m, *h), x), *h);
}

ShortenResult conj_shorten(const GarsideModel& m, const GarsideElement& x, int K) {
  const auto start = inf_sup_len(x).length;
  for (auto d : {CycleDirection::cycling, CycleDirection::decycling}) {
    GarsideElement y = x, total;
    for (int step = 1; step <= K; ++step) {
      auto h = cycle_conjugator(m, y, d);
      if (!h) break;
      total = compose(m, total, *h);
      y = compose(m, compose(m, invert(m, *h), y), *h);
      if (inf_sup_len(y).length < start) return {true, y, total, d, step};
    }
  }
  return {false, x, GarsideElement{}, CycleDirection::cycling, 0};
}

std::string format_nf(const GarsideModel& m, const GarsideElement& x) {
  std::string s = "D^" + std::to_string(x.p) + " |";
  for (std::size_t i = 0; i < x.factors.size(); ++i) s += (i ? " . " : " ") + m.simple_name(x.factors[i]);
  return s;
}

std::vector<GarsideLetter> garside_sl_order(const GarsideModel& m) {
  std::vector<GarsideLetter> neg, pos;
  for (Simple s = 1; s < m.size(); ++s) {
    neg.push_back({s, true});
    pos.push_back({s, false});
  }
  std::stable_sort(neg.begin(), neg.end(),
                   [&](const GarsideLetter& x, const GarsideLetter& y) { return m.degree(x.simple) < m.degree(y.simple); });
  std::stable_sort(pos.begin(), pos.end(),
                   [&](const GarsideLetter& x, const GarsideLetter& y) { return m.degree(x.simple) > m.degree(y.simple); });
  neg.insert(neg.end(), pos.begin(), pos.end());
  return neg;
}

Alphabet simples_alphabet(const GarsideModel& m) {
  std::vector<Alphabet::Symbol> s;
  for (const auto& l : garside_sl_order(m)) {
    std::string name = m.simple_name(l.simple);
    if (l.inverse) s.push_back({name + "^-1", name});
    else s.push_back({name, name + "^-1"});
  }
  return Alphabet(std::move(s));
}

namespace {

std::vector<Simple> positive_factors(const GarsideModel& m, const GarsideElement& x) {
  std::vector<Simple> f(static_cast<std::size_t>(x.p), m.delta());
  f.insert(f.end(), x.factors.begin(), x.factors.end());
  return f;
}

Simple head(const GarsideModel& m, const GarsideElement& x) {
  if (x.p > 0) return m.delta();
  return x.factors.empty() ? m.identity() : x.factors.front();
}

}  // namespace

FractionForm garside_fraction(const GarsideModel& m, const GarsideElement& x) {
  if (x.p >= 0) return {{}, positive_factors(m, x)};
  GarsideElement u = delta_power(-x.p);
  GarsideElement v{0, x.factors};
  for (;;) {
    Simple s = m.meet(head(m, u), head(m, v));
    if (s == m.identity()) break;
    GarsideElement si = invert(m, simple_element(m, s));
    u = compose(m, si, u);
    v = compose(m, si, v);
  }
  return {positive_factors(m, u), positive_factors(m, v)};
}

Word garside_sl_nf(const GarsideModel& m, const GarsideElement& x) {
  auto order = garside_sl_order(m);
  auto letter = [&](Simple s, bool inverse) {
    auto it = std::find(order.begin(), order.end(), GarsideLetter{s, inverse});
    return static_cast<Letter>(it - order.begin());
  };
  FractionForm f = garside_fraction(m, x);
  Word w;
  for (auto it = f.u.rbegin(); it != f.u.rend(); ++it) w.push_back(letter(*it, true));
  for (auto s : f.v) w.push_back(letter(s, false));
  return w;
}

}  // namespace conjlang
