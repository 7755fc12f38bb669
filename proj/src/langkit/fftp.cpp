#include "conjlang/langkit/fftp.hpp"

#include <stdexcept>

#include "conjlang/fsa/operations.hpp"
#include "conjlang/langkit/ball.hpp"
#include "conjlang/langkit/languages.hpp"

namespace conjlang {

Dfa ngeo_automaton(const GroupOracle& o, int K, int k, std::size_t max_elements) {
  if (K < 0 || k < 0) throw std::invalid_argument("ngeo parameters must be nonnegative");
  const Alphabet& a = o.alphabet();
  const std::size_t letters = a.size();
  Ball n(o, (K + 1) * k, max_elements);
  const std::size_t size = n.size();

  // left[g][x] = x⁻¹·g inside the ball
  std::vector<Ball::Id> left(size * letters, Ball::npos);
  std::vector<Element> inv_gen;
  for (Letter x = 0; x < letters; ++x) inv_gen.push_back(o.generator(a.inverse(x)));
  for (Ball::Id g = 0; g < size; ++g)
    for (Letter x = 0; x < letters; ++x)
      if (auto h = n.find(o.multiply(inv_gen[x], n.element(g)))) left[g * letters + x] = *h;

  // States: (g, running) and (g, ended, d) with d = 1..K+1 padding symbols seen.
  const std::size_t layers = static_cast<std::size_t>(K) + 2;
  auto running = [&](Ball::Id g) { return static_cast<State>(g * layers); };
  auto ended = [&](Ball::Id g, int d) { return static_cast<State>(g * layers + d); };
  Nfa m(a, size * layers);
  m.add_start(running(0));
  m.add_accept(ended(0, K + 1));
  for (Ball::Id g = 0; g < size; ++g) {
    for (Letter x = 0; x < letters; ++x) {
      Ball::Id h = left[g * letters + x];
      if (h == Ball::npos) continue;
      for (Letter y = 0; y < letters; ++y) {
        Ball::Id t = n.neighbor(h, y);
        if (t != Ball::npos) m.add_edge(running(g), x, running(t));
      }
      m.add_edge(running(g), x, ended(h, 1));
      for (int d = 1; d <= K + 1; ++d) m.add_edge(ended(g, d), x, ended(h, std::min(d + 1, K + 1)));
    }
  }
  return complement(to_dfa(m));
}

Dfa cycgeo_from_geo(const Dfa& geo) { return difference(geo, to_dfa(cyclic_closure(complement(geo)))); }

namespace {

std::vector<Word> words_of_length(std::size_t letters, std::size_t len) {
  std::vector<Word> out{Word{}};
  for (std::size_t i = 0; i < len; ++i) {
    std::vector<Word> next;
    for (const auto& w : out)
      for (Letter x = 0; x < letters; ++x) {
        Word v = w;
        v.push_back(x);
        next.push_back(std::move(v));
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace

Dfa conjgeo_pipeline(const GroupOracle& o, int k, const Dfa& geo, int s, PipelineOptions options) {
  const Alphabet& a = o.alphabet();
  if (!(geo.alphabet() == a)) throw std::invalid_argument("geodesic automaton uses a different alphabet");
  {
    LanguageLab lab(o, options.validate_to, SampleOptions{0, true});
    auto cmp = compare_sample_to_dfa(lab.sample(LanguageKind::geo), geo);
    if (!cmp.equal)
      throw std::invalid_argument("geodesic automaton disagrees with the group at " + a.format(*cmp.word));
  }
  Dfa cycgeo = cycgeo_from_geo(geo);

  std::vector<Dfa> shortened;
  for (int len = 1; len <= k; ++len) {
    Dfa shrinking = complement(ngeo_automaton(o, 2 * len, options.fftp));
    for (const auto& alpha : words_of_length(a.size(), len)) {
      Dfa q = quotient(quotient(shrinking, a.inverse(alpha), Side::left), alpha, Side::right);
      shortened.push_back(intersection(cycgeo, q));
    }
  }
  Dfa bad = to_dfa(cyclic_closure(union_all(a, shortened)));
  Dfa result = difference(cycgeo, bad);
  if (s <= 0) return result;

  LanguageSample exact = language_sample(o, LanguageKind::conjgeo, s - 1);
  std::vector<Word> low;
  for (const auto& group : exact.words) low.insert(low.end(), group.begin(), group.end());
  return union_of(intersection(result, Dfa::length_range(a, s, -1)), Dfa::from_words(a, low));
}

}  // namespace conjlang
