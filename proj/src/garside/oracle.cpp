#include "conjlang/garside/oracle.hpp"

#include <charconv>
#include <stdexcept>

namespace conjlang {

std::shared_ptr<const GarsideModel> make_model(const std::string& tag) {
  auto colon = tag.find(':');
  if (colon != std::string::npos) {
    std::string kind = tag.substr(0, colon);
    int n = 0;
    const char* first = tag.data() + colon + 1;
    const char* last = tag.data() + tag.size();
    auto [ptr, ec] = std::from_chars(first, last, n);
    if (ec == std::errc() && ptr == last && first != last) {
      if (kind == "braid") return std::make_shared<BraidModel>(n);
      if (kind == "dihedral") return std::make_shared<DihedralModel>(n);
    }
  }
  throw std::invalid_argument("unknown Garside model '" + tag + "' (expected braid:n or dihedral:m)");
}

namespace {

Alphabet alphabet_for(const GarsideModel& m, GeneratorSet gens) {
  return gens == GeneratorSet::atoms ? atom_alphabet(m) : simples_alphabet(m);
}

}  // namespace

GarsideOracle::GarsideOracle(std::shared_ptr<const GarsideModel> model, GeneratorSet gens)
    : GroupOracle(alphabet_for(*model, gens)), model_(std::move(model)), gens_(gens) {
  if (gens_ == GeneratorSet::atoms) {
    for (std::size_t i = 0; i < model_->atoms().size(); ++i) {
      auto a = simple_element(*model_, model_->atoms()[i]);
      generators_.push_back(a);
      generators_.push_back(conjlang::invert(*model_, a));
    }
  } else {
    for (const auto& l : garside_sl_order(*model_)) {
      auto s = simple_element(*model_, l.simple);
      generators_.push_back(l.inverse ? conjlang::invert(*model_, s) : s);
    }
  }
}

std::string GarsideOracle::name() const {
  return model_->name() + (gens_ == GeneratorSet::atoms ? "/atoms" : "/simples");
}

Element GarsideOracle::encode(const GarsideElement& x) {
  Element e{x.p};
  for (auto s : x.factors) e.push_back(static_cast<std::int64_t>(s));
  return e;
}

GarsideElement GarsideOracle::decode(const Element& e) {
  GarsideElement x;
  x.p = e.at(0);
  for (std::size_t i = 1; i < e.size(); ++i) x.factors.push_back(static_cast<Simple>(e[i]));
  return x;
}

Element GarsideOracle::generator(Letter x) const { return encode(generators_.at(x)); }

Element GarsideOracle::multiply(const Element& g, const Element& h) const {
  return encode(compose(*model_, decode(g), decode(h)));
}

Element GarsideOracle::inverse(const Element& g) const { return encode(conjlang::invert(*model_, decode(g))); }

std::string GarsideOracle::describe(const Element& g) const { return format_nf(*model_, decode(g)); }

std::optional<Word> find_conjugator(const GroupOracle& o, const Ball& ball, const Element& x, const Element& y,
                                    int max_length) {
  for (Ball::Id id = 0; id < ball.size(); ++id) {
    if (ball.length(id) > max_length) break;
    if (o.conjugate(x, ball.element(id)) == y) return ball.normal_form(id);
  }
  return std::nullopt;
}

std::optional<GarsideElement> exhaustive_shorten(const GarsideOracle& o, const Ball& ball, const GarsideElement& x,
                                                 int K) {
  const auto& m = o.model();
  std::optional<GarsideElement> best;
  auto best_len = inf_sup_len(x).length;
  for (Ball::Id id = 0; id < ball.size(); ++id) {
    if (ball.length(id) > K) break;
    auto h = GarsideOracle::decode(ball.element(id));
    auto c = compose(m, compose(m, invert(m, h), x), h);
    auto len = inf_sup_len(c).length;
    if (len < best_len) {
      best_len = len;
      best = c;
    }
  }
  return best;
}

}  // namespace conjlang
