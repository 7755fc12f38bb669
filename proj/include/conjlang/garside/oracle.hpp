#pragma once

#include <memory>
#include <optional>
#include <string>

#include "conjlang/garside/element.hpp"
#include "conjlang/langkit/ball.hpp"
#include "conjlang/langkit/group_oracle.hpp"

namespace conjlang {

/// "braid:n" (2 ≤ n ≤ 6) or "dihedral:m" (3 ≤ m ≤ 64). Throws
/// std::invalid_argument otherwise.
std::shared_ptr<const GarsideModel> make_model(const std::string& tag);

enum class GeneratorSet { atoms, simples };

/// Group arithmetic through normal forms, over either the atoms or the
/// Garside generators S ∪ S⁻¹ (identity excluded). Elements are encoded
/// as {p, a₁, ..., a_k}.
class GarsideOracle : public GroupOracle {
 public:
  GarsideOracle(std::shared_ptr<const GarsideModel> model, GeneratorSet gens);

  std::string name() const override;
  const GarsideModel& model() const { return *model_; }
  GeneratorSet generators() const { return gens_; }

  Element identity() const override { return {0}; }
  Element generator(Letter x) const override;
  Element multiply(const Element& g, const Element& h) const override;
  Element inverse(const Element& g) const override;
  std::string describe(const Element& g) const override;

  static Element encode(const GarsideElement& x);
  static GarsideElement decode(const Element& e);

 private:
  std::shared_ptr<const GarsideModel> model_;
  GeneratorSet gens_;
  std::vector<GarsideElement> generators_;
};

/// A word h over the oracle's alphabet with |h| ≤ max_length and
/// h⁻¹ x h = y, found by scanning `ball` (whose radius bounds the search).
std::optional<Word> find_conjugator(const GroupOracle& o, const Ball& ball, const Element& x, const Element& y,
                                    int max_length);

/// Shortest conjugate h⁻¹xh over all h of length ≤ K in `ball` (an
/// oracle over simples_alphabet), measured by garside_length. Returns
/// nullopt when no conjugate within that range is shorter than x.
std::optional<GarsideElement> exhaustive_shorten(const GarsideOracle& o, const Ball& ball, const GarsideElement& x,
                                                 int K);

}  // namespace conjlang
