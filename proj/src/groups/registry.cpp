#include "conjlang/groups/registry.hpp"

#include <stdexcept>

#include "conjlang/groups/free.hpp"
#include "conjlang/groups/semidirect.hpp"
#include "json.hpp"

namespace conjlang {

namespace {

int parse_rank(const std::string& tag, std::size_t colon) {
  try {
    std::size_t used = 0;
    int k = std::stoi(tag.substr(colon + 1), &used);
    if (used != tag.size() - colon - 1 || k < 1 || k > 26) throw std::invalid_argument("rank");
    return k;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rank in group tag: " + tag);
  }
}

}  // namespace

std::unique_ptr<GroupOracle> make_group(const std::string& tag) {
  using S = SemidirectOracle::Spec;
  if (tag == "zd2_Z") return std::make_unique<SemidirectOracle>(S::zd2_Z);
  if (tag == "zd2_X") return std::make_unique<SemidirectOracle>(S::zd2_X);
  if (tag == "zd8_Zp") return std::make_unique<SemidirectOracle>(S::zd8_Zp);
  if (tag == "zd8_Xp") return std::make_unique<SemidirectOracle>(S::zd8_Xp);
  if (tag == "inf_dihedral") return std::make_unique<InfiniteDihedralOracle>();
  auto colon = tag.find(':');
  if (colon != std::string::npos) {
    std::string head = tag.substr(0, colon);
    if (head == "free") return std::make_unique<FreeGroupOracle>(parse_rank(tag, colon));
    if (head == "free_abelian") return std::make_unique<FreeAbelianOracle>(parse_rank(tag, colon));
  }
  throw std::invalid_argument("unknown group tag: " + tag);
}

const std::vector<GroupTagInfo>& group_tags() {
  static const std::vector<GroupTagInfo> tags = {
      {"zd2_Z", "Z^2 x| Z/2 = <a,b,t | t^2, ab=ba, tat=b> over a<A<b<B<t"},
      {"zd2_X", "same group over c=a^2, d=ab: a<c<A<C<d<D<t"},
      {"zd8_Zp", "Z^2 x| D8, u acting trivially, over a<A<b<B<t<u"},
      {"zd8_Xp", "Z^2 x| D8 over a<c<A<C<d<D<t<u"},
      {"free:k", "free group of rank k over a<A<b<B<..."},
      {"free_abelian:k", "Z^k over a<A<b<B<..."},
      {"inf_dihedral", "Z x| Z/2 = <x,s | s^2, sxs=x^-1> over x<X<s"},
  };
  return tags;
}

std::string group_json(const GroupOracle& o) {
  nlohmann::ordered_json j;
  j["tag"] = o.name();
  nlohmann::ordered_json letters = nlohmann::ordered_json::array();
  for (Letter x = 0; x < o.alphabet().size(); ++x)
    letters.push_back({{"name", o.alphabet().name(x)}, {"inverse", o.alphabet().name(o.alphabet().inverse(x))}});
  j["alphabet"] = letters;
  j["order"] = o.alphabet().names();
  return j.dump();
}

}  // namespace conjlang
