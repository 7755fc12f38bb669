#pragma once

#include <memory>
#include <string>
#include <vector>

#include "conjlang/langkit/group_oracle.hpp"

namespace conjlang {

/// Tags: zd2_Z, zd2_X, zd8_Zp, zd8_Xp, free:k, free_abelian:k, inf_dihedral.
/// Throws std::invalid_argument for an unknown tag.
std::unique_ptr<GroupOracle> make_group(const std::string& tag);

struct GroupTagInfo {
  std::string tag;
  std::string description;
};

/// Every tag make_group understands (parametrized tags shown with k).
const std::vector<GroupTagInfo>& group_tags();

/// {"tag":...,"alphabet":[{"name":..,"inverse":..},...],"order":[...]}
std::string group_json(const GroupOracle& o);

}  // namespace conjlang
