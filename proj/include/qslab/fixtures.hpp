#pragma once

// Built-in G(32,27) data: declarations, the published character table and
// the published normal subgroup list.

#include <string>
#include <string_view>
#include <vector>

#include "qslab/group.hpp"

namespace qslab {

namespace builtin {
std::string_view g32_27_declarations();
std::string_view g32_27_character_table();
std::string_view g32_27_normal_subgroups();
}  // namespace builtin

/// "format qslab-subgroups 1", "group NAME", then one generator list per line.
struct SubgroupList {
  std::string group;
  std::vector<std::vector<Word>> subgroups;
};
SubgroupList parse_subgroup_list(std::string_view text);

struct PaperFixtures {
  std::string declarations;
  std::string character_table;
  std::string normal_subgroups;

  static PaperFixtures builtin();
};

}  // namespace qslab
