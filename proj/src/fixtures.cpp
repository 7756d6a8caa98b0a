#include "qslab/fixtures.hpp"

#include "qslab/errors.hpp"
#include "qslab/lang.hpp"

namespace qslab {

SubgroupList parse_subgroup_list(std::string_view text) {
  SubgroupList out;
  std::size_t line_no = 0;
  std::size_t header = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto nl = text.find('\n', start);
    auto line = text.substr(start, nl == std::string_view::npos ? text.npos : nl - start);
    start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) continue;
    line = line.substr(b, line.find_last_not_of(" \t\r") - b + 1);
    if (header == 0) {
      if (line != "format qslab-subgroups 1")
        throw ParseError(line_no, 1, std::string(line), "expected 'format qslab-subgroups 1'");
      ++header;
    } else if (header == 1) {
      if (line.substr(0, 6) != "group ")
        throw ParseError(line_no, 1, std::string(line), "expected 'group <name>'");
      out.group = std::string(line.substr(6));
      ++header;
    } else {
      try {
        out.subgroups.push_back(parse_word_list(line));
      } catch (const ParseError& e) {
        throw ParseError(line_no, e.column(), e.token(), e.message());
      }
    }
  }
  if (header < 2) throw ParseError(line_no, 1, "", "missing header");
  return out;
}

PaperFixtures PaperFixtures::builtin() {
  return {std::string(builtin::g32_27_declarations()), std::string(builtin::g32_27_character_table()),
          std::string(builtin::g32_27_normal_subgroups())};
}

}  // namespace qslab
