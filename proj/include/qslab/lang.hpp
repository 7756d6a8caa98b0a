#pragma once

// The .alg declaration language:
//
//   group NAME { normal rank INT; quotient rank INT;
//                action q1 = [ROW; ROW; ...]; gen NAME = (NBITS, QBITS); }
//   structure NAME on GROUP = [WORD, WORD, ...];
//   subgroup NAME on GROUP = [WORD, ...];
//
// Matrix rows are bit strings, entry (r, c) being character c of row r.
// A WORD is NAME {* NAME} or 1. '#' starts a comment.

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qslab/group.hpp"
#include "qslab/ramification.hpp"

namespace qslab {

struct GroupDecl {
  std::string name;
  GroupSpec spec;  // empty generator list means the default labels

  bool operator==(const GroupDecl&) const = default;
};

struct WordListDecl {
  std::string name;
  std::string group;
  std::vector<Word> words;

  bool operator==(const WordListDecl&) const = default;
};

struct SessionModel {
  std::vector<GroupDecl> groups;
  std::vector<WordListDecl> structures;
  std::vector<WordListDecl> subgroups;

  const GroupDecl* find_group(std::string_view name) const;
  const WordListDecl* find_structure(std::string_view name) const;
  const WordListDecl* find_subgroup(std::string_view name) const;

  bool operator==(const SessionModel&) const = default;
};

/// Throws ParseError on syntax errors, unknown names, dimension mismatches,
/// malformed group specs and duplicate declarations.
SessionModel parse_input(std::string_view text);
std::string print_model(const SessionModel& model);

/// "g2*g5, g4" -> two words. Throws ParseError.
std::vector<Word> parse_word_list(std::string_view text);
std::string format_word(const Word& w);

/// Built groups for a parsed model, keyed by declaration name.
class Session {
 public:
  explicit Session(SessionModel model);

  const SessionModel& model() const noexcept { return model_; }
  const GroupPtr& group(std::string_view name) const;
  /// The only declared group; throws std::invalid_argument when there are
  /// zero or several.
  const std::string& default_group() const;

  SphericalSystem structure(std::string_view name) const;
  Subgroup subgroup(std::string_view name) const;
  Subgroup subgroup_from_words(std::string_view group, const std::vector<Word>& words) const;

 private:
  SessionModel model_;
  std::map<std::string, GroupPtr, std::less<>> groups_;
};

}  // namespace qslab
