#pragma once

// Published-order presentation of computed data and the end-to-end check of
// every published G(32,27) value.

#include <optional>
#include <string>
#include <vector>

#include "qslab/characters.hpp"
#include "qslab/fixtures.hpp"
#include "qslab/report.hpp"

namespace qslab {

/// Column and row order used for display: the published order when a
/// reference table aligns, otherwise the canonical order.
struct TableView {
  std::vector<std::size_t> columns;  // class indices in display order
  std::vector<std::size_t> rows;     // table rows in display order
  std::vector<std::string> column_labels;
  bool published = false;

  static TableView canonical(const CharacterTable& table);
  /// Throws AlignmentError when `ref` does not fit `table`.
  static TableView aligned(const CharacterTable& table, const ReferenceTable& ref);

  /// Display position of a class / row.
  std::size_t column_position(std::size_t cls) const;
  std::size_t row_position(std::size_t row) const;
  /// "chi_<position + 1>" for a table row.
  std::string row_name(std::size_t row) const;
};

/// Runs every published check in order. Failures, including exceptions
/// raised along the way, become failing entries; this never throws.
VerificationReport verify_paper(const PaperFixtures& fixtures);

}  // namespace qslab
