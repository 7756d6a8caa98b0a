#pragma once

// Shared fixtures for the unit tests: the built-in session, its character
// table aligned to the published order, and the bridge to the oracle model.

#include <cstdint>
#include <string>
#include <vector>

#include "oracle/g32_27_oracle.hpp"
#include "qslab/characters.hpp"
#include "qslab/fixtures.hpp"
#include "qslab/lang.hpp"
#include "qslab/verify.hpp"

namespace support {

inline const qslab::Session& session() {
  static const qslab::Session s(qslab::parse_input(qslab::builtin::g32_27_declarations()));
  return s;
}

inline const qslab::GroupPtr& group() { return session().group("g32_27"); }

inline const qslab::CharacterTable& table() {
  static const qslab::CharacterTable t = qslab::compute_character_table(group());
  return t;
}

inline const qslab::ReferenceTable& reference() {
  static const qslab::ReferenceTable r =
      qslab::parse_reference_table(qslab::builtin::g32_27_character_table());
  return r;
}

inline const qslab::TableView& view() {
  static const qslab::TableView v = qslab::TableView::aligned(table(), reference());
  return v;
}

/// Published row chi_k (1-based).
inline const qslab::ClassFunction& chi(std::size_t k) { return table()[view().rows.at(k - 1)]; }

inline oracle::El to_oracle(const qslab::GroupElement& g) {
  oracle::El e;
  for (int i = 0; i < 4; ++i) e.n[i] = static_cast<int>((g.n >> i) & 1U);
  e.q = static_cast<int>(g.q & 1U);
  return e;
}

inline std::size_t published_class(std::size_t element) {
  return static_cast<std::size_t>(oracle::published_class_of(to_oracle(group()->element(element))));
}

/// Values of f listed in published class order.
inline std::vector<std::int64_t> published_values(const qslab::ClassFunction& f) {
  std::vector<std::int64_t> out;
  for (auto c : view().columns) out.push_back(f[c].to_integer());
  return out;
}

/// Class function built from values in published class order.
inline qslab::ClassFunction from_published(const oracle::Vals& v) {
  std::vector<std::int64_t> canon(group()->class_count());
  for (std::size_t p = 0; p < canon.size(); ++p) canon[view().columns[p]] = v[p];
  return qslab::ClassFunction::from_integers(group(), canon);
}

}  // namespace support
