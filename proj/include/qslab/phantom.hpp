#pragma once

// Invariant cohomology of O_C (x) M(chi) on (C x D)/G via Kuenneth, where the
// G-modules H^0(D, M) = chi_1 + A and H^1(D, M) = chi_h1 + B are hypotheses
// indexed by pairs (A, B) of 2-dimensional irreducibles.

#include <cstdint>
#include <vector>

#include "qslab/characters.hpp"

namespace qslab {

/// Characters of H^0 and H^1 of an equivariant bundle on a curve.
struct BundleCohomology {
  ClassFunction h0;
  ClassFunction h1;
};

/// H^0(O_C) is trivial and H^1(O_C) is dual to H^0(K_C).
BundleCohomology structure_sheaf(const CharacterTable& table, const ClassFunction& canonical);

/// <f, 1>. Throws NotACharacter when the result is negative or not an integer.
std::int64_t invariant_dimension(const ClassFunction& f);

struct CohomologyDims {
  std::int64_t h0 = 0;
  std::int64_t h1 = 0;
  std::int64_t h2 = 0;

  std::int64_t euler() const noexcept { return h0 - h1 + h2; }
  bool operator==(const CohomologyDims&) const = default;
};

/// Dimensions of the G-invariants of H^*(C, c) (x) H^*(D, m) (x) chi.
CohomologyDims cohomology_dims(const BundleCohomology& c, const BundleCohomology& m,
                               const ClassFunction& chi);

/// <virt_c * virt_d * chi, 1>.
std::int64_t kunneth_euler(const ClassFunction& virt_c, const ClassFunction& virt_d,
                           const ClassFunction& chi);

/// Linear rows chi of `table` with h^0 = h^2 = 0, ascending.
std::vector<std::size_t> admissible_characters(const CharacterTable& table,
                                               const BundleCohomology& c,
                                               const BundleCohomology& m);

struct TwistDiagnostics {
  std::size_t chi = 0;  // row of the table
  CohomologyDims dims;
  std::int64_t euler = 0;  // kunneth_euler on the virtual characters
  bool admissible = false;
};

struct PairResult {
  std::size_t a = 0;  // rows of the table
  std::size_t b = 0;
  std::vector<std::size_t> admissible;
  std::vector<TwistDiagnostics> twists;
  bool euler_zero_for_all_twists = false;
};

struct SearchReport {
  std::vector<PairResult> pairs;  // sorted by (a, b)
  bool theorem_holds = false;     // every pair has an admissible twist
  bool trivial_never_admissible = false;
  bool euler_consistent = false;  // h0 - h1 + h2 == kunneth_euler on every triple
};

/// Runs over every pair of degree-2 rows and every degree-1 twist. `h1_linear`
/// is the row of the linear character in H^1(D, M).
SearchReport search_all_pairs(const CharacterTable& table, const BundleCohomology& c,
                              std::size_t h1_linear);

}  // namespace qslab
