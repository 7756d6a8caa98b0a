#include "qslab/phantom.hpp"

#include "qslab/errors.hpp"

namespace qslab {

namespace {

std::int64_t invariant_integer(const ClassFunction& f) {
  const auto one = ClassFunction::constant(f.group_ptr(), Cyclotomic(1));
  const auto v = inner_product(f, one);
  if (!v.is_integer()) throw NotACharacter("invariant part " + v.to_string() + " is not an integer");
  return v.to_integer();
}

}  // namespace

BundleCohomology structure_sheaf(const CharacterTable& table, const ClassFunction& canonical) {
  return {table[table.trivial_row()], canonical.conj()};
}

std::int64_t invariant_dimension(const ClassFunction& f) {
  const auto d = invariant_integer(f);
  if (d < 0) throw NotACharacter("negative invariant dimension " + std::to_string(d));
  return d;
}

CohomologyDims cohomology_dims(const BundleCohomology& c, const BundleCohomology& m,
                               const ClassFunction& chi) {
  CohomologyDims out;
  out.h0 = invariant_dimension(c.h0 * m.h0 * chi);
  out.h1 = invariant_dimension((c.h0 * m.h1 + c.h1 * m.h0) * chi);
  out.h2 = invariant_dimension(c.h1 * m.h1 * chi);
  return out;
}

std::int64_t kunneth_euler(const ClassFunction& virt_c, const ClassFunction& virt_d,
                           const ClassFunction& chi) {
  return invariant_integer(virt_c * virt_d * chi);
}

std::vector<std::size_t> admissible_characters(const CharacterTable& table,
                                               const BundleCohomology& c,
                                               const BundleCohomology& m) {
  std::vector<std::size_t> out;
  for (auto row : table.rows_of_degree(1)) {
    const auto& chi = table[row];
    if (invariant_dimension(c.h0 * m.h0 * chi) == 0 && invariant_dimension(c.h1 * m.h1 * chi) == 0)
      out.push_back(row);
  }
  return out;
}

SearchReport search_all_pairs(const CharacterTable& table, const BundleCohomology& c,
                              std::size_t h1_linear) {
  if (table.degree(h1_linear) != 1)
    throw PreconditionFailed("row " + std::to_string(h1_linear + 1) + " is not a linear character");
  const auto trivial = table.trivial_row();
  const auto& one = table[trivial];
  const auto& lin = table[h1_linear];
  const auto virt_c = c.h0 - c.h1;
  const auto twists = table.rows_of_degree(1);
  const auto planes = table.rows_of_degree(2);

  SearchReport report;
  report.theorem_holds = true;
  report.trivial_never_admissible = true;
  report.euler_consistent = true;
  for (auto a : planes)
    for (auto b : planes) {
      const BundleCohomology m{one + table[a], lin + table[b]};
      const auto virt_d = m.h0 - m.h1;
      PairResult pair;
      pair.a = a;
      pair.b = b;
      pair.euler_zero_for_all_twists = true;
      for (auto x : twists) {
        TwistDiagnostics t;
        t.chi = x;
        t.dims = cohomology_dims(c, m, table[x]);
        t.euler = kunneth_euler(virt_c, virt_d, table[x]);
        t.admissible = t.dims.h0 == 0 && t.dims.h2 == 0;
        if (t.admissible) pair.admissible.push_back(x);
        if (t.euler != 0) pair.euler_zero_for_all_twists = false;
        if (t.euler != t.dims.euler()) report.euler_consistent = false;
        pair.twists.push_back(t);
      }
      if (pair.admissible.empty()) report.theorem_holds = false;
      for (auto x : pair.admissible)
        if (x == trivial) report.trivial_never_admissible = false;
      report.pairs.push_back(std::move(pair));
    }
  return report;
}

}  // namespace qslab
