#include "qslab/ramification.hpp"

#include <algorithm>
#include <stdexcept>

#include "qslab/errors.hpp"

namespace qslab {

namespace {

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i == 0 ? "" : sep) + parts[i];
  return out;
}

// Maps each element to the index of its right coset C*x (C = `sub`).
std::vector<std::size_t> right_coset_ids(const FiniteGroup& g, const Subgroup& sub,
                                         std::size_t* count) {
  const auto members = sub.indices();
  std::vector<std::size_t> ids(g.order(), g.order());
  std::size_t next = 0;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (ids[x] != g.order()) continue;
    for (auto c : members) ids[g.mul(c, x)] = next;
    ++next;
  }
  if (count) *count = next;
  return ids;
}

}  // namespace

SphericalSystem::SphericalSystem(GroupPtr group, std::vector<std::size_t> entries)
    : group_(std::move(group)), entries_(std::move(entries)) {
  for (auto e : entries_) orders_.push_back(group_->element_order(e));
  type_ = orders_;
  std::sort(type_.begin(), type_.end());
}

SphericalValidation validate_spherical(const GroupPtr& group,
                                       std::span<const GroupElement> entries) {
  SphericalValidation out;
  if (entries.empty()) {
    out.diagnostics.push_back("empty tuple");
    return out;
  }
  const auto& g = *group;
  std::vector<std::size_t> idx;
  for (const auto& e : entries) idx.push_back(g.index_of(e));
  if (idx.size() < 2) out.diagnostics.push_back("a spherical system needs at least two entries");
  for (std::size_t i = 0; i < idx.size(); ++i)
    if (idx[i] == 0) out.diagnostics.push_back("entry " + std::to_string(i + 1) + " is the identity");
  std::size_t product = 0;
  for (auto i : idx) product = g.mul(product, i);
  if (product != 0) out.diagnostics.push_back("product of entries is " + g.format(product) + ", not 1");
  const auto span = g.subgroup_closure(entries);
  if (span.order() != g.order())
    out.diagnostics.push_back("entries generate a subgroup of order " + std::to_string(span.order()) +
                              ", not the whole group of order " + std::to_string(g.order()));
  if (out.diagnostics.empty()) out.system = SphericalSystem(group, std::move(idx));
  return out;
}

SphericalSystem make_spherical(const GroupPtr& group, std::span<const GroupElement> entries) {
  auto v = validate_spherical(group, entries);
  if (!v.ok()) throw InvalidStructure(join(v.diagnostics, "; "));
  return std::move(*v.system);
}

ElementSet stabilizer_set(const SphericalSystem& t) {
  const auto& g = t.group();
  ElementSet out;
  out.set(0);
  for (auto e : t.entries())
    for (std::size_t j = 1; j < g.element_order(e); ++j) {
      const auto p = g.power(e, j);
      for (std::size_t x = 0; x < g.order(); ++x) out.set(g.conjugate(p, x));
    }
  return out;
}

bool is_disjoint(const SphericalSystem& t1, const SphericalSystem& t2) {
  if (t1.group_ptr() != t2.group_ptr()) throw GroupMismatch("systems on different groups");
  auto both = stabilizer_set(t1) & stabilizer_set(t2);
  both.reset(0);
  return both.none();
}

RamificationStructure make_ramification_structure(SphericalSystem t1, SphericalSystem t2) {
  if (!is_disjoint(t1, t2))
    throw InvalidStructure("stabilizer sets meet outside the identity");
  return {std::move(t1), std::move(t2)};
}

std::int64_t genus_from_type(std::size_t group_order, std::span<const std::size_t> type) {
  // 2g - 2 = n(-2 + sum(1 - 1/m)); work with the rational right-hand side.
  Rational rhs = -2;
  for (auto m : type) {
    if (m == 0) throw InconsistentType("branching order 0");
    rhs += Rational(1) - Rational(1, static_cast<std::int64_t>(m));
  }
  rhs *= static_cast<std::int64_t>(group_order);
  const Rational g = (rhs + 2) / 2;
  if (denominator(g) != 1 || g < 0)
    throw InconsistentType("order " + std::to_string(group_order) + " and this type give genus " +
                           g.str());
  return numerator(g).convert_to<std::int64_t>();
}

std::int64_t genus(const SphericalSystem& t) { return genus_from_type(t.group().order(), t.type()); }

std::size_t fixed_point_count(const SphericalSystem& t, std::size_t element) {
  const auto& g = t.group();
  if (element == 0) throw WholeCurve("the identity fixes every point");
  std::size_t count = 0;
  for (auto e : t.entries()) {
    const auto c = g.cyclic(g.element(e));
    for (const auto& x : g.right_transversal(c))
      if (c.contains(g.conjugate(element, g.index_of(x)))) ++count;
  }
  return count;
}

std::size_t fixed_point_count(const SphericalSystem& t, const GroupElement& g) {
  return fixed_point_count(t, t.group().index_of(g));
}

std::size_t fixed_point_count_by_conjugation(const SphericalSystem& t, std::size_t element) {
  const auto& g = t.group();
  if (element == 0) throw WholeCurve("the identity fixes every point");
  std::size_t count = 0;
  for (auto e : t.entries()) {
    const auto c = g.cyclic(g.element(e));
    std::size_t hits = 0;
    for (std::size_t x = 0; x < g.order(); ++x)
      if (c.contains(g.conjugate(element, x))) ++hits;
    count += hits / c.order();
  }
  return count;
}

FixedPointTable fixed_point_table(const SphericalSystem& t) {
  FixedPointTable out;
  for (const auto& cls : t.group().classes()) {
    if (cls.representative == 0)
      out.emplace_back(std::nullopt);
    else
      out.emplace_back(fixed_point_count(t, cls.representative));
  }
  return out;
}

ClassFunction canonical_character(const SphericalSystem& t, const CharacterTable& table) {
  if (table.group_ptr() != t.group_ptr()) throw GroupMismatch("table and system on different groups");
  if (!table.is_real())
    throw PreconditionFailed("the group has non-real characters; the real-valued Lefschetz formula does not apply");
  std::vector<Cyclotomic> values;
  for (const auto& cls : t.group().classes()) {
    if (cls.representative == 0) {
      values.emplace_back(genus(t));
    } else {
      const auto fix = static_cast<std::int64_t>(fixed_point_count(t, cls.representative));
      values.emplace_back(Rational(2 - fix, 2));
    }
  }
  return ClassFunction(t.group_ptr(), std::move(values));
}

CoveringCurve covering_curve(const SphericalSystem& t, const CharacterTable& table) {
  return {t, genus(t), fixed_point_table(t), canonical_character(t, table)};
}

std::int64_t quotient_genus(const SphericalSystem& t, const Subgroup& h) {
  const auto& g = t.group();
  g.require_same(h);
  std::size_t cosets = 0;
  const auto ids = right_coset_ids(g, h, &cosets);
  std::vector<std::size_t> rep(cosets);
  for (std::size_t x = g.order(); x-- > 0;) rep[ids[x]] = x;

  std::int64_t ramification = 0;
  for (auto e : t.entries()) {
    std::vector<bool> seen(cosets, false);
    for (std::size_t c = 0; c < cosets; ++c) {
      if (seen[c]) continue;
      std::size_t size = 0;
      auto x = rep[c];
      while (!seen[ids[x]]) {
        seen[ids[x]] = true;
        ++size;
        x = g.mul(x, e);
      }
      ramification += static_cast<std::int64_t>(size) - 1;
    }
  }
  const std::int64_t two_g_minus_two = -2 * static_cast<std::int64_t>(cosets) + ramification;
  if (two_g_minus_two % 2 != 0 || two_g_minus_two < -2)
    throw InconsistentType("Riemann-Hurwitz gives 2g - 2 = " + std::to_string(two_g_minus_two));
  return two_g_minus_two / 2 + 1;
}

FiberOrbitStructure fiber_orbit_structure(const SphericalSystem& t, std::size_t branch,
                                          const Subgroup& h) {
  const auto& g = t.group();
  g.require_same(h);
  if (branch == 0 || branch > t.size())
    throw std::out_of_range("branch index " + std::to_string(branch) + " outside 1.." +
                            std::to_string(t.size()));
  const auto c = g.cyclic(t.entry(branch - 1));
  std::size_t points = 0;
  const auto ids = right_coset_ids(g, c, &points);
  std::vector<std::size_t> rep(points);
  for (std::size_t x = g.order(); x-- > 0;) rep[ids[x]] = x;
  const auto hs = h.indices();

  FiberOrbitStructure out;
  out.fiber_size = points;
  std::vector<bool> seen(points, false);
  for (std::size_t p = 0; p < points; ++p) {
    if (seen[p]) continue;
    std::size_t size = 0;
    std::vector<std::size_t> frontier{p};
    seen[p] = true;
    while (!frontier.empty()) {
      const auto q = frontier.back();
      frontier.pop_back();
      ++size;
      for (auto y : hs) {
        const auto r = ids[g.mul(rep[q], y)];
        if (!seen[r]) {
          seen[r] = true;
          frontier.push_back(r);
        }
      }
    }
    std::size_t stab = 0;
    for (auto y : hs)
      if (ids[g.mul(rep[p], y)] == p) ++stab;
    out.orbits.push_back({size, stab});
  }
  std::sort(out.orbits.begin(), out.orbits.end());
  out.acts_freely = std::all_of(out.orbits.begin(), out.orbits.end(),
                                [](const FiberOrbit& o) { return o.stabilizer_order == 1; });
  return out;
}

}  // namespace qslab
