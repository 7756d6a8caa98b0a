#pragma once

// Spherical systems of generators, stabilizer sets, fixed points of the
// associated G-cover of P^1, and Riemann-Hurwitz data for its quotients.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qslab/characters.hpp"
#include "qslab/group.hpp"

namespace qslab {

struct SphericalValidation;

/// A generating tuple (t_1, ..., t_r) with product one. Only constructible
/// through validate_spherical / make_spherical.
class SphericalSystem {
 public:
  const FiniteGroup& group() const noexcept { return *group_; }
  const GroupPtr& group_ptr() const noexcept { return group_; }
  std::size_t size() const noexcept { return entries_.size(); }
  /// Element indices in tuple order.
  std::span<const std::size_t> entries() const noexcept { return entries_; }
  GroupElement entry(std::size_t i) const { return group_->element(entries_.at(i)); }
  /// Order of each entry, in tuple order.
  std::span<const std::size_t> orders() const noexcept { return orders_; }
  /// Sorted orders.
  std::span<const std::size_t> type() const noexcept { return type_; }

  bool operator==(const SphericalSystem& other) const {
    return group_ == other.group_ && entries_ == other.entries_;
  }

 private:
  friend SphericalValidation validate_spherical(const GroupPtr& group,
                                                std::span<const GroupElement> entries);
  SphericalSystem(GroupPtr group, std::vector<std::size_t> entries);

  GroupPtr group_;
  std::vector<std::size_t> entries_;
  std::vector<std::size_t> orders_;
  std::vector<std::size_t> type_;
};

struct SphericalValidation {
  std::optional<SphericalSystem> system;
  std::vector<std::string> diagnostics;  // empty iff system is set
  bool ok() const noexcept { return system.has_value(); }
};

SphericalValidation validate_spherical(const GroupPtr& group,
                                       std::span<const GroupElement> entries);
/// As validate_spherical, throwing InvalidStructure with the diagnostics.
SphericalSystem make_spherical(const GroupPtr& group, std::span<const GroupElement> entries);

/// All conjugates of all powers of the entries, including the identity.
ElementSet stabilizer_set(const SphericalSystem& t);
bool is_disjoint(const SphericalSystem& t1, const SphericalSystem& t2);

/// A disjoint pair of spherical systems on the same group.
struct RamificationStructure {
  SphericalSystem first;
  SphericalSystem second;
};
/// Throws InvalidStructure when the stabilizer sets meet outside the identity.
RamificationStructure make_ramification_structure(SphericalSystem t1, SphericalSystem t2);

/// Riemann-Hurwitz: 2g - 2 = n(-2 + sum(1 - 1/m_i)). Throws InconsistentType
/// when g is not a nonnegative integer.
std::int64_t genus_from_type(std::size_t group_order, std::span<const std::size_t> type);
std::int64_t genus(const SphericalSystem& t);

/// Number of points of the cover fixed by g != 1, counted over right cosets
/// of each <t_i> by conjugating the cyclic stabilizers with a right
/// transversal. Throws WholeCurve for the identity.
std::size_t fixed_point_count(const SphericalSystem& t, std::size_t element);
std::size_t fixed_point_count(const SphericalSystem& t, const GroupElement& g);

/// Same count from the other direction: sum_i #{x : x g x^-1 in <t_i>} / |<t_i>|.
std::size_t fixed_point_count_by_conjugation(const SphericalSystem& t, std::size_t element);

/// Per class in canonical order; nullopt marks the identity class (the whole
/// curve is fixed).
using FixedPointTable = std::vector<std::optional<std::size_t>>;
FixedPointTable fixed_point_table(const SphericalSystem& t);

/// chi_K(1) = genus, chi_K(g) = (2 - |Fix(g)|) / 2 otherwise. Throws
/// PreconditionFailed unless every character in `table` is real.
ClassFunction canonical_character(const SphericalSystem& t, const CharacterTable& table);

struct CoveringCurve {
  SphericalSystem system;
  std::int64_t genus = 0;
  FixedPointTable fixed_points;
  ClassFunction canonical_character;
};
CoveringCurve covering_curve(const SphericalSystem& t, const CharacterTable& table);

/// Genus of C/H via Riemann-Hurwitz for C/H -> P^1, with <t_i> acting on the
/// right cosets H\G by right multiplication.
std::int64_t quotient_genus(const SphericalSystem& t, const Subgroup& h);

struct FiberOrbit {
  std::size_t size = 0;
  std::size_t stabilizer_order = 0;

  auto operator<=>(const FiberOrbit&) const = default;
};

struct FiberOrbitStructure {
  std::size_t fiber_size = 0;
  std::vector<FiberOrbit> orbits;  // sorted
  bool acts_freely = false;
};

/// The fiber over branch point `branch` (1-based, tuple order) is the set of
/// right cosets <t_i>x; H acts by right multiplication and the stabilizer of
/// <t_i>x is H n x^-1 <t_i> x. Throws std::out_of_range for a bad branch.
FiberOrbitStructure fiber_orbit_structure(const SphericalSystem& t, std::size_t branch,
                                          const Subgroup& h);

}  // namespace qslab
