#pragma once

// Finite groups N x| Q with N = F_2^k and Q = F_2^m, Q acting on N through
// commuting involutive matrices. Every element is enumerated up front; all
// algorithms below work on element indices into that enumeration.

#include <bitset>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qslab {

inline constexpr std::size_t kMaxRank = 10;
inline constexpr std::size_t kMaxGroupOrder = std::size_t{1} << kMaxRank;
inline constexpr std::size_t kDefaultEnumerationBound = 64;

/// Membership bitmap over the canonical element enumeration.
using ElementSet = std::bitset<kMaxGroupOrder>;

/// Word in generator labels, read left to right as a product. The empty word
/// (or the single token "1") is the identity.
using Word = std::vector<std::string>;

/// Square matrix over F_2. Row r is a bit mask whose bit c is entry (r, c);
/// the matrix acts on column vectors whose bit i is coordinate i.
class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  explicit Gf2Matrix(std::vector<std::uint32_t> rows);

  static Gf2Matrix identity(std::size_t dim);

  std::size_t dim() const noexcept { return rows_.size(); }
  bool at(std::size_t row, std::size_t col) const;
  const std::vector<std::uint32_t>& rows() const noexcept { return rows_; }

  std::uint32_t apply(std::uint32_t v) const;
  Gf2Matrix operator*(const Gf2Matrix& rhs) const;
  Gf2Matrix transposed() const;
  bool invertible() const;

  bool operator==(const Gf2Matrix&) const = default;

 private:
  std::vector<std::uint32_t> rows_;
};

struct GeneratorLabel {
  std::string name;
  std::uint32_t n = 0;  // bit i = coordinate e_{i+1} of N
  std::uint32_t q = 0;  // bit j = coordinate f_{j+1} of Q

  bool operator==(const GeneratorLabel&) const = default;
};

struct GroupSpec {
  std::size_t n_rank = 0;
  std::size_t q_rank = 0;
  std::vector<Gf2Matrix> action;  // image of each Q basis vector
  std::vector<GeneratorLabel> generators;

  bool operator==(const GroupSpec&) const = default;
};

/// The built-in SmallGroup(32,27) as Z_2^4 x| Z_2 with generators g1..g5.
GroupSpec g32_27_spec();

/// Throws MalformedSpec when an invariant of `spec` fails.
void validate_spec(const GroupSpec& spec);

struct GroupElement {
  std::uint32_t n = 0;
  std::uint32_t q = 0;

  auto operator<=>(const GroupElement&) const = default;
};

struct ConjugacyClass {
  std::vector<std::size_t> members;  // ascending element indices
  std::size_t representative = 0;   // == members.front()
  std::size_t representative_order = 1;

  std::size_t size() const noexcept { return members.size(); }
};

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

class Subgroup {
 public:
  Subgroup(GroupPtr parent, ElementSet elements,
           std::vector<GroupElement> generators);

  const FiniteGroup& parent() const noexcept { return *parent_; }
  const GroupPtr& parent_ptr() const noexcept { return parent_; }
  const ElementSet& elements() const noexcept { return elements_; }
  std::size_t order() const noexcept { return elements_.count(); }
  std::span<const GroupElement> generators() const noexcept {
    return generators_;
  }

  bool contains(std::size_t index) const { return elements_.test(index); }
  bool contains(const GroupElement& g) const;
  std::vector<std::size_t> indices() const;

  /// Same parent and same element set; generators are only a witness.
  bool operator==(const Subgroup& other) const {
    return parent_ == other.parent_ && elements_ == other.elements_;
  }

 private:
  GroupPtr parent_;
  ElementSet elements_;
  std::vector<GroupElement> generators_;
};

/// Immutable after construction; safe to share between threads.
class FiniteGroup : public std::enable_shared_from_this<FiniteGroup> {
  struct Token {};

 public:
  FiniteGroup(Token, GroupSpec spec);
  friend GroupPtr build_group(GroupSpec spec);

  const GroupSpec& spec() const noexcept { return spec_; }
  std::size_t order() const noexcept { return elements_.size(); }
  std::size_t exponent() const noexcept { return exponent_; }
  bool is_abelian() const noexcept { return classes_.size() == order(); }

  // Elements in canonical order: lexicographic on the bit string
  // n_1..n_k q_1..q_m, so index 0 is the identity.
  std::span<const GroupElement> elements() const noexcept { return elements_; }
  const GroupElement& element(std::size_t index) const {
    return elements_.at(index);
  }
  std::size_t index_of(const GroupElement& g) const;

  std::size_t mul(std::size_t a, std::size_t b) const {
    return table_[a * order() + b];
  }
  std::size_t inv(std::size_t a) const { return inverse_[a]; }
  std::size_t power(std::size_t a, std::size_t k) const;
  std::size_t conjugate(std::size_t x, std::size_t g) const;  // g x g^-1
  std::size_t element_order(std::size_t a) const { return orders_[a]; }

  GroupElement identity() const { return elements_.front(); }
  GroupElement multiply(const GroupElement& a, const GroupElement& b) const;
  GroupElement inverse(const GroupElement& a) const;
  std::size_t element_order(const GroupElement& g) const;

  // Generator labels and words.
  std::optional<GroupElement> find_generator(std::string_view name) const;
  GroupElement generator(std::string_view name) const;
  GroupElement evaluate(const Word& word) const;
  GroupElement evaluate(std::string_view text) const;  // "g1*g2", "1"
  /// Normal form: generators in declared order, each at most once.
  Word normal_form(const GroupElement& g) const;
  std::string format(const GroupElement& g) const;
  std::string format(std::size_t index) const { return format(element(index)); }

  // Conjugacy classes, ordered by (representative order, class size,
  // representative index); class 0 is {1}.
  std::span<const ConjugacyClass> classes() const noexcept { return classes_; }
  std::size_t class_count() const noexcept { return classes_.size(); }
  std::size_t class_of(std::size_t element) const { return class_of_[element]; }
  std::size_t class_of(const GroupElement& g) const {
    return class_of_[index_of(g)];
  }
  std::size_t inverse_class(std::size_t cls) const;
  std::size_t power_class(std::size_t cls, std::size_t k) const;

  // Subgroups.
  Subgroup subgroup_closure(std::span<const GroupElement> gens) const;
  Subgroup subgroup_from_words(std::span<const Word> gens) const;
  Subgroup whole() const;
  Subgroup trivial() const;
  Subgroup cyclic(const GroupElement& g) const;
  std::vector<GroupElement> right_transversal(const Subgroup& h) const;
  bool is_normal(const Subgroup& h) const;
  Subgroup center() const;

  /// Every subgroup, each with a minimum-size generating witness, in
  /// breadth-first discovery order (trivial subgroup first).
  std::vector<Subgroup> enumerate_subgroups(
      std::size_t bound = kDefaultEnumerationBound) const;
  std::vector<Subgroup> enumerate_normal_subgroups(
      std::size_t bound = kDefaultEnumerationBound) const;

  void require_same(const Subgroup& h) const;

 private:
  std::size_t index_from_coords(std::uint32_t n, std::uint32_t q) const;
  void build_classes();
  ElementSet close(ElementSet seed, std::span<const std::size_t> gens) const;

  GroupSpec spec_;
  std::vector<GroupElement> elements_;
  std::vector<std::uint16_t> table_;
  std::vector<std::uint16_t> inverse_;
  std::vector<std::uint16_t> orders_;
  std::vector<std::uint32_t> normal_form_;  // bit i set: generator i present
  std::vector<std::size_t> generator_index_;
  std::size_t exponent_ = 1;
  std::vector<ConjugacyClass> classes_;
  std::vector<std::size_t> class_of_;
};

/// Builds and enumerates the group; throws MalformedSpec on invalid input.
GroupPtr build_group(GroupSpec spec);

}  // namespace qslab
