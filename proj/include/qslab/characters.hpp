#pragma once

// Class functions, the irreducible character table (Dixon-Schneider over a
// prime field, lifted back to Q(zeta_e)), decomposition into irreducibles and
// realignment against a published table.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qslab/cyclotomic.hpp"
#include "qslab/group.hpp"

namespace qslab {

/// Values indexed by the group's canonical class order.
class ClassFunction {
 public:
  ClassFunction(GroupPtr group, std::vector<Cyclotomic> values);

  static ClassFunction zero(GroupPtr group);
  static ClassFunction constant(GroupPtr group, const Cyclotomic& value);
  static ClassFunction from_integers(GroupPtr group, std::span<const std::int64_t> values);

  const FiniteGroup& group() const noexcept { return *group_; }
  const GroupPtr& group_ptr() const noexcept { return group_; }
  std::size_t size() const noexcept { return values_.size(); }
  const std::vector<Cyclotomic>& values() const noexcept { return values_; }
  const Cyclotomic& operator[](std::size_t cls) const { return values_.at(cls); }
  const Cyclotomic& at(const GroupElement& g) const;

  ClassFunction conj() const;
  bool is_real() const;
  /// Values as integers, if every value is a rational integer.
  std::optional<std::vector<std::int64_t>> integer_values() const;

  ClassFunction& operator+=(const ClassFunction& rhs);
  ClassFunction& operator-=(const ClassFunction& rhs);
  ClassFunction& operator*=(const ClassFunction& rhs);  // pointwise
  ClassFunction& operator*=(const Cyclotomic& scalar);

  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
  friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
  friend ClassFunction operator*(ClassFunction a, const ClassFunction& b) { return a *= b; }
  friend ClassFunction operator*(ClassFunction a, const Cyclotomic& s) { return a *= s; }
  friend ClassFunction operator*(const Cyclotomic& s, ClassFunction a) { return a *= s; }

  bool operator==(const ClassFunction& other) const {
    return group_ == other.group_ && values_ == other.values_;
  }

 private:
  void require_same(const ClassFunction& other) const;

  GroupPtr group_;
  std::vector<Cyclotomic> values_;
};

/// (1/|G|) sum_K |K| f(K) conj(h(K)).
Cyclotomic inner_product(const ClassFunction& f, const ClassFunction& h);

class CharacterTable {
 public:
  CharacterTable(GroupPtr group, std::vector<ClassFunction> rows);

  const FiniteGroup& group() const noexcept { return *group_; }
  const GroupPtr& group_ptr() const noexcept { return group_; }
  std::size_t size() const noexcept { return rows_.size(); }
  const ClassFunction& operator[](std::size_t row) const { return rows_.at(row); }
  std::span<const ClassFunction> rows() const noexcept { return rows_; }

  std::int64_t degree(std::size_t row) const { return rows_.at(row)[0].to_integer(); }
  std::vector<std::int64_t> degrees() const;
  std::vector<std::size_t> rows_of_degree(std::int64_t d) const;
  std::size_t trivial_row() const;
  bool is_real() const;

  /// Row `i` of the result is row `order[i]` of this table.
  CharacterTable reordered(std::span<const std::size_t> order) const;

  /// nullopt when both orthogonality relations and the degree identity hold;
  /// otherwise a description of the first violation.
  std::optional<std::string> check_orthogonality() const;

 private:
  GroupPtr group_;
  std::vector<ClassFunction> rows_;
};

/// #{(x, y) in K_i x K_j : xy = z} for a fixed z in K_k.
std::int64_t class_mult_coefficient(const FiniteGroup& g, std::size_t i, std::size_t j,
                                    std::size_t k);

/// Smallest prime p > 2*ceil(sqrt|G|) with p = 1 mod exponent(G).
std::uint64_t dixon_prime(const FiniteGroup& g);

/// Every irreducible character, exactly. Rows are sorted by degree ascending,
/// then by values under the canonical class order, descending (so the trivial
/// character is row 0).
CharacterTable compute_character_table(const GroupPtr& group);

struct Decomposition {
  std::vector<std::int64_t> multiplicities;
  bool has_negative = false;  // f is virtual, not genuine
};

/// Multiplicities <f, chi_i>. Throws NotACharacter when one is not an integer.
Decomposition decompose(const ClassFunction& f, const CharacterTable& table);

/// sum_i m_i chi_i.
ClassFunction recombine(std::span<const std::int64_t> multiplicities,
                        const CharacterTable& table);

// ---------------------------------------------------------------- reference

/// A published integer character table: its columns name classes by words,
/// rows are characters in published order.
struct ReferenceTable {
  struct Column {
    Word label;                 // column header word
    std::size_t size = 0;       // class size
    std::vector<Word> members;  // full class; may be empty (label only)
  };
  std::string group;
  std::vector<Column> columns;
  std::vector<std::vector<std::int64_t>> values;  // values[row][column]
};

/// Parses the "qslab-chartable 1" fixture format; throws ParseError.
ReferenceTable parse_reference_table(std::string_view text);
std::string format_reference_table(const ReferenceTable& ref);

/// Reference built from an integer-valued computed table, columns in
/// canonical class order.
ReferenceTable reference_from(const CharacterTable& table, std::string group_name);

struct Alignment {
  std::vector<std::size_t> rows;     // rows[r]: computed row matching reference row r
  std::vector<std::size_t> columns;  // columns[c]: class index of reference column c
};

/// Throws AlignmentError when the column words do not name the classes of
/// the group or no row bijection makes the tables identical.
Alignment align_to_reference(const CharacterTable& table, const ReferenceTable& ref);

}  // namespace qslab
