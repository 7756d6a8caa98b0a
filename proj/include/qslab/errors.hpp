#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace qslab {

/// A GroupSpec that violates its invariants (non-invertible, non-involutive
/// or non-commuting action matrices, bad generator coordinates, ...).
class MalformedSpec : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Elements, subgroups or class functions from different groups were mixed.
class GroupMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exhaustive enumeration was refused because the group is too large.
class EnumerationBound : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A class function failed an integrality requirement (not a (virtual)
/// character, or not a genuine character where one is required).
class NotACharacter : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The computed character table does not match a reference fixture.
class AlignmentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// (group order, branching type) pair with no integral genus.
class InconsistentType : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The identity fixes the whole curve; there is no finite count.
class WholeCurve : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A precondition of a computation does not hold (e.g. a non-real table fed
/// to the real-valued Lefschetz formula).
class PreconditionFailed : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Tuple rejected as a spherical system of generators.
class InvalidStructure : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Syntax or semantic error in an input text, with a source position.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, std::string token,
             const std::string& message)
      : std::runtime_error(format(line, column, token, message)),
        line_(line),
        column_(column),
        token_(std::move(token)),
        message_(message) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& token() const noexcept { return token_; }
  const std::string& message() const noexcept { return message_; }

 private:
  static std::string format(std::size_t line, std::size_t column,
                            const std::string& token,
                            const std::string& message) {
    std::string out = std::to_string(line) + ":" + std::to_string(column) +
                      ": " + message;
    if (!token.empty()) out += " (at '" + token + "')";
    return out;
  }

  std::size_t line_;
  std::size_t column_;
  std::string token_;
  std::string message_;
};

}  // namespace qslab
