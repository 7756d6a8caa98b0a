#pragma once

// Command output as a small document model, rendered to text, JSON or
// Markdown. JSON output carries the schema name "qslab-report" and a version;
// numbers are always exact integers, everything else is a string.

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace qslab {

enum class Format { Text, Json, Markdown };

/// "text", "json", "md"/"markdown". Throws std::invalid_argument.
Format parse_format(std::string_view name);

using Cell = std::variant<std::int64_t, std::string, bool>;

struct DocTable {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

struct Document {
  std::string kind;  // command name
  std::vector<std::pair<std::string, Cell>> fields;
  std::vector<DocTable> tables;
};

inline constexpr int kReportSchemaVersion = 1;

std::string render(const Document& doc, Format format);

struct Check {
  std::string name;
  std::string anchor;  // the published statement being certified
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct VerificationReport {
  std::vector<Check> checks;

  bool passed() const;
  const Check* first_failure() const;
  Document to_document() const;
};

}  // namespace qslab
