#include "qslab/report.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>
#include <sstream>
#include <stdexcept>

namespace qslab {

namespace {

std::string cell_text(const Cell& c) {
  if (const auto* i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
  if (const auto* b = std::get_if<bool>(&c)) return *b ? "yes" : "no";
  return std::get<std::string>(c);
}

nlohmann::ordered_json cell_json(const Cell& c) {
  if (const auto* i = std::get_if<std::int64_t>(&c)) return *i;
  if (const auto* b = std::get_if<bool>(&c)) return *b;
  return std::get<std::string>(c);
}

std::string render_text(const Document& doc) {
  std::ostringstream out;
  std::size_t key_width = 0;
  for (const auto& [k, v] : doc.fields) key_width = std::max(key_width, k.size());
  for (const auto& [k, v] : doc.fields)
    out << k << ":" << std::string(key_width - k.size() + 1, ' ') << cell_text(v) << "\n";
  for (const auto& t : doc.tables) {
    if (!doc.fields.empty() || &t != &doc.tables.front()) out << "\n";
    if (!t.name.empty()) out << t.name << "\n";
    std::vector<std::size_t> width(t.columns.size());
    std::vector<bool> numeric(t.columns.size(), true);
    for (std::size_t c = 0; c < t.columns.size(); ++c) width[c] = t.columns[c].size();
    for (const auto& row : t.rows)
      for (std::size_t c = 0; c < row.size() && c < width.size(); ++c) {
        width[c] = std::max(width[c], cell_text(row[c]).size());
        if (!std::holds_alternative<std::int64_t>(row[c])) numeric[c] = false;
      }
    auto line = [&](const std::vector<std::string>& cells) {
      std::string s;
      for (std::size_t c = 0; c < cells.size(); ++c) {
        const std::string pad(width[c] - cells[c].size(), ' ');
        s += (c ? "  " : "") + (numeric[c] ? pad + cells[c] : cells[c] + pad);
      }
      while (!s.empty() && s.back() == ' ') s.pop_back();
      out << s << "\n";
    };
    line(t.columns);
    for (const auto& row : t.rows) {
      std::vector<std::string> cells;
      for (const auto& c : row) cells.push_back(cell_text(c));
      line(cells);
    }
  }
  return out.str();
}

std::string md_escape(std::string s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

std::string render_markdown(const Document& doc) {
  std::ostringstream out;
  out << "# " << doc.kind << "\n";
  if (!doc.fields.empty()) {
    out << "\n";
    for (const auto& [k, v] : doc.fields) out << "- **" << k << "**: " << md_escape(cell_text(v)) << "\n";
  }
  for (const auto& t : doc.tables) {
    out << "\n";
    if (!t.name.empty()) out << "## " << t.name << "\n\n";
    out << "|";
    for (const auto& c : t.columns) out << " " << md_escape(c) << " |";
    out << "\n|";
    for (std::size_t c = 0; c < t.columns.size(); ++c) out << "---|";
    out << "\n";
    for (const auto& row : t.rows) {
      out << "|";
      for (const auto& c : row) out << " " << md_escape(cell_text(c)) << " |";
      out << "\n";
    }
  }
  return out.str();
}

std::string render_json(const Document& doc) {
  nlohmann::ordered_json j;
  j["schema"] = "qslab-report";
  j["version"] = kReportSchemaVersion;
  j["kind"] = doc.kind;
  for (const auto& [k, v] : doc.fields) j[k] = cell_json(v);
  for (const auto& t : doc.tables) {
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
      nlohmann::ordered_json o = nlohmann::ordered_json::object();
      for (std::size_t c = 0; c < row.size() && c < t.columns.size(); ++c) o[t.columns[c]] = cell_json(row[c]);
      rows.push_back(std::move(o));
    }
    j[t.name] = std::move(rows);
  }
  return j.dump(2) + "\n";
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "text") return Format::Text;
  if (name == "json") return Format::Json;
  if (name == "md" || name == "markdown") return Format::Markdown;
  throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

std::string render(const Document& doc, Format format) {
  switch (format) {
    case Format::Text:
      return render_text(doc);
    case Format::Json:
      return render_json(doc);
    case Format::Markdown:
      return render_markdown(doc);
  }
  throw std::logic_error("unhandled format");
}

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

const Check* VerificationReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.pass) return &c;
  return nullptr;
}

Document VerificationReport::to_document() const {
  Document doc;
  doc.kind = "verify-paper";
  doc.fields.emplace_back("status", std::string(passed() ? "pass" : "fail"));
  doc.fields.emplace_back("passed", static_cast<std::int64_t>(
                                        std::count_if(checks.begin(), checks.end(),
                                                      [](const Check& c) { return c.pass; })));
  doc.fields.emplace_back("total", static_cast<std::int64_t>(checks.size()));
  DocTable t;
  t.name = "checks";
  t.columns = {"name", "anchor", "expected", "computed", "pass"};
  for (const auto& c : checks) t.rows.push_back({c.name, c.anchor, c.expected, c.computed, c.pass});
  doc.tables.push_back(std::move(t));
  return doc;
}

}  // namespace qslab
