#include "qslab/characters.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

#include "qslab/errors.hpp"

namespace qslab {

// ------------------------------------------------------------- ClassFunction

ClassFunction::ClassFunction(GroupPtr group, std::vector<Cyclotomic> values)
    : group_(std::move(group)), values_(std::move(values)) {
  if (values_.size() != group_->class_count())
    throw std::invalid_argument("class function has " + std::to_string(values_.size()) +
                                " values, group has " +
                                std::to_string(group_->class_count()) + " classes");
}

ClassFunction ClassFunction::zero(GroupPtr group) {
  return constant(std::move(group), Cyclotomic(0));
}

ClassFunction ClassFunction::constant(GroupPtr group, const Cyclotomic& value) {
  const auto r = group->class_count();
  return ClassFunction(std::move(group), std::vector<Cyclotomic>(r, value));
}

ClassFunction ClassFunction::from_integers(GroupPtr group, std::span<const std::int64_t> values) {
  std::vector<Cyclotomic> v(values.begin(), values.end());
  return ClassFunction(std::move(group), std::move(v));
}

const Cyclotomic& ClassFunction::at(const GroupElement& g) const {
  return values_[group_->class_of(g)];
}

ClassFunction ClassFunction::conj() const {
  auto out = *this;
  for (auto& v : out.values_) v = v.conj();
  return out;
}

bool ClassFunction::is_real() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](const Cyclotomic& v) { return v == v.conj(); });
}

std::optional<std::vector<std::int64_t>> ClassFunction::integer_values() const {
  std::vector<std::int64_t> out;
  out.reserve(values_.size());
  for (const auto& v : values_) {
    if (!v.is_integer()) return std::nullopt;
    out.push_back(v.to_integer());
  }
  return out;
}

void ClassFunction::require_same(const ClassFunction& other) const {
  if (group_ != other.group_) throw GroupMismatch("class functions on different groups");
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& rhs) {
  require_same(rhs);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += rhs.values_[i];
  return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& rhs) {
  require_same(rhs);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= rhs.values_[i];
  return *this;
}

ClassFunction& ClassFunction::operator*=(const ClassFunction& rhs) {
  require_same(rhs);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] *= rhs.values_[i];
  return *this;
}

ClassFunction& ClassFunction::operator*=(const Cyclotomic& scalar) {
  for (auto& v : values_) v *= scalar;
  return *this;
}

Cyclotomic inner_product(const ClassFunction& f, const ClassFunction& h) {
  if (f.group_ptr() != h.group_ptr()) throw GroupMismatch("inner product across groups");
  const auto& g = f.group();
  Cyclotomic sum;
  for (std::size_t c = 0; c < f.size(); ++c) {
    const auto size = static_cast<std::int64_t>(g.classes()[c].size());
    sum += Cyclotomic(size) * f[c] * h[c].conj();
  }
  return sum / Rational(static_cast<std::int64_t>(g.order()));
}

// ------------------------------------------------------------ CharacterTable

CharacterTable::CharacterTable(GroupPtr group, std::vector<ClassFunction> rows)
    : group_(std::move(group)), rows_(std::move(rows)) {
  for (const auto& r : rows_)
    if (r.group_ptr() != group_) throw GroupMismatch("table row on a different group");
}

std::vector<std::int64_t> CharacterTable::degrees() const {
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < rows_.size(); ++i) out.push_back(degree(i));
  return out;
}

std::vector<std::size_t> CharacterTable::rows_of_degree(std::int64_t d) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (degree(i) == d) out.push_back(i);
  return out;
}

std::size_t CharacterTable::trivial_row() const {
  const auto one = ClassFunction::constant(group_, Cyclotomic(1));
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (rows_[i] == one) return i;
  throw PreconditionFailed("table has no trivial character");
}

bool CharacterTable::is_real() const {
  return std::all_of(rows_.begin(), rows_.end(),
                     [](const ClassFunction& r) { return r.is_real(); });
}

CharacterTable CharacterTable::reordered(std::span<const std::size_t> order) const {
  std::vector<ClassFunction> rows;
  rows.reserve(order.size());
  for (auto i : order) rows.push_back(rows_.at(i));
  return CharacterTable(group_, std::move(rows));
}

std::optional<std::string> CharacterTable::check_orthogonality() const {
  const auto& g = *group_;
  const std::size_t r = g.class_count();
  if (rows_.size() != r)
    return "table has " + std::to_string(rows_.size()) + " rows for " + std::to_string(r) +
           " classes";
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i; j < r; ++j) {
      const auto ip = inner_product(rows_[i], rows_[j]);
      if (ip != Cyclotomic(i == j ? 1 : 0))
        return "row orthogonality fails for rows " + std::to_string(i + 1) + ", " +
               std::to_string(j + 1) + ": " + ip.to_string();
    }
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = a; b < r; ++b) {
      Cyclotomic s;
      for (const auto& row : rows_) s += row[a] * row[b].conj();
      const std::int64_t expected =
          a == b ? static_cast<std::int64_t>(g.order() / g.classes()[a].size()) : 0;
      if (s != Cyclotomic(expected))
        return "column orthogonality fails for classes " + std::to_string(a + 1) + ", " +
               std::to_string(b + 1) + ": " + s.to_string();
    }
  std::int64_t sum_sq = 0;
  for (const auto& row : rows_) {
    if (!row[0].is_integer() || row[0].to_integer() <= 0)
      return "degree " + row[0].to_string() + " is not a positive integer";
    const auto d = row[0].to_integer();
    if (static_cast<std::int64_t>(g.order()) % d != 0)
      return "degree " + std::to_string(d) + " does not divide the group order";
    sum_sq += d * d;
  }
  if (sum_sq != static_cast<std::int64_t>(g.order()))
    return "sum of squared degrees is " + std::to_string(sum_sq);
  return std::nullopt;
}

std::int64_t class_mult_coefficient(const FiniteGroup& g, std::size_t i, std::size_t j,
                                    std::size_t k) {
  const auto r = g.class_count();
  if (i >= r || j >= r || k >= r) throw std::out_of_range("class index out of range");
  const auto& classes = g.classes();
  const auto z = classes[k].representative;
  std::int64_t count = 0;
  for (auto x : classes[i].members)
    if (g.class_of(g.mul(g.inv(x), z)) == j) ++count;
  return count;
}

// ------------------------------------------------------------- decomposition

Decomposition decompose(const ClassFunction& f, const CharacterTable& table) {
  if (f.group_ptr() != table.group_ptr()) throw GroupMismatch("decompose across groups");
  Decomposition out;
  for (std::size_t i = 0; i < table.size(); ++i) {
    const auto m = inner_product(f, table[i]);
    if (!m.is_integer())
      throw NotACharacter("multiplicity of row " + std::to_string(i + 1) + " is " +
                          m.to_string() + "; not a virtual character");
    out.multiplicities.push_back(m.to_integer());
    if (out.multiplicities.back() < 0) out.has_negative = true;
  }
  if (!(recombine(out.multiplicities, table) == f))
    throw NotACharacter("class function is not in the span of the table");
  return out;
}

ClassFunction recombine(std::span<const std::int64_t> multiplicities,
                        const CharacterTable& table) {
  if (multiplicities.size() != table.size())
    throw std::invalid_argument("multiplicity vector length does not match table");
  auto out = ClassFunction::zero(table.group_ptr());
  for (std::size_t i = 0; i < table.size(); ++i)
    if (multiplicities[i] != 0) out += table[i] * Cyclotomic(multiplicities[i]);
  return out;
}

// ----------------------------------------------------------- reference table

namespace {

struct Line {
  std::size_t number;
  std::string text;
};

std::string_view strip(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const auto start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

Word parse_word(std::string_view text, std::size_t line, std::size_t column) {
  Word w;
  std::size_t start = 0;
  while (true) {
    const auto star = text.find('*', start);
    const auto tok = strip(text.substr(start, star == std::string_view::npos ? text.npos : star - start));
    if (tok.empty()) throw ParseError(line, column, std::string(text), "empty factor in word");
    w.emplace_back(tok);
    if (star == std::string_view::npos) break;
    start = star + 1;
  }
  return w;
}

std::string join_word(const Word& w) {
  if (w.empty()) return "1";
  std::string out = w.front();
  for (std::size_t i = 1; i < w.size(); ++i) out += "*" + w[i];
  return out;
}

std::int64_t parse_int(std::string_view tok, std::size_t line, std::size_t column) {
  std::int64_t v = 0;
  const auto* first = tok.data();
  const auto* last = tok.data() + tok.size();
  if (!tok.empty() && tok.front() == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last)
    throw ParseError(line, column, std::string(tok), "expected an integer");
  return v;
}

}  // namespace

ReferenceTable parse_reference_table(std::string_view text) {
  std::vector<Line> lines;
  {
    std::size_t number = 1;
    std::size_t start = 0;
    while (start <= text.size()) {
      const auto nl = text.find('\n', start);
      auto raw = text.substr(start, nl == std::string_view::npos ? text.npos : nl - start);
      if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
      const auto s = strip(raw);
      if (!s.empty()) lines.push_back({number, std::string(s)});
      if (nl == std::string_view::npos) break;
      start = nl + 1;
      ++number;
    }
  }
  std::size_t pos = 0;
  auto expect_line = [&](std::string_view what) -> const Line& {
    if (pos >= lines.size())
      throw ParseError(lines.empty() ? 1 : lines.back().number, 1, "",
                       "unexpected end of fixture, expected " + std::string(what));
    return lines[pos++];
  };

  ReferenceTable ref;
  {
    const auto& l = expect_line("format line");
    const auto f = split_ws(l.text);
    if (f.size() != 3 || f[0] != "format" || f[1] != "qslab-chartable" || f[2] != "1")
      throw ParseError(l.number, 1, l.text, "expected 'format qslab-chartable 1'");
  }
  {
    const auto& l = expect_line("group line");
    const auto f = split_ws(l.text);
    if (f.size() != 2 || f[0] != "group") throw ParseError(l.number, 1, l.text, "expected 'group <name>'");
    ref.group = std::string(f[1]);
  }
  std::size_t count = 0;
  {
    const auto& l = expect_line("classes line");
    const auto f = split_ws(l.text);
    if (f.size() != 2 || f[0] != "classes")
      throw ParseError(l.number, 1, l.text, "expected 'classes <count>'");
    const auto c = parse_int(f[1], l.number, 9);
    if (c <= 0) throw ParseError(l.number, 9, std::string(f[1]), "class count must be positive");
    count = static_cast<std::size_t>(c);
  }
  for (std::size_t c = 0; c < count; ++c) {
    const auto& l = expect_line("class line");
    std::string_view body = l.text;
    std::string_view members;
    if (const auto colon = body.find(':'); colon != std::string_view::npos) {
      members = strip(body.substr(colon + 1));
      body = strip(body.substr(0, colon));
    }
    const auto f = split_ws(body);
    if (f.size() != 3 || f[0] != "class")
      throw ParseError(l.number, 1, l.text, "expected 'class <size> <label> [: <members>]'");
    ReferenceTable::Column col;
    const auto size = parse_int(f[1], l.number, 7);
    if (size <= 0) throw ParseError(l.number, 7, std::string(f[1]), "class size must be positive");
    col.size = static_cast<std::size_t>(size);
    col.label = parse_word(f[2], l.number, 1);
    if (!members.empty()) {
      std::size_t start = 0;
      while (true) {
        const auto comma = members.find(',', start);
        const auto tok = strip(members.substr(start, comma == std::string_view::npos ? members.npos : comma - start));
        col.members.push_back(parse_word(tok, l.number, 1));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
      }
      if (col.members.size() != col.size)
        throw ParseError(l.number, 1, l.text, "class size does not match member count");
    }
    ref.columns.push_back(std::move(col));
  }
  {
    const auto& l = expect_line("characters line");
    if (l.text != "characters") throw ParseError(l.number, 1, l.text, "expected 'characters'");
  }
  for (std::size_t r = 0; r < count; ++r) {
    const auto& l = expect_line("character row");
    const auto f = split_ws(l.text);
    if (f.size() != count)
      throw ParseError(l.number, 1, l.text,
                       "expected " + std::to_string(count) + " values, got " + std::to_string(f.size()));
    std::vector<std::int64_t> row;
    for (const auto& tok : f)
      row.push_back(parse_int(tok, l.number, static_cast<std::size_t>(tok.data() - l.text.data()) + 1));
    ref.values.push_back(std::move(row));
  }
  if (pos != lines.size())
    throw ParseError(lines[pos].number, 1, lines[pos].text, "trailing content after table");
  return ref;
}

std::string format_reference_table(const ReferenceTable& ref) {
  std::ostringstream out;
  out << "format qslab-chartable 1\n";
  out << "group " << ref.group << "\n";
  out << "classes " << ref.columns.size() << "\n";
  for (const auto& col : ref.columns) {
    out << "class " << col.size << " " << join_word(col.label);
    if (!col.members.empty()) {
      out << " :";
      for (std::size_t i = 0; i < col.members.size(); ++i)
        out << (i == 0 ? " " : ", ") << join_word(col.members[i]);
    }
    out << "\n";
  }
  out << "characters\n";
  for (const auto& row : ref.values) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i == 0 ? "" : " ") << row[i];
    out << "\n";
  }
  return out.str();
}

ReferenceTable reference_from(const CharacterTable& table, std::string group_name) {
  const auto& g = table.group();
  ReferenceTable ref;
  ref.group = std::move(group_name);
  for (const auto& cls : g.classes()) {
    ReferenceTable::Column col;
    col.size = cls.size();
    col.label = g.normal_form(g.element(cls.representative));
    for (auto m : cls.members) col.members.push_back(g.normal_form(g.element(m)));
    ref.columns.push_back(std::move(col));
  }
  for (const auto& row : table.rows()) {
    auto v = row.integer_values();
    if (!v) throw std::domain_error("table has non-integer values");
    ref.values.push_back(std::move(*v));
  }
  return ref;
}

Alignment align_to_reference(const CharacterTable& table, const ReferenceTable& ref) {
  const auto& g = table.group();
  const std::size_t r = g.class_count();
  if (ref.columns.size() != r || ref.values.size() != r || table.size() != r)
    throw AlignmentError("reference is " + std::to_string(ref.values.size()) + "x" +
                         std::to_string(ref.columns.size()) + ", group has " +
                         std::to_string(r) + " classes");
  auto eval = [&](const Word& w) {
    try {
      return g.index_of(g.evaluate(w));
    } catch (const std::invalid_argument& e) {
      throw AlignmentError(std::string("reference word: ") + e.what());
    }
  };

  Alignment out;
  std::vector<bool> used(r, false);
  for (std::size_t c = 0; c < r; ++c) {
    const auto& col = ref.columns[c];
    const auto cls = g.class_of(eval(col.label));
    if (used[cls])
      throw AlignmentError("reference column " + std::to_string(c + 1) + " (" +
                           join_word(col.label) + ") repeats a class");
    used[cls] = true;
    const auto& members = g.classes()[cls].members;
    if (col.size != members.size())
      throw AlignmentError("class of " + join_word(col.label) + " has size " +
                           std::to_string(members.size()) + ", reference says " +
                           std::to_string(col.size));
    if (!col.members.empty()) {
      std::set<std::size_t> listed;
      for (const auto& w : col.members) listed.insert(eval(w));
      if (listed != std::set<std::size_t>(members.begin(), members.end()))
        throw AlignmentError("class of " + join_word(col.label) +
                             " does not match the reference membership");
    }
    out.columns.push_back(cls);
  }

  std::vector<bool> taken(r, false);
  for (std::size_t row = 0; row < r; ++row) {
    std::optional<std::size_t> match;
    for (std::size_t i = 0; i < r && !match; ++i) {
      if (taken[i]) continue;
      bool same = true;
      for (std::size_t c = 0; c < r && same; ++c)
        same = table[i][out.columns[c]] == Cyclotomic(ref.values[row][c]);
      if (same) match = i;
    }
    if (!match)
      throw AlignmentError("reference row " + std::to_string(row + 1) +
                           " matches no computed character");
    taken[*match] = true;
    out.rows.push_back(*match);
  }
  return out;
}

}  // namespace qslab
