#include "qslab/lang.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "qslab/errors.hpp"

namespace qslab {

namespace {

enum class Tok { Ident, Number, Punct, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    Token t;
    t.line = line;
    t.column = col;
    std::size_t j = i;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      t.kind = Tok::Ident;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      t.kind = Tok::Number;
    } else if (std::string_view("{}[]();=,*").find(c) != std::string_view::npos) {
      j = i + 1;
      t.kind = Tok::Punct;
    } else {
      throw ParseError(line, col, std::string(1, c), "unexpected character");
    }
    t.text = std::string(src.substr(i, j - i));
    advance(j - i);
    out.push_back(std::move(t));
  }
  Token end;
  end.line = line;
  end.column = col;
  out.push_back(end);
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  SessionModel file() {
    SessionModel m;
    while (peek().kind != Tok::End) {
      const auto& t = peek();
      if (t.kind == Tok::Ident && t.text == "group") {
        group_decl(m);
      } else if (t.kind == Tok::Ident && (t.text == "structure" || t.text == "subgroup")) {
        list_decl(m);
      } else {
        fail(t, "expected 'group', 'structure' or 'subgroup'");
      }
    }
    return m;
  }

  std::vector<Word> bare_word_list() {
    std::vector<Word> out;
    if (peek().kind == Tok::End) return out;
    out.push_back(word());
    while (accept(",")) out.push_back(word());
    if (peek().kind != Tok::End) fail(peek(), "expected ',' or end of list");
    return out;
  }

 private:
  [[noreturn]] void fail(const Token& t, const std::string& msg) const {
    throw ParseError(t.line, t.column, t.kind == Tok::End ? "end of input" : t.text, msg);
  }

  const Token& peek() const { return toks_[pos_]; }
  const Token& next() {
    const auto& t = toks_[pos_];
    if (t.kind != Tok::End) ++pos_;
    return t;
  }
  bool accept(std::string_view punct) {
    if (peek().kind == Tok::Punct && peek().text == punct) {
      ++pos_;
      return true;
    }
    return false;
  }
  const Token& expect(std::string_view punct) {
    if (peek().kind != Tok::Punct || peek().text != punct)
      fail(peek(), "expected '" + std::string(punct) + "'");
    return next();
  }
  void keyword(std::string_view kw) {
    if (peek().kind != Tok::Ident || peek().text != kw) fail(peek(), "expected '" + std::string(kw) + "'");
    next();
  }
  const Token& ident(std::string_view what) {
    if (peek().kind != Tok::Ident) fail(peek(), "expected " + std::string(what));
    return next();
  }
  std::size_t integer() {
    const auto& t = peek();
    if (t.kind != Tok::Number) fail(t, "expected an integer");
    std::size_t v = 0;
    const auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc{} || v > kMaxRank) fail(t, "rank out of range 0.." + std::to_string(kMaxRank));
    (void)p;
    next();
    return v;
  }
  std::uint32_t bits(const Token& t, std::size_t width, const std::string& what) {
    if (t.kind != Tok::Number) fail(t, "expected a bit string");
    for (char c : t.text)
      if (c != '0' && c != '1') fail(t, "bit strings use only 0 and 1");
    if (t.text.size() != width)
      fail(t, "dimension mismatch: " + what + " has " + std::to_string(t.text.size()) +
                  " bits, expected " + std::to_string(width));
    std::uint32_t v = 0;
    for (std::size_t i = 0; i < t.text.size(); ++i)
      if (t.text[i] == '1') v |= std::uint32_t{1} << i;
    return v;
  }

  Word word() {
    Word w;
    if (peek().kind == Tok::Number) {
      if (peek().text != "1") fail(peek(), "expected a generator name or 1");
      next();
      return w;
    }
    w.push_back(ident("a generator name").text);
    while (accept("*")) w.push_back(ident("a generator name").text);
    return w;
  }

  void group_decl(SessionModel& m) {
    next();
    const auto name_tok = ident("a group name");
    if (m.find_group(name_tok.text)) fail(name_tok, "duplicate group name");
    GroupDecl decl;
    decl.name = name_tok.text;
    expect("{");
    keyword("normal");
    keyword("rank");
    decl.spec.n_rank = integer();
    expect(";");
    keyword("quotient");
    keyword("rank");
    decl.spec.q_rank = integer();
    expect(";");
    if (decl.spec.n_rank + decl.spec.q_rank > kMaxRank)
      fail(name_tok, "group order exceeds 2^" + std::to_string(kMaxRank));
    const auto k = decl.spec.n_rank;
    const auto q = decl.spec.q_rank;
    while (peek().kind == Tok::Ident && peek().text == "action") {
      next();
      const auto qname = ident("a quotient generator q1..qm");
      const auto expected = "q" + std::to_string(decl.spec.action.size() + 1);
      if (qname.text != expected) fail(qname, "expected action for " + expected);
      if (decl.spec.action.size() >= q) fail(qname, "dimension mismatch: quotient rank is " + std::to_string(q));
      expect("=");
      const auto open = expect("[");
      std::vector<std::uint32_t> rows;
      std::vector<Token> row_toks;
      if (peek().kind == Tok::Number) {
        row_toks.push_back(next());
        while (accept(";")) {
          if (peek().kind != Tok::Number) fail(peek(), "expected a bit string");
          row_toks.push_back(next());
        }
      }
      expect("]");
      expect(";");
      if (row_toks.size() != k)
        fail(open, "dimension mismatch: " + qname.text + " has " + std::to_string(row_toks.size()) +
                       " rows, expected " + std::to_string(k));
      for (std::size_t r = 0; r < row_toks.size(); ++r)
        rows.push_back(bits(row_toks[r], k, qname.text + " row " + std::to_string(r + 1)));
      decl.spec.action.emplace_back(std::move(rows));
    }
    while (peek().kind == Tok::Ident && peek().text == "gen") {
      next();
      const auto g = ident("a generator name");
      for (const auto& other : decl.spec.generators)
        if (other.name == g.text) fail(g, "duplicate generator name");
      expect("=");
      expect("(");
      GeneratorLabel label;
      label.name = g.text;
      label.n = bits(next(), k, "N coordinate of " + g.text);
      expect(",");
      if (q > 0 || peek().kind == Tok::Number) label.q = bits(next(), q, "Q coordinate of " + g.text);
      expect(")");
      expect(";");
      decl.spec.generators.push_back(std::move(label));
    }
    const auto close = expect("}");
    if (decl.spec.action.size() != q)
      fail(close, "dimension mismatch: missing action for q" + std::to_string(decl.spec.action.size() + 1));
    try {
      validate_spec(decl.spec);
      groups_.emplace(decl.name, build_group(decl.spec));
    } catch (const MalformedSpec& e) {
      fail(name_tok, e.what());
    }
    m.groups.push_back(std::move(decl));
  }

  void list_decl(SessionModel& m) {
    const bool structure = next().text == "structure";
    const auto name_tok = ident(structure ? "a structure name" : "a subgroup name");
    if (structure ? m.find_structure(name_tok.text) != nullptr : m.find_subgroup(name_tok.text) != nullptr)
      fail(name_tok, structure ? "duplicate structure name" : "duplicate subgroup name");
    keyword("on");
    const auto gtok = ident("a group name");
    const auto it = groups_.find(gtok.text);
    if (it == groups_.end()) fail(gtok, "unknown group");
    expect("=");
    expect("[");
    WordListDecl decl;
    decl.name = name_tok.text;
    decl.group = gtok.text;
    if (!(peek().kind == Tok::Punct && peek().text == "]")) {
      do {
        const auto start = pos_;
        auto w = word();
        for (std::size_t i = 0; i < w.size(); ++i)
          if (!it->second->find_generator(w[i]))
            fail(toks_[start + 2 * i], "unknown generator in group " + gtok.text);
        decl.words.push_back(std::move(w));
      } while (accept(","));
    } else if (structure) {
      fail(peek(), "a structure needs at least one entry");
    }
    expect("]");
    expect(";");
    (structure ? m.structures : m.subgroups).push_back(std::move(decl));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::map<std::string, GroupPtr> groups_;
};

std::string bit_string(std::uint32_t v, std::size_t width) {
  std::string s;
  for (std::size_t i = 0; i < width; ++i) s += (v >> i) & 1 ? '1' : '0';
  return s;
}

template <class Decl>
const Decl* find_named(const std::vector<Decl>& v, std::string_view name) {
  for (const auto& d : v)
    if (d.name == name) return &d;
  return nullptr;
}

}  // namespace

const GroupDecl* SessionModel::find_group(std::string_view name) const { return find_named(groups, name); }
const WordListDecl* SessionModel::find_structure(std::string_view name) const {
  return find_named(structures, name);
}
const WordListDecl* SessionModel::find_subgroup(std::string_view name) const {
  return find_named(subgroups, name);
}

SessionModel parse_input(std::string_view text) { return Parser(lex(text)).file(); }

std::vector<Word> parse_word_list(std::string_view text) { return Parser(lex(text)).bare_word_list(); }

std::string format_word(const Word& w) {
  if (w.empty()) return "1";
  std::string out = w.front();
  for (std::size_t i = 1; i < w.size(); ++i) out += "*" + w[i];
  return out;
}

std::string print_model(const SessionModel& model) {
  std::ostringstream out;
  bool first = true;
  for (const auto& g : model.groups) {
    if (!first) out << "\n";
    first = false;
    const auto& s = g.spec;
    out << "group " << g.name << " {\n";
    out << "  normal rank " << s.n_rank << ";\n";
    out << "  quotient rank " << s.q_rank << ";\n";
    for (std::size_t i = 0; i < s.action.size(); ++i) {
      out << "  action q" << i + 1 << " = [";
      const auto& rows = s.action[i].rows();
      for (std::size_t r = 0; r < rows.size(); ++r) out << (r ? "; " : "") << bit_string(rows[r], s.n_rank);
      out << "];\n";
    }
    for (const auto& gen : s.generators)
      out << "  gen " << gen.name << " = (" << bit_string(gen.n, s.n_rank) << ", "
          << bit_string(gen.q, s.q_rank) << ");\n";
    out << "}\n";
  }
  auto lists = [&](const std::vector<WordListDecl>& decls, const char* kw) {
    if (decls.empty()) return;
    if (!first) out << "\n";
    first = false;
    for (const auto& d : decls) {
      out << kw << " " << d.name << " on " << d.group << " = [";
      for (std::size_t i = 0; i < d.words.size(); ++i) out << (i ? ", " : "") << format_word(d.words[i]);
      out << "];\n";
    }
  };
  lists(model.structures, "structure");
  lists(model.subgroups, "subgroup");
  return out.str();
}

// ------------------------------------------------------------------- Session

Session::Session(SessionModel model) : model_(std::move(model)) {
  for (const auto& g : model_.groups) groups_.emplace(g.name, build_group(g.spec));
}

const GroupPtr& Session::group(std::string_view name) const {
  const auto it = groups_.find(name);
  if (it == groups_.end()) throw std::invalid_argument("unknown group '" + std::string(name) + "'");
  return it->second;
}

const std::string& Session::default_group() const {
  if (model_.groups.size() != 1)
    throw std::invalid_argument("input declares " + std::to_string(model_.groups.size()) +
                                " groups; name one explicitly");
  return model_.groups.front().name;
}

SphericalSystem Session::structure(std::string_view name) const {
  const auto* decl = model_.find_structure(name);
  if (!decl) throw std::invalid_argument("unknown structure '" + std::string(name) + "'");
  const auto& g = group(decl->group);
  std::vector<GroupElement> entries;
  for (const auto& w : decl->words) entries.push_back(g->evaluate(w));
  auto v = validate_spherical(g, entries);
  if (!v.ok()) {
    std::string msg = "structure " + std::string(name) + ":";
    for (const auto& d : v.diagnostics) msg += " " + d + ";";
    msg.pop_back();
    throw InvalidStructure(msg);
  }
  return std::move(*v.system);
}

Subgroup Session::subgroup(std::string_view name) const {
  const auto* decl = model_.find_subgroup(name);
  if (!decl) throw std::invalid_argument("unknown subgroup '" + std::string(name) + "'");
  return subgroup_from_words(decl->group, decl->words);
}

Subgroup Session::subgroup_from_words(std::string_view group_name, const std::vector<Word>& words) const {
  return group(group_name)->subgroup_from_words(words);
}

}  // namespace qslab
