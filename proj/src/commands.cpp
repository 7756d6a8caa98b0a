#include "qslab/commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "qslab/cache.hpp"
#include "qslab/errors.hpp"
#include "qslab/lang.hpp"
#include "qslab/phantom.hpp"
#include "qslab/ramification.hpp"
#include "qslab/verify.hpp"

namespace qslab {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Cell value_cell(const Cyclotomic& v) {
  if (v.is_integer()) return v.to_integer();
  return v.to_string();
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

class Context {
 public:
  explicit Context(const CommandRequest& req) : req_(req) {
    const std::string source = req.input ? *req.input : "<built-in g32_27.alg>";
    const std::string text = req.input ? read_file(*req.input) : std::string(builtin::g32_27_declarations());
    try {
      session_.emplace(parse_input(text));
    } catch (const ParseError& e) {
      throw UsageError(source + ":" + e.what());
    }
  }

  const Session& session() const { return *session_; }

  const std::string& group_name() {
    if (group_name_.empty()) {
      if (!req_.positional.empty() && req_.command == "classes")
        group_name_ = req_.positional.front();
      else if (!req_.structures.empty())
        group_name_ = structure_decl(req_.structures.front()).group;
      else
        group_name_ = session_->default_group();
      if (!session_->model().find_group(group_name_)) throw UsageError("unknown group '" + group_name_ + "'");
    }
    return group_name_;
  }

  const GroupPtr& group() { return session_->group(group_name()); }

  const CharacterTable& table() {
    if (!table_) {
      std::optional<std::filesystem::path> dir;
      if (req_.cache_dir)
        dir = *req_.cache_dir;
      else if (const char* env = std::getenv("QSLAB_CACHE"); env && *env)
        dir = env;
      auto cached = load_or_compute_table(group(), dir);
      outcome_ = cached.outcome;
      table_.emplace(std::move(cached.table));
    }
    return *table_;
  }

  CacheOutcome cache_outcome() {
    table();
    return outcome_;
  }

  /// Published order when a reference for this group aligns.
  const TableView& view() {
    if (!view_) {
      const auto& t = table();
      std::optional<ReferenceTable> ref;
      const std::string text = req_.reference ? read_file(*req_.reference) : std::string(builtin::g32_27_character_table());
      try {
        ref = parse_reference_table(text);
      } catch (const ParseError& e) {
        throw UsageError((req_.reference ? *req_.reference : std::string("<built-in>")) + ":" + e.what());
      }
      if (ref->group == group_name()) {
        try {
          view_.emplace(TableView::aligned(t, *ref));
        } catch (const AlignmentError& e) {
          view_note_ = std::string("reference did not align: ") + e.what();
        }
      }
      if (!view_) view_.emplace(TableView::canonical(t));
    }
    return *view_;
  }

  std::vector<std::size_t> class_order() { return view().columns; }

  std::string class_label(std::size_t cls) {
    const auto& v = view();
    return v.column_labels.at(v.column_position(cls));
  }

  const std::string& view_note() const { return view_note_; }

  const WordListDecl& structure_decl(const std::string& name) const {
    const auto* d = session_->model().find_structure(name);
    if (!d) throw UsageError("unknown structure '" + name + "'");
    return *d;
  }

  SphericalSystem structure(std::size_t i = 0) {
    if (req_.structures.size() <= i) throw UsageError(req_.command + " needs --structure");
    structure_decl(req_.structures[i]);
    try {
      return session_->structure(req_.structures[i]);
    } catch (const InvalidStructure& e) {
      throw UsageError(e.what());
    }
  }

  Subgroup subgroup() {
    if (!req_.subgroup) throw UsageError(req_.command + " needs --subgroup");
    if (const auto* d = session_->model().find_subgroup(*req_.subgroup)) {
      if (d->group != group_name()) throw UsageError("subgroup '" + d->name + "' is on another group");
      return session_->subgroup(d->name);
    }
    try {
      return group()->subgroup_from_words(parse_word_list(*req_.subgroup));
    } catch (const ParseError& e) {
      throw UsageError("--subgroup: " + std::string(e.what()));
    }
  }

  std::string subgroup_label(const Subgroup& h) {
    std::vector<std::string> gens;
    for (const auto& x : h.generators()) gens.push_back(group()->format(x));
    return "<" + join(gens, ", ") + ">";
  }

 private:
  const CommandRequest& req_;
  std::optional<Session> session_;
  std::string group_name_;
  std::optional<CharacterTable> table_;
  CacheOutcome outcome_ = CacheOutcome::Disabled;
  std::optional<TableView> view_;
  std::string view_note_;
};

void add_order_note(Context& ctx, Document& doc) {
  doc.fields.emplace_back("class order", std::string(ctx.view().published ? "published" : "canonical"));
  if (!ctx.view_note().empty()) doc.fields.emplace_back("note", ctx.view_note());
}

Document cmd_info(Context& ctx) {
  const auto& g = *ctx.group();
  Document doc;
  doc.kind = "info";
  doc.fields.emplace_back("group", ctx.group_name());
  doc.fields.emplace_back("order", static_cast<std::int64_t>(g.order()));
  doc.fields.emplace_back("exponent", static_cast<std::int64_t>(g.exponent()));
  doc.fields.emplace_back("classes", static_cast<std::int64_t>(g.class_count()));
  doc.fields.emplace_back("abelian", g.is_abelian());
  std::vector<std::string> center;
  for (auto x : g.center().indices()) center.push_back(g.format(x));
  doc.fields.emplace_back("center", "{" + join(center, ", ") + "}");
  if (g.order() <= kDefaultEnumerationBound) {
    doc.fields.emplace_back("subgroups", static_cast<std::int64_t>(g.enumerate_subgroups().size()));
    doc.fields.emplace_back("normal subgroups", static_cast<std::int64_t>(g.enumerate_normal_subgroups().size()));
  }
  std::vector<std::string> s;
  std::vector<std::string> h;
  for (const auto& d : ctx.session().model().structures)
    if (d.group == ctx.group_name()) s.push_back(d.name);
  for (const auto& d : ctx.session().model().subgroups)
    if (d.group == ctx.group_name()) h.push_back(d.name);
  doc.fields.emplace_back("structures", join(s, ", "));
  doc.fields.emplace_back("declared subgroups", join(h, ", "));
  return doc;
}

Document cmd_classes(Context& ctx) {
  const auto& g = *ctx.group();
  Document doc;
  doc.kind = "classes";
  doc.fields.emplace_back("group", ctx.group_name());
  add_order_note(ctx, doc);
  DocTable t;
  t.name = "classes";
  t.columns = {"class", "size", "order", "representative", "members"};
  std::int64_t pos = 1;
  for (auto c : ctx.class_order()) {
    const auto& cls = g.classes()[c];
    std::vector<std::string> members;
    for (auto m : cls.members) members.push_back(g.format(m));
    t.rows.push_back({pos++, static_cast<std::int64_t>(cls.size()),
                      static_cast<std::int64_t>(cls.representative_order), ctx.class_label(c),
                      join(members, " ")});
  }
  doc.tables.push_back(std::move(t));
  return doc;
}

Document cmd_chartable(Context& ctx) {
  const auto& table = ctx.table();
  const auto& v = ctx.view();
  Document doc;
  doc.kind = "chartable";
  doc.fields.emplace_back("group", ctx.group_name());
  doc.fields.emplace_back("prime", static_cast<std::int64_t>(dixon_prime(table.group())));
  doc.fields.emplace_back("cache", std::string(cache_outcome_name(ctx.cache_outcome())));
  const auto err = table.check_orthogonality();
  doc.fields.emplace_back("orthogonality", err ? *err : std::string("holds"));
  add_order_note(ctx, doc);
  DocTable t;
  t.name = "characters";
  t.columns = {"character"};
  for (const auto& l : v.column_labels) t.columns.push_back(l);
  for (auto r : v.rows) {
    std::vector<Cell> row{v.row_name(r)};
    for (auto c : v.columns) row.push_back(value_cell(table[r][c]));
    t.rows.push_back(std::move(row));
  }
  doc.tables.push_back(std::move(t));
  return doc;
}

std::string type_string(const SphericalSystem& s) {
  std::vector<std::string> parts;
  for (auto m : s.type()) parts.push_back(std::to_string(m));
  return "[" + join(parts, ",") + "]";
}

Document cmd_fixed_points(Context& ctx, const CommandRequest& req) {
  const auto s = ctx.structure();
  Document doc;
  doc.kind = "fixed-points";
  doc.fields.emplace_back("structure", req.structures.front());
  doc.fields.emplace_back("type", type_string(s));
  doc.fields.emplace_back("genus", genus(s));
  add_order_note(ctx, doc);
  DocTable t;
  t.name = "fixed_points";
  t.columns = {"class", "fixed points"};
  const auto& g = s.group();
  for (auto c : ctx.class_order()) {
    const auto rep = g.classes()[c].representative;
    Cell v = rep == 0 ? Cell(std::string("whole-curve")) : Cell(static_cast<std::int64_t>(fixed_point_count(s, rep)));
    t.rows.push_back({ctx.class_label(c), v});
  }
  doc.tables.push_back(std::move(t));
  return doc;
}

std::string decomposition_string(Context& ctx, const ClassFunction& f) {
  const auto& v = ctx.view();
  const auto d = decompose(f, ctx.table());
  std::vector<std::string> terms;
  for (auto r : v.rows) {
    const auto m = d.multiplicities[r];
    if (m == 0) continue;
    terms.push_back((m == 1 ? std::string() : std::to_string(m) + "*") + v.row_name(r));
  }
  return terms.empty() ? "0" : join(terms, " + ");
}

Document cmd_canonical(Context& ctx, const CommandRequest& req) {
  const auto s = ctx.structure();
  const auto chi = canonical_character(s, ctx.table());
  Document doc;
  doc.kind = "canonical";
  doc.fields.emplace_back("structure", req.structures.front());
  doc.fields.emplace_back("genus", genus(s));
  doc.fields.emplace_back("decomposition", decomposition_string(ctx, chi));
  add_order_note(ctx, doc);
  DocTable t;
  t.name = "canonical_character";
  t.columns = {"class", "value"};
  for (auto c : ctx.class_order()) t.rows.push_back({ctx.class_label(c), value_cell(chi[c])});
  doc.tables.push_back(std::move(t));
  return doc;
}

Document cmd_quotient_genus(Context& ctx, const CommandRequest& req) {
  const auto s = ctx.structure();
  const auto h = ctx.subgroup();
  Document doc;
  doc.kind = "quotient-genus";
  doc.fields.emplace_back("structure", req.structures.front());
  doc.fields.emplace_back("subgroup", ctx.subgroup_label(h));
  doc.fields.emplace_back("subgroup order", static_cast<std::int64_t>(h.order()));
  doc.fields.emplace_back("index", static_cast<std::int64_t>(s.group().order() / h.order()));
  doc.fields.emplace_back("genus", quotient_genus(s, h));
  return doc;
}

Document cmd_fiber_orbits(Context& ctx, const CommandRequest& req) {
  const auto s = ctx.structure();
  const auto h = ctx.subgroup();
  Document doc;
  doc.kind = "fiber-orbits";
  doc.fields.emplace_back("structure", req.structures.front());
  doc.fields.emplace_back("subgroup", ctx.subgroup_label(h));
  DocTable t;
  t.name = "orbits";
  t.columns = {"branch", "entry", "fiber size", "orbit size", "stabilizer order", "orbits", "acts freely"};
  std::vector<std::size_t> branches;
  if (req.branch) {
    branches.push_back(*req.branch);
  } else {
    for (std::size_t b = 1; b <= s.size(); ++b) branches.push_back(b);
  }
  for (auto b : branches) {
    FiberOrbitStructure f;
    try {
      f = fiber_orbit_structure(s, b, h);
    } catch (const std::out_of_range& e) {
      throw UsageError(e.what());
    }
    std::size_t i = 0;
    while (i < f.orbits.size()) {
      std::size_t j = i;
      while (j < f.orbits.size() && f.orbits[j] == f.orbits[i]) ++j;
      t.rows.push_back({static_cast<std::int64_t>(b), s.group().format(s.entries()[b - 1]),
                        static_cast<std::int64_t>(f.fiber_size), static_cast<std::int64_t>(f.orbits[i].size),
                        static_cast<std::int64_t>(f.orbits[i].stabilizer_order), static_cast<std::int64_t>(j - i),
                        f.acts_freely});
      i = j;
    }
  }
  doc.tables.push_back(std::move(t));
  return doc;
}

Document cmd_sigma(Context& ctx, const CommandRequest& req) {
  const auto s = ctx.structure();
  const auto sigma = stabilizer_set(s);
  const auto& g = s.group();
  Document doc;
  doc.kind = "sigma";
  doc.fields.emplace_back("structure", req.structures.front());
  doc.fields.emplace_back("size", static_cast<std::int64_t>(sigma.count()));
  DocTable t;
  t.name = "elements";
  t.columns = {"element", "order"};
  for (std::size_t x = 0; x < g.order(); ++x)
    if (sigma.test(x)) t.rows.push_back({g.format(x), static_cast<std::int64_t>(g.element_order(x))});
  doc.tables.push_back(std::move(t));
  return doc;
}

Document cmd_disjoint(Context& ctx, const CommandRequest& req, int& exit_code) {
  if (req.structures.size() != 2) throw UsageError("disjoint needs exactly two --structure options");
  const auto a = ctx.structure(0);
  const auto b = ctx.structure(1);
  if (a.group_ptr() != b.group_ptr()) throw UsageError("structures are on different groups");
  auto shared = stabilizer_set(a) & stabilizer_set(b);
  shared.reset(0);
  std::vector<std::string> common;
  for (std::size_t x = 0; x < a.group().order(); ++x)
    if (shared.test(x)) common.push_back(a.group().format(x));
  const bool disjoint = is_disjoint(a, b);
  if (!disjoint) exit_code = kExitVerificationFailed;
  Document doc;
  doc.kind = "disjoint";
  doc.fields.emplace_back("structures", req.structures[0] + ", " + req.structures[1]);
  doc.fields.emplace_back("disjoint", disjoint);
  doc.fields.emplace_back("shared non-identity elements", "{" + join(common, ", ") + "}");
  return doc;
}

std::string chi_list(const TableView& v, const std::vector<std::size_t>& rows) {
  std::vector<std::size_t> pos;
  for (auto r : rows) pos.push_back(v.row_position(r));
  std::sort(pos.begin(), pos.end());
  std::vector<std::string> names;
  for (auto p : pos) names.push_back("chi_" + std::to_string(p + 1));
  return join(names, " ");
}

Document cmd_search(Context& ctx, const CommandRequest& req, int& exit_code) {
  const auto& table = ctx.table();
  const auto& v = ctx.view();
  // The curve C defaults to the structure named T1.
  const std::string sname = req.structures.empty() ? "T1" : req.structures.front();
  ctx.structure_decl(sname);
  const auto s = ctx.session().structure(sname);
  if (v.rows.size() < 4) throw UsageError("search needs at least four characters");
  const auto h1_linear = v.rows[3];
  const auto report = search_all_pairs(table, structure_sheaf(table, canonical_character(s, table)), h1_linear);
  if (!report.theorem_holds || !report.trivial_never_admissible || !report.euler_consistent)
    exit_code = kExitVerificationFailed;

  Document doc;
  doc.kind = "search";
  doc.fields.emplace_back("structure", sname);
  doc.fields.emplace_back("linear character in H^1(D, M)", v.row_name(h1_linear));
  doc.fields.emplace_back("pairs", static_cast<std::int64_t>(report.pairs.size()));
  doc.fields.emplace_back("theorem holds", report.theorem_holds);
  doc.fields.emplace_back("chi_1 never admissible", report.trivial_never_admissible);
  doc.fields.emplace_back("euler consistent", report.euler_consistent);
  add_order_note(ctx, doc);

  // Pairs in display order.
  std::vector<const PairResult*> pairs;
  for (const auto& p : report.pairs) pairs.push_back(&p);
  std::sort(pairs.begin(), pairs.end(), [&](const PairResult* x, const PairResult* y) {
    return std::pair(v.row_position(x->a), v.row_position(x->b)) < std::pair(v.row_position(y->a), v.row_position(y->b));
  });
  DocTable t;
  t.name = "pairs";
  t.columns = {"A", "B", "admissible", "euler zero for all twists"};
  for (const auto* p : pairs)
    t.rows.push_back({v.row_name(p->a), v.row_name(p->b), chi_list(v, p->admissible), p->euler_zero_for_all_twists});
  doc.tables.push_back(std::move(t));

  if (req.details) {
    DocTable d;
    d.name = "twists";
    d.columns = {"A", "B", "chi", "h0", "h1", "h2", "euler", "admissible"};
    for (const auto* p : pairs) {
      auto twists = p->twists;
      std::sort(twists.begin(), twists.end(), [&](const TwistDiagnostics& x, const TwistDiagnostics& y) {
        return v.row_position(x.chi) < v.row_position(y.chi);
      });
      for (const auto& tw : twists)
        d.rows.push_back({v.row_name(p->a), v.row_name(p->b), v.row_name(tw.chi), tw.dims.h0, tw.dims.h1,
                          tw.dims.h2, tw.euler, tw.admissible});
    }
    doc.tables.push_back(std::move(d));
  }
  return doc;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"info",          "classes",        "chartable", "fixed-points",
                                                 "canonical",     "quotient-genus", "fiber-orbits", "sigma",
                                                 "disjoint",      "search",         "verify-paper"};
  return names;
}

CommandResult run_command(const CommandRequest& req) {
  CommandResult result;
  try {
    const auto& names = command_names();
    if (std::find(names.begin(), names.end(), req.command) == names.end())
      throw UsageError("unknown command '" + req.command + "'");
    if (!req.positional.empty() && req.command != "classes")
      throw UsageError(req.command + " takes no positional arguments");
    if (req.positional.size() > 1) throw UsageError("classes takes at most one group name");

    if (req.command == "verify-paper") {
      auto fixtures = PaperFixtures::builtin();
      if (req.input) fixtures.declarations = read_file(*req.input);
      if (req.reference) fixtures.character_table = read_file(*req.reference);
      const auto report = verify_paper(fixtures);
      result.output = render(report.to_document(), req.format);
      result.exit_code = report.passed() ? kExitOk : kExitVerificationFailed;
      return result;
    }

    Context ctx(req);
    Document doc;
    int exit_code = kExitOk;
    if (req.command == "info")
      doc = cmd_info(ctx);
    else if (req.command == "classes")
      doc = cmd_classes(ctx);
    else if (req.command == "chartable")
      doc = cmd_chartable(ctx);
    else if (req.command == "fixed-points")
      doc = cmd_fixed_points(ctx, req);
    else if (req.command == "canonical")
      doc = cmd_canonical(ctx, req);
    else if (req.command == "quotient-genus")
      doc = cmd_quotient_genus(ctx, req);
    else if (req.command == "fiber-orbits")
      doc = cmd_fiber_orbits(ctx, req);
    else if (req.command == "sigma")
      doc = cmd_sigma(ctx, req);
    else if (req.command == "disjoint")
      doc = cmd_disjoint(ctx, req, exit_code);
    else
      doc = cmd_search(ctx, req, exit_code);
    result.output = render(doc, req.format);
    result.exit_code = exit_code;
  } catch (const std::exception& e) {
    result.output.clear();
    result.error = std::string("qslab: ") + e.what() + "\n";
    result.exit_code = kExitUsage;
  }
  return result;
}

}  // namespace qslab
