#include "qslab/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "qslab/errors.hpp"
#include "qslab/lang.hpp"
#include "qslab/phantom.hpp"
#include "qslab/ramification.hpp"

namespace qslab {

// ----------------------------------------------------------------- TableView

TableView TableView::canonical(const CharacterTable& table) {
  TableView v;
  const auto& g = table.group();
  for (std::size_t c = 0; c < g.class_count(); ++c) {
    v.columns.push_back(c);
    v.column_labels.push_back(g.format(g.classes()[c].representative));
  }
  for (std::size_t r = 0; r < table.size(); ++r) v.rows.push_back(r);
  return v;
}

TableView TableView::aligned(const CharacterTable& table, const ReferenceTable& ref) {
  const auto a = align_to_reference(table, ref);
  TableView v;
  v.columns = a.columns;
  v.rows = a.rows;
  for (const auto& col : ref.columns) v.column_labels.push_back(format_word(col.label));
  v.published = true;
  return v;
}

std::size_t TableView::column_position(std::size_t cls) const {
  return static_cast<std::size_t>(std::find(columns.begin(), columns.end(), cls) - columns.begin());
}

std::size_t TableView::row_position(std::size_t row) const {
  return static_cast<std::size_t>(std::find(rows.begin(), rows.end(), row) - rows.begin());
}

std::string TableView::row_name(std::size_t row) const {
  return "chi_" + std::to_string(row_position(row) + 1);
}

// -------------------------------------------------------------- verification

namespace {

constexpr std::int64_t kFixT1[] = {8, 0, 0, 0, 0, 8, 0, 8, 0, 4, 0, 0, 4};
constexpr std::int64_t kFixT2[] = {0, 8, 8, 8, 8, 0, 0, 0, 0, 0, 4, 4, 0};
constexpr std::int64_t kCanonT1[] = {5, -3, 1, 1, 1, 1, -3, 1, -3, 1, -1, 1, 1, -1};
constexpr std::int64_t kCanonT2[] = {9, 1, -3, -3, -3, -3, 1, 1, 1, 1, 1, -1, -1, 1};

template <class Range>
std::string join_ints(const Range& r, const char* sep = ",") {
  std::string out;
  bool first = true;
  for (const auto& v : r) {
    out += (first ? "" : sep) + std::to_string(v);
    first = false;
  }
  return out;
}

std::string sum_of_chis(const std::vector<std::int64_t>& mult) {
  std::string out;
  for (std::size_t i = 0; i < mult.size(); ++i) {
    if (mult[i] == 0) continue;
    if (!out.empty()) out += " + ";
    if (mult[i] != 1) out += std::to_string(mult[i]) + "*";
    out += "chi_" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

class Verifier {
 public:
  explicit Verifier(const PaperFixtures& f) : fixtures_(f) {}

  VerificationReport run() {
    setup();
    group_checks();
    character_checks();
    structure_checks();
    fixed_point_checks();
    canonical_checks();
    quotient_checks();
    search_checks();
    return std::move(report_);
  }

 private:
  void check(std::string name, std::string anchor, std::string expected,
             const std::function<std::string()>& compute) {
    Check c{std::move(name), std::move(anchor), std::move(expected), "", false};
    try {
      c.computed = compute();
      c.pass = c.computed == c.expected;
    } catch (const std::exception& e) {
      c.computed = std::string("error: ") + e.what();
    }
    report_.checks.push_back(std::move(c));
  }

  template <class T>
  static const T& need(const std::optional<T>& v, const char* what) {
    if (!v) throw std::runtime_error(std::string(what) + " unavailable");
    return *v;
  }

  void setup() {
    try {
      session_.emplace(parse_input(fixtures_.declarations));
      group_ = session_->group("g32_27");
    } catch (const std::exception& e) {
      setup_error_ = e.what();
    }
    if (!group_) return;
    try {
      t1_.emplace(session_->structure("T1"));
    } catch (const std::exception&) {
    }
    try {
      t2_.emplace(session_->structure("T2"));
    } catch (const std::exception&) {
    }
  }

  const FiniteGroup& g() const {
    if (!group_) throw std::runtime_error("group g32_27 unavailable: " + setup_error_);
    return *group_;
  }

  void group_checks() {
    check("group order", "G(32,27) has order 32", "32", [&] { return std::to_string(g().order()); });
    check("relation g1^-1*g2*g1 = g2*g4", "g1^-1 g2 g1 = g2 g4 holds in G", "g2*g4", [&] {
      const auto g1 = g().generator("g1");
      return g().format(g().multiply(g().multiply(g().inverse(g1), g().generator("g2")), g1));
    });
    check("relation g1^-1*g3*g1 = g3*g5", "g1^-1 g3 g1 = g3 g5 holds in G", "g3*g5", [&] {
      const auto g1 = g().generator("g1");
      return g().format(g().multiply(g().multiply(g().inverse(g1), g().generator("g3")), g1));
    });
    check("conjugacy classes", "published list of conjugacy classes",
          "14 classes; sizes 1,1,1,1,2,2,2,2,2,2,4,4,4,4; 14 of 14 published classes match", [&] {
            const auto ref = parse_reference_table(fixtures_.character_table);
            std::vector<std::size_t> sizes;
            for (const auto& c : g().classes()) sizes.push_back(c.size());
            std::size_t matched = 0;
            for (const auto& col : ref.columns) {
              std::set<std::size_t> listed;
              for (const auto& w : col.members) listed.insert(g().index_of(g().evaluate(w)));
              if (listed.empty()) continue;
              const auto& cls = g().classes()[g().class_of(*listed.begin())].members;
              if (listed == std::set<std::size_t>(cls.begin(), cls.end())) ++matched;
            }
            return std::to_string(g().class_count()) + " classes; sizes " + join_ints(sizes) + "; " +
                   std::to_string(matched) + " of " + std::to_string(ref.columns.size()) +
                   " published classes match";
          });
    check("normal subgroups", "published list of normal subgroups",
          "26 normal subgroups; 26 published, all normal; sets equal", [&] {
            const auto list = parse_subgroup_list(fixtures_.normal_subgroups);
            std::set<std::string> computed;
            for (const auto& h : g().enumerate_normal_subgroups()) computed.insert(h.elements().to_string());
            std::set<std::string> published;
            bool all_normal = true;
            for (const auto& gens : list.subgroups) {
              const auto h = g().subgroup_from_words(gens);
              all_normal = all_normal && g().is_normal(h);
              published.insert(h.elements().to_string());
            }
            return std::to_string(computed.size()) + " normal subgroups; " + std::to_string(published.size()) +
                   " published, " + (all_normal ? "all normal" : "not all normal") + "; sets " +
                   (computed == published ? "equal" : "differ");
          });
  }

  void character_checks() {
    try {
      if (group_) table_.emplace(compute_character_table(group_));
    } catch (const std::exception& e) {
      setup_error_ = e.what();
    }
    check("character table", "published character table", "aligned; 196 of 196 entries equal", [&] {
      const auto& t = need(table_, "character table");
      const auto ref = parse_reference_table(fixtures_.character_table);
      view_.emplace(TableView::aligned(t, ref));
      std::size_t equal = 0;
      for (std::size_t r = 0; r < ref.values.size(); ++r)
        for (std::size_t c = 0; c < ref.columns.size(); ++c)
          if (t[view_->rows[r]][view_->columns[c]] == Cyclotomic(ref.values[r][c])) ++equal;
      return "aligned; " + std::to_string(equal) + " of " + std::to_string(ref.values.size() * ref.columns.size()) +
             " entries equal";
    });
    check("orthogonality", "published character table satisfies both orthogonality relations", "both relations hold", [&] {
      const auto err = need(table_, "character table").check_orthogonality();
      return err ? *err : std::string("both relations hold");
    });
    check("character degrees", "eight linear and six 2-dimensional irreducibles", "1^8 2^6", [&] {
      std::map<std::int64_t, int> counts;
      for (auto d : need(table_, "character table").degrees()) ++counts[d];
      std::string out;
      for (const auto& [d, n] : counts) out += (out.empty() ? "" : " ") + std::to_string(d) + "^" + std::to_string(n);
      return out;
    });
    check("real characters", "every irreducible character is real", "all real", [&] {
      return std::string(need(table_, "character table").is_real() ? "all real" : "non-real character present");
    });
  }

  void structure_checks() {
    auto validate = [&](const char* name, const char* expected_type) {
      check(std::string("structure ") + name, std::string(name) + " of type " + expected_type,
            std::string("valid, type ") + expected_type, [&, name] {
              const auto* decl = session_ ? session_->model().find_structure(name) : nullptr;
              if (!decl) throw std::runtime_error(std::string("structure ") + name + " not declared");
              std::vector<GroupElement> entries;
              for (const auto& w : decl->words) entries.push_back(g().evaluate(w));
              const auto v = validate_spherical(session_->group(decl->group), entries);
              if (!v.ok()) {
                std::string out = "invalid:";
                for (const auto& d : v.diagnostics) out += " " + d;
                return out;
              }
              return "valid, type [" + join_ints(v.system->type()) + "]";
            });
    };
    validate("T1", "[2,2,2,4]");
    validate("T2", "[2,2,4,4]");
    check("disjointness", "(T1, T2) is an unmixed ramification structure", "stabilizer sets meet only in 1", [&] {
      return std::string(is_disjoint(need(t1_, "T1"), need(t2_, "T2")) ? "stabilizer sets meet only in 1"
                                                                        : "stabilizer sets share a non-identity element");
    });
    check("fixed point cross-check", "diagonal action on C x D is free",
          "no element other than 1 fixes points on both curves", [&] {
            const auto& a = need(t1_, "T1");
            const auto& b = need(t2_, "T2");
            for (std::size_t x = 1; x < g().order(); ++x)
              if (fixed_point_count(a, x) * fixed_point_count(b, x) != 0)
                return g().format(x) + " fixes points on both curves";
            return std::string("no element other than 1 fixes points on both curves");
          });
  }

  std::vector<std::size_t> published_columns() const { return need(view_, "published class order").columns; }

  void fixed_point_checks() {
    auto row = [&](const char* name, const std::optional<SphericalSystem>& t) {
      std::vector<std::int64_t> out;
      const auto cols = published_columns();
      for (std::size_t c = 1; c < cols.size(); ++c)
        out.push_back(static_cast<std::int64_t>(fixed_point_count(need(t, name), g().classes()[cols[c]].representative)));
      return join_ints(out);
    };
    check("fixed points T1", "published fixed point counts on C", join_ints(kFixT1), [&] { return row("T1", t1_); });
    check("fixed points T2", "published fixed point counts on D", join_ints(kFixT2), [&] { return row("T2", t2_); });
    check("fixed point methods agree", "published fixed point counts, by both counting directions", "agree on 62 of 62 pairs", [&] {
      std::size_t agree = 0;
      for (const auto* t : {&need(t1_, "T1"), &need(t2_, "T2")})
        for (std::size_t x = 1; x < g().order(); ++x)
          if (fixed_point_count(*t, x) == fixed_point_count_by_conjugation(*t, x)) ++agree;
      return "agree on " + std::to_string(agree) + " of " + std::to_string(2 * (g().order() - 1)) + " pairs";
    });
    check("ramification degree of C -> C/<g5>", "ramification divisor of C -> C/<g5> has degree 8", "8", [&] {
      return std::to_string(fixed_point_count(need(t1_, "T1"), g().generator("g5")));
    });
  }

  std::string published_values(const ClassFunction& f) const {
    std::vector<std::int64_t> out;
    for (auto c : published_columns()) out.push_back(f[c].to_integer());
    return join_ints(out);
  }

  std::string published_decomposition(const ClassFunction& f) const {
    const auto& view = need(view_, "published row order");
    const auto d = decompose(f, need(table_, "character table"));
    std::vector<std::int64_t> m;
    for (auto r : view.rows) m.push_back(d.multiplicities[r]);
    return sum_of_chis(m);
  }

  void canonical_checks() {
    check("genus of C", "C has genus 5", "5", [&] {
      const std::size_t type[] = {2, 2, 2, 4};
      return std::to_string(genus_from_type(g().order(), type));
    });
    check("genus of D", "D has genus 9", "9", [&] {
      const std::size_t type[] = {2, 2, 4, 4};
      return std::to_string(genus_from_type(g().order(), type));
    });
    check("canonical character T1", "published character of H^0(C, K_C)", join_ints(kCanonT1), [&] {
      kc_.emplace(canonical_character(need(t1_, "T1"), need(table_, "character table")));
      return published_values(*kc_);
    });
    check("canonical character T2", "published character of H^0(D, K_D)", join_ints(kCanonT2), [&] {
      kd_.emplace(canonical_character(need(t2_, "T2"), need(table_, "character table")));
      return published_values(*kd_);
    });
    check("decomposition of chi_KC", "chi_KC = chi_7 + chi_9 + chi_11", "chi_7 + chi_9 + chi_11",
          [&] { return published_decomposition(need(kc_, "chi_KC")); });
    check("decomposition of chi_KD", "chi_KD = chi_4 + chi_10 + chi_12 + chi_13 + chi_14",
          "chi_4 + chi_10 + chi_12 + chi_13 + chi_14", [&] { return published_decomposition(need(kd_, "chi_KD")); });
  }

  Subgroup named(const char* name) const {
    if (!session_) throw std::runtime_error("declarations unavailable");
    return session_->subgroup(name);
  }

  void quotient_checks() {
    auto genus_check = [&](std::string name, std::string anchor, std::string expected, const char* t,
                           const std::optional<SphericalSystem>& sys, std::function<Subgroup()> h) {
      check(std::move(name), std::move(anchor), std::move(expected),
            [&, t, h] { return std::to_string(quotient_genus(need(sys, t), h())); });
    };
    genus_check("genus of C/<g5>", "C/<g5> has genus 1", "1", "T1", t1_,
                [&] { return g().cyclic(g().generator("g5")); });
    genus_check("genus of C/H", "C/H has genus 0 for H = <g2*g5, g4>", "0", "T1", t1_, [&] { return named("H"); });
    genus_check("genus of D/H1", "D/H1 has genus 0", "0", "T2", t2_, [&] { return named("H1"); });
    genus_check("genus of D/H2", "D/H2 has genus 0", "0", "T2", t2_, [&] { return named("H2"); });
    genus_check("genus of D/H4", "D/H4 has genus 1", "1", "T2", t2_, [&] { return named("H4"); });

    auto fiber = [&](const std::optional<SphericalSystem>& sys, const char* t, std::size_t branch, const char* h) {
      const auto s = fiber_orbit_structure(need(sys, t), branch, named(h));
      std::set<std::size_t> stabs;
      for (const auto& o : s.orbits) stabs.insert(o.stabilizer_order);
      if (s.acts_freely) return std::string("free");
      return "stabilizer orders {" + join_ints(stabs) + "}";
    };
    check("H on the order-4 fiber of C", "H acts freely on the fiber of C over the order-4 branch point", "free", [&] { return fiber(t1_, "T1", 4, "H"); });
    check("H1 on fiber 1 of D", "H1 acts freely on the fiber of D over branch point 1", "free", [&] { return fiber(t2_, "T2", 1, "H1"); });
    check("H1 on fiber 2 of D", "H1 acts freely on the fiber of D over branch point 2", "free", [&] { return fiber(t2_, "T2", 2, "H1"); });
    check("H1 on fiber 3 of D", "H1 point stabilizers over branch point 3 of D have order 2", "stabilizer orders {2}",
          [&] { return fiber(t2_, "T2", 3, "H1"); });
    check("H1 on fiber 4 of D", "H1 point stabilizers over branch point 4 of D have order 4", "stabilizer orders {4}",
          [&] { return fiber(t2_, "T2", 4, "H1"); });

    check("quotient genus equals mean of chi_K", "holomorphic differentials of C/H are the H-invariants",
          "holds for 212 of 212 (structure, subgroup) pairs", [&] {
            const auto subs = g().enumerate_subgroups();
            std::size_t ok = 0;
            const std::pair<const std::optional<SphericalSystem>*, const std::optional<ClassFunction>*> pairs[] = {
                {&t1_, &kc_}, {&t2_, &kd_}};
            for (const auto& [sys, chi] : pairs)
              for (const auto& h : subs) {
                Rational sum = 0;
                for (auto x : h.indices()) sum += need(*chi, "canonical character")[g().class_of(x)].to_rational();
                if (sum / static_cast<std::int64_t>(h.order()) == quotient_genus(need(*sys, "structure"), h)) ++ok;
              }
            return "holds for " + std::to_string(ok) + " of " + std::to_string(2 * subs.size()) +
                   " (structure, subgroup) pairs";
          });
  }

  void search_checks() {
    std::optional<SearchReport> search;
    auto run_search = [&]() -> const SearchReport& {
      if (!search) {
        const auto& t = need(table_, "character table");
        const auto& view = need(view_, "published row order");
        search.emplace(search_all_pairs(t, structure_sheaf(t, need(kc_, "chi_KC")), view.rows.at(3)));
      }
      return *search;
    };
    check("search pairs", "all ordered pairs (A, B) of 2-dimensional irreducibles", "36",
          [&] { return std::to_string(run_search().pairs.size()); });
    check("admissible twist exists", "every pair (A, B) admits a linear chi with h0 = h2 = 0", "every pair has one", [&] {
      const auto& r = run_search();
      std::size_t empty = 0;
      for (const auto& p : r.pairs) empty += p.admissible.empty();
      return empty == 0 ? std::string("every pair has one") : std::to_string(empty) + " pairs have none";
    });
    check("trivial twist excluded", "chi_1 is never admissible", "chi_1 in no admissible set", [&] {
      return std::string(run_search().trivial_never_admissible ? "chi_1 in no admissible set"
                                                               : "chi_1 admissible for some pair");
    });
    check("Euler characteristic consistency", "Kuenneth Euler characteristic equals h0 - h1 + h2",
          "equal on 288 of 288 triples", [&] {
            std::size_t equal = 0;
            std::size_t total = 0;
            for (const auto& p : run_search().pairs)
              for (const auto& t : p.twists) {
                equal += t.euler == t.dims.euler();
                ++total;
              }
            return "equal on " + std::to_string(equal) + " of " + std::to_string(total) + " triples";
          });
  }

  const PaperFixtures& fixtures_;
  VerificationReport report_;
  std::string setup_error_ = "declarations did not load";
  std::optional<Session> session_;
  GroupPtr group_;
  std::optional<SphericalSystem> t1_, t2_;
  std::optional<CharacterTable> table_;
  std::optional<TableView> view_;
  std::optional<ClassFunction> kc_, kd_;
};

}  // namespace

VerificationReport verify_paper(const PaperFixtures& fixtures) { return Verifier(fixtures).run(); }

}  // namespace qslab
