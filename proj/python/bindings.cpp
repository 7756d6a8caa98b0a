#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <sstream>

#include "qslab/characters.hpp"
#include "qslab/commands.hpp"
#include "qslab/errors.hpp"
#include "qslab/fixtures.hpp"
#include "qslab/lang.hpp"
#include "qslab/ramification.hpp"
#include "qslab/verify.hpp"

namespace py = pybind11;
using namespace qslab;

namespace {

std::vector<std::string> format_all(const FiniteGroup& g, const std::vector<std::size_t>& idx) {
  std::vector<std::string> out;
  for (auto i : idx) out.push_back(g.format(i));
  return out;
}

class PySession {
 public:
  explicit PySession(std::optional<std::string> text)
      : session_(parse_input(text ? *text : std::string(builtin::g32_27_declarations()))) {}

  std::vector<std::string> groups() const { return names(session_.model().groups); }
  std::vector<std::string> structures() const { return names(session_.model().structures); }
  std::vector<std::string> subgroups() const { return names(session_.model().subgroups); }

  std::string default_group() const { return session_.default_group(); }

  std::size_t order(const std::string& group) const { return session_.group(group)->order(); }

  std::string normal_form(const std::string& group, const std::string& word) const {
    const auto& g = *session_.group(group);
    return g.format(g.evaluate(word));
  }

  std::size_t element_order(const std::string& group, const std::string& word) const {
    const auto& g = *session_.group(group);
    return g.element_order(g.evaluate(word));
  }

  std::vector<std::vector<std::string>> classes(const std::string& group) const {
    const auto& g = *session_.group(group);
    std::vector<std::vector<std::string>> out;
    for (const auto& k : g.classes()) out.push_back(format_all(g, k.members));
    return out;
  }

  std::vector<std::vector<std::string>> normal_subgroups(const std::string& group) const {
    const auto& g = *session_.group(group);
    std::vector<std::vector<std::string>> out;
    for (const auto& h : g.enumerate_normal_subgroups()) {
      std::vector<std::string> gens;
      for (const auto& x : h.generators()) gens.push_back(g.format(x));
      out.push_back(std::move(gens));
    }
    return out;
  }

  /// Rows of the character table, values as exact strings, canonical class order.
  std::vector<std::vector<std::string>> character_table(const std::string& group) {
    const auto& t = table(group);
    std::vector<std::vector<std::string>> out;
    for (const auto& row : t.rows()) {
      std::vector<std::string> vals;
      for (const auto& v : row.values()) vals.push_back(v.to_string());
      out.push_back(std::move(vals));
    }
    return out;
  }

  std::int64_t genus(const std::string& structure) const { return qslab::genus(session_.structure(structure)); }

  std::vector<std::size_t> type(const std::string& structure) const {
    const auto t = session_.structure(structure);
    return {t.type().begin(), t.type().end()};
  }

  /// Per class in canonical order; None for the identity class.
  std::vector<std::optional<std::size_t>> fixed_points(const std::string& structure) const {
    return fixed_point_table(session_.structure(structure));
  }

  std::vector<std::int64_t> canonical_character(const std::string& structure) {
    const auto t = session_.structure(structure);
    const auto k = qslab::canonical_character(t, table(session_.model().find_structure(structure)->group));
    return *k.integer_values();
  }

  bool disjoint(const std::string& a, const std::string& b) const {
    return is_disjoint(session_.structure(a), session_.structure(b));
  }

  std::int64_t quotient_genus(const std::string& structure, const std::string& subgroup) const {
    return qslab::quotient_genus(session_.structure(structure), resolve(structure, subgroup));
  }

 private:
  template <class Decls>
  static std::vector<std::string> names(const Decls& decls) {
    std::vector<std::string> out;
    for (const auto& d : decls) out.push_back(d.name);
    return out;
  }

  Subgroup resolve(const std::string& structure, const std::string& subgroup) const {
    if (session_.model().find_subgroup(subgroup)) return session_.subgroup(subgroup);
    const auto& group = session_.model().find_structure(structure)->group;
    return session_.subgroup_from_words(group, parse_word_list(subgroup));
  }

  const CharacterTable& table(const std::string& group) {
    auto it = tables_.find(group);
    if (it == tables_.end()) it = tables_.emplace(group, compute_character_table(session_.group(group))).first;
    return it->second;
  }

  Session session_;
  std::map<std::string, CharacterTable> tables_;
};

py::tuple run(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"qslab"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return py::make_tuple(code, out.str(), err.str());
}

py::list verify() {
  const auto report = verify_paper(PaperFixtures::builtin());
  py::list out;
  for (const auto& c : report.checks) {
    py::dict d;
    d["name"] = c.name;
    d["anchor"] = c.anchor;
    d["expected"] = c.expected;
    d["computed"] = c.computed;
    d["pass"] = c.pass;
    out.append(std::move(d));
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_qslab, m) {
  m.doc() = "Finite group, character and ramification computations";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<InvalidStructure>(m, "InvalidStructure", PyExc_ValueError);
  py::register_exception<MalformedSpec>(m, "MalformedSpec", PyExc_ValueError);

  py::class_<PySession>(m, "Session")
      .def(py::init<std::optional<std::string>>(), py::arg("text") = py::none())
      .def_property_readonly("groups", &PySession::groups)
      .def_property_readonly("structures", &PySession::structures)
      .def_property_readonly("subgroups", &PySession::subgroups)
      .def_property_readonly("default_group", &PySession::default_group)
      .def("order", &PySession::order, py::arg("group"))
      .def("normal_form", &PySession::normal_form, py::arg("group"), py::arg("word"))
      .def("element_order", &PySession::element_order, py::arg("group"), py::arg("word"))
      .def("classes", &PySession::classes, py::arg("group"))
      .def("normal_subgroups", &PySession::normal_subgroups, py::arg("group"))
      .def("character_table", &PySession::character_table, py::arg("group"))
      .def("genus", &PySession::genus, py::arg("structure"))
      .def("type", &PySession::type, py::arg("structure"))
      .def("fixed_points", &PySession::fixed_points, py::arg("structure"))
      .def("canonical_character", &PySession::canonical_character, py::arg("structure"))
      .def("disjoint", &PySession::disjoint, py::arg("a"), py::arg("b"))
      .def("quotient_genus", &PySession::quotient_genus, py::arg("structure"), py::arg("subgroup"));

  m.def("run", &run, py::arg("args"), "Runs the command line tool in-process; returns (exit code, stdout, stderr).");
  m.def("verify_paper", &verify, "Every published check on the built-in data, as a list of dicts.");
}
