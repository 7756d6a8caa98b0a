#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif
#include <ostream>

#include "qslab/commands.hpp"

namespace qslab {

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Group and character computations for G-covers of P^1 and their quotients", "qslab"};
  CommandRequest req;
  std::string format = "text";
  std::string command;

  std::string names;
  for (const auto& n : command_names()) names += (names.empty() ? "" : ", ") + n;
  app.add_option("command", command, "One of: " + names)->required();
  app.add_option("args", req.positional, "Command arguments (classes: group name)");
  app.add_option("--input", req.input, "Declaration file (.alg); defaults to the built-in G(32,27)");
  app.add_option("--reference", req.reference, "Reference character table fixture");
  app.add_option("--structure", req.structures, "Structure name (repeat for disjoint)");
  app.add_option("--subgroup", req.subgroup, "Declared subgroup name or generator words, e.g. \"g2*g5, g4\"");
  app.add_option("--branch", req.branch, "Branch point index, 1-based");
  app.add_option("--format", format, "text, json or md")->check(CLI::IsMember({"text", "json", "md", "markdown"}));
  app.add_option("--cache", req.cache_dir, "Character table cache directory (default: $QSLAB_CACHE)");
  app.add_flag("--details", req.details, "search: include every (A, B, chi) triple");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "qslab: " << e.what() << "\n" << "run 'qslab --help' for usage\n";
    return kExitUsage;
  }
  req.command = command;
  req.format = parse_format(format);
  const auto result = run_command(req);
  out << result.output;
  err << result.error;
  return result.exit_code;
}

}  // namespace qslab
