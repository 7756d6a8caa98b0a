#pragma once

// Command dispatch behind the qslab executable. Exit codes: 0 success,
// 1 a requested verification failed, 2 usage or input error.

#include <optional>
#include <string>
#include <vector>

#include "qslab/report.hpp"

namespace qslab {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

struct CommandRequest {
  std::string command;
  std::vector<std::string> positional;
  std::optional<std::string> input;      // .alg file; built-in G(32,27) when absent
  std::optional<std::string> reference;  // chartable fixture; built-in when absent
  std::vector<std::string> structures;
  std::optional<std::string> subgroup;   // declared name or a word list
  std::optional<std::size_t> branch;
  std::optional<std::string> cache_dir;
  Format format = Format::Text;
  bool details = false;
};

struct CommandResult {
  std::string output;
  std::string error;
  int exit_code = kExitOk;
};

const std::vector<std::string>& command_names();

CommandResult run_command(const CommandRequest& request);

/// Full command line handling (CLI11), writing to the given streams.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qslab
