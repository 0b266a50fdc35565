#ifndef CYCHOM_COMMANDS_HPP
#define CYCHOM_COMMANDS_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "cychom/io.hpp"

namespace cychom {

struct SessionConfig {
  std::optional<std::uint64_t> prime;  // homology over F_p when set
  std::size_t max_degree = 4;
  std::uint64_t seed = 0;
};

/// {"field": "Q" | {"Fp": p}, "max_degree": D, "seed": s}; all keys optional.
SessionConfig parse_config(const Json& j);

struct CommandResult {
  Json report;
  bool all_pass = true;
};

/// Runs one named command. args carries "input" (problem file text) and the
/// command's options. Throws InputError on malformed input.
CommandResult run_command(const std::string& command, const Json& args, const SessionConfig& cfg);

/// Text summary of a report.
std::string summarize(const Json& report);

}  // namespace cychom

#endif
