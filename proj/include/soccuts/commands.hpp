#pragma once

#include <cstdint>
#include <string>

#include "soccuts/io.hpp"

namespace soccuts {

struct CommandOptions {
  Box box;
  long samples = 10000;
  std::uint64_t seed = 1;
  // check-function: test monotonicity over the non-negative orthant too.
  bool orthant = false;
};

struct CommandResult {
  Json report;
  int exit_code = 0;
};

CommandResult CmdCheckFunction(const Vec& gamma, int j, const CommandOptions& options);
CommandResult CmdCuts(const Instance& instance, const CommandOptions& options);
CommandResult CmdCertify(const Instance& instance, const CommandOptions& options);
CommandResult CmdFace(const Instance& instance, const CommandOptions& options);
CommandResult CmdHull(const Instance& instance, const CommandOptions& options);

// Plain-text rendering of any command report.
std::string RenderText(const Json& report);

}  // namespace soccuts
