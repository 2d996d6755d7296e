#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wb/report.hpp"
#include "wb/workspace.hpp"

namespace wb {

struct CommandOptions {
  std::vector<std::string> files;
  LoadOptions load;
  /// validate: one structure; suite: one suite or "all".
  std::string name;
  /// certify: a monad reference instead of every monad in the workspace; enumerate algebras: the monad.
  std::string monad;
  std::string theorem, input, as;
  std::string what;
  int bound = 3;
  bool list = false;
};

struct CommandResult {
  Report report;
  /// The workspace after translate, serialized.
  std::optional<Json> workspace;
  int exit_code() const { return report.pass() ? 0 : 1; }
};

const std::vector<std::string>& command_names();
const std::vector<std::string>& theorem_names();
const std::vector<std::string>& enumerable_names();

/// Throws InputError for unknown commands, structures, theorems, or a bound beyond the supported range.
CommandResult run_command(const std::string& command, const CommandOptions& opt);

}  // namespace wb
