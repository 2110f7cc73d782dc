#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sympow/configs.hpp"

namespace sympow::cli {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int {
  ok = 0,
  usage_error = 1,
  disagreement = 2,
  characteristic_refused = 3,
  hypothesis_failed = 4,
};

/// An ideal read from a builtin name or from a file.
struct Target {
  std::string descriptor;
  FieldHandle field;
  Ideal ideal;
  /// Present for builtins only.
  std::optional<PointConfiguration> config;
};

/// File format: a `field: <spec>` line, then one generator per line;
/// `#` starts a comment. `field_override` replaces a missing header and
/// must agree with a present one.
Target read_ideal_file(const std::string& path, const std::optional<std::string>& field_override);
Target load_target(const std::string& name, const std::optional<std::string>& field);

/// Runs one command line; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sympow::cli
