#pragma once
// Shared report formatting: floats are rendered as fixed-format strings so that
// serialized reports are byte-stable across platforms.

#include <cstdio>
#include <string>

#include <json.hpp>

namespace qmt {

using Json = nlohmann::ordered_json;

inline std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6e", x);
  return std::string(buf);
}

// Process exit codes shared by the CLI and the acceptance runner.
enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitConfigError = 2,
};

}  // namespace qmt
