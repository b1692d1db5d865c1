#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "io.hpp"

namespace tsurf::app {

enum ExitCode { kOk = 0, kConfigError = 2, kLimitExceeded = 3, kInvariantViolation = 4 };

struct Limits {
  int maxVertices = 100000;
  int maxWordLength = 64;
  int startBound = 4;
  int boundStabilizationMargin = 8;
  int maxBound = 40;
};

// One job, as read from a JSON config file and command-line flags.
//   command   validate | shear | standard | flip | graph | check-connected | algebra | enumerate | selftest
//   surface   {"genus": g, "boundary": [..], "punctures": p}
//   R         list of arc literals, or "base" for the arcs of the base triangulation
//   U         list of arc literals (flip; defaults to R)
//   arc       arc literal (shear, standard) or, for flip, an arc of U or its index
//   laminate  "e" | "eop" (shear)
//   mode      "tiling" | "skew-tiling" (algebra)
struct JobConfig {
  std::string command;
  io::json surface;
  io::json R;
  io::json U;
  io::json arc;
  std::string laminate = "e";
  std::string mode = "skew-tiling";
  Limits limits;
  std::string format = "json";
  std::string out;
  int threads = 1;
};

bool is_command(const std::string& c);

// Throws io::ConfigError on missing or malformed fields.
JobConfig parse_config(const io::json& j);
void check_config(const JobConfig& c);

// Runs the job: the main artifact goes to `out` in the requested format, and
// with an output directory every artifact plus summary.json is written there.
int run(const JobConfig& config, std::ostream& out, std::ostream& err);

}  // namespace tsurf::app
