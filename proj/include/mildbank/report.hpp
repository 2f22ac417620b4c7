#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mildbank/grid.hpp"

namespace mildbank {

// Run configuration shared by the CLI, the verification suites and the
// demos. The grid parameters describe the standard 1D grid; some checks run
// on derived grids (documented per suite).
struct RunConfig {
  double h = 1.0 / 16;
  int n = 1024;
  std::uint64_t seed = 20260809;
  double tol_scale = 1.0;  // multiplies every check tolerance
  std::string out_path;    // file (reports) or directory (demos)
  std::string format = "json";

  Grid grid(int d = 1) const { return make_grid(h, n, d); }
};

struct CheckResult {
  std::string name;    // suite/check identifier
  std::string anchor;  // name of the identity or bound being verified
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct Report {
  std::string suite;
  std::vector<CheckResult> checks;
  // environment block
  double h = 0.0;
  int n = 0;
  std::uint64_t seed = 0;
  std::string version;
  // isolated nondeterministic block
  std::string timestamp;
  double wall_ms = 0.0;

  bool pass() const;
  double max_residual() const;
};

// Stable-key-order JSON. All nondeterministic fields live in a single
// top-level "timing" object; with_timing=false omits it, which is the byte
// stream the determinism criterion compares.
std::string report_json(const Report& report, bool with_timing = true);

// RFC-4180 CSV of the check records, CRLF line endings, 17 significant
// digits.
std::string report_csv(const Report& report);

std::string format_sig17(double v);
std::string csv_line(const std::vector<std::string>& fields);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace mildbank
