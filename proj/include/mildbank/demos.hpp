#pragma once

#include <string>
#include <vector>

#include "mildbank/report.hpp"

namespace mildbank {

// Demos write CSV series plus a JSON summary into the output directory and
// return the written paths. Names: shannon, dirac_approx, chirp,
// kernel_identity. Deterministic for a fixed config.
std::vector<std::string> demo_names();
std::vector<std::string> run_demo(const std::string& name,
                                  const RunConfig& cfg);

}  // namespace mildbank
