#pragma once

#include <string>
#include <vector>

#include "mildbank/report.hpp"

namespace mildbank {

// Suites: wiener, measures, fourier, poisson, feichtinger, mild, sampling,
// systems. "all" concatenates every suite in name order.
std::vector<std::string> suite_names();

Report run_suite(const std::string& suite, const RunConfig& cfg);

// UnknownSuite for anything outside suite_names() + "all".
Report run_verify(const std::string& suite_or_all, const RunConfig& cfg);

}  // namespace mildbank
