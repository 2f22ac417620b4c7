#pragma once

#include <stdexcept>
#include <string>

namespace mildbank {

// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct NonCommensurateSpacing : Error { using Error::Error; };
struct NonCommensurateShift : Error { using Error::Error; };
struct BadCount : Error { using Error::Error; };
struct UnknownGenerator : Error { using Error::Error; };
struct BadParams : Error { using Error::Error; };
struct GridMismatch : Error { using Error::Error; };
struct SingularMatrix : Error { using Error::Error; };
struct NotAPartition : Error { using Error::Error; };
struct NegativeWindow : Error { using Error::Error; };
struct BadDelta : Error { using Error::Error; };
struct BadAxis : Error { using Error::Error; };
struct BadGrid : Error { using Error::Error; };
struct TailTooFat : Error { using Error::Error; };
struct BadKind : Error { using Error::Error; };
struct EmptyBattery : Error { using Error::Error; };
struct NoTransitionRoom : Error { using Error::Error; };
struct NyquistViolation : Error {
  NyquistViolation(const std::string& msg, double mass)
      : Error(msg), out_of_band_mass(mass) {}
  double out_of_band_mass;
};
struct PathDisagreement : Error {
  PathDisagreement(const std::string& msg, double res)
      : Error(msg), residual(res) {}
  double residual;
};
struct UnknownSuite : Error { using Error::Error; };
struct UnknownDemo : Error { using Error::Error; };

}  // namespace mildbank
