#pragma once

#include <cmath>
#include <numbers>

namespace wnear {

/// Phase-space dimension parameter d. Every estimate below carries powers of
/// (2*pi)^d or (2*pi)^(d/2); the library is built for d = 1 only.
inline constexpr int kDim = 1;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// (2*pi)^d
inline const double kTwoPiPowD = std::pow(kTwoPi, kDim);
/// (2*pi)^(d/2)
inline const double kTwoPiPowHalfD = std::pow(kTwoPi, 0.5 * kDim);

inline const double kSqrtPi = std::sqrt(std::numbers::pi);

}  // namespace wnear
