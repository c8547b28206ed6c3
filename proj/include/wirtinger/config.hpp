#pragma once

namespace wirtinger {

using real = double;

// Library-wide defaults. Every operation that uses one of these accepts an override.

/// |x| below this is treated as a pole by recip/div.
inline constexpr real kDefaultPoleFloor = 1e-300;

/// Central-difference step for the finite-difference oracles.
inline constexpr real kDefaultFdStep = 1e-5;

/// Smallest step the finite-difference oracles accept.
inline constexpr real kMinFdStep = 1e-12;

/// Residual threshold for Cauchy-Riemann classification.
inline constexpr real kDefaultClassifyTol = 1e-4;

/// Largest |k| accepted in an integer power.
inline constexpr int kMaxPowExponent = 64;

} // namespace wirtinger
