#pragma once

#include "rieszlab/grid.hpp"

#include <cstdint>
#include <variant>

namespace rieszlab {

/// Indicator of a ball, scaled to the given height.  The ball must fit inside
/// the domain box.
struct BallIndicator {
  Point center{0.5, 0.5, 0.5};
  double radius = 0.25;
  double height = 1.0;
};

/// |x - center|^{-exponent}, truncated at a value cap and (optionally) cut off
/// outside |x - center| < outer_radius.  outer_radius <= 0 means no cutoff.
struct RadialPower {
  Point center{0.5, 0.5, 0.5};
  double exponent = 1.0;
  double cap = 1e3;
  double outer_radius = 0.0;
};

/// -log|x - center| clamped to [0, cap].
struct LogKernel {
  Point center{0.5, 0.5, 0.5};
  double cap = 1e3;
};

/// Sum of Gaussian bumps with seeded random centers, widths, and amplitudes.
struct SmoothBumps {
  int count = 5;
  std::uint64_t seed = 0;
};

/// I.i.d. uniform values in [lo, hi] per cell.
struct UniformNoise {
  std::uint64_t seed = 0;
  double lo = 0.0;
  double hi = 1.0;
};

using TestFunctionSpec =
    std::variant<BallIndicator, RadialPower, LogKernel, SmoothBumps, UniformNoise>;

/// Samples the spec at cell centers.  Deterministic: identical spec and domain
/// give bit-identical values.  Throws std::invalid_argument when a center lies
/// outside the box or a ball does not fit inside it.
GridFunction generate(const TestFunctionSpec& spec, const Domain& domain);

}  // namespace rieszlab
