#pragma once

#include <cmath>
#include <complex>

namespace pointerlab {

/// Complex branch weight.
using Amplitude = std::complex<double>;

inline bool is_finite(Amplitude a) {
  return std::isfinite(a.real()) && std::isfinite(a.imag());
}

/// Classification of a two-branch pointer state.
enum class Regime {
  Superposition,  ///< packets interfere strongly, no collapse available
  Intermediate,   ///< crossover band, handled by the sweep's mixing model
  Broken          ///< weakly interfering packets, effective mixture
};

inline const char* to_string(Regime r) {
  switch (r) {
    case Regime::Superposition: return "superposition";
    case Regime::Intermediate: return "intermediate";
    case Regime::Broken: return "broken";
  }
  return "unknown";
}

/// Identifies one of the two branches of a TwoBranchState.
enum class BranchIndex { First = 0, Second = 1 };

}  // namespace pointerlab
