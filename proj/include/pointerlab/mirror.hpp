#pragma once

#include <span>
#include <vector>

#include "pointerlab/ssb.hpp"

namespace pointerlab {

/// Photon incident on a movable half-silvered mirror that recoils by
/// momentum_transfer in the reflected branch.
struct MirrorExperimentConfig {
  double photon_momentum = 0.0;    ///< kg m / s, > 0
  double momentum_transfer = 0.0;  ///< kg m / s, >= 0
  Amplitude a{0.7071067811865476, 0.0};  ///< transmitted weight
  Amplitude b{0.7071067811865476, 0.0};  ///< reflected weight
  double mirror_mass = 0.0;        ///< kg, > 0
  double mirror_sigma_x = 0.0;     ///< m, > 0
  double interaction_time = 0.0;   ///< s, >= 0
};

/// Throws InvalidStateError on out-of-range quantities or |a|^2 + |b|^2 != 1
/// within 1e-9.
void validate(const MirrorExperimentConfig& cfg);

/// Width of a minimum-uncertainty packet whose momentum spread equals the
/// thermal momentum sqrt(m kB T): sigma = hbar / (2 sqrt(m kB T)).
double thermal_sigma(double mass, double temperature);

/// Instantaneous momentum kick at t = 0 followed by free evolution to the
/// interaction time: branch 1 keeps the mirror at rest, branch 2 carries the
/// recoiling mirror packet.
TwoBranchState evolve_interaction(const MirrorExperimentConfig& cfg);

/// Effective photon mixture diag(|a|^2, |b|^2) after a completed measurement.
/// Throws RegimeError when the mirror packets still interfere strongly.
ReducedDensityMatrix2 photon_mixture(const TwoBranchState& state, double k = 1.0);

struct MirrorScanPoint {
  double momentum_transfer;  ///< kg m / s
  double overlap_magnitude;
  Regime regime;
  double visibility;
};

/// Classification across a grid of exchanged momenta. The overlap magnitude
/// decreases monotonically along an increasing grid.
std::vector<MirrorScanPoint> regime_scan(const MirrorExperimentConfig& cfg,
                                         std::span<const double> dp_grid,
                                         double k = 1.0);

}  // namespace pointerlab
