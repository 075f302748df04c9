#pragma once

#include "pointerlab/constants.hpp"
#include "pointerlab/types.hpp"

namespace pointerlab {

/// Minimum-uncertainty Gaussian wave packet in one spatial dimension.
///
/// The packet carries the phase convention
///   psi(x) = (2 pi s^2)^(-1/4) exp(-(x - x0)^2 / (4 s^2) + i p0 (x - x0) / hbar)
/// with s = sigma_x the position standard deviation, so the momentum spread
/// is hbar / (2 sigma_x) and is never stored separately. Overlaps and moments
/// below are the closed forms for exactly this convention.
struct GaussianPacket {
  double x_center = 0.0;  ///< m
  double p_center = 0.0;  ///< kg m / s
  double sigma_x = 1.0;   ///< m, position standard deviation, > 0
  double mass = constants::electron_mass;  ///< kg, > 0
  double time = 0.0;      ///< s
};

/// Throws InvalidStateError unless all fields are finite, sigma_x > 0, mass > 0.
void validate(const GaussianPacket& g);

/// Implied momentum spread hbar / (2 sigma_x).
double sigma_p(const GaussianPacket& g, double hbar = constants::hbar);

/// First and second position moments of a normalized two-packet superposition.
struct SuperpositionMoments {
  double mean_x;           ///< m
  double std_x;            ///< m, > 0
  double stability_ratio;  ///< |mean_x| / std_x
};

/// Outcome of the weak-interference test, with both sub-criteria reported.
struct InterferenceCheck {
  bool position_separated;   ///< |x1 - x2| > k sigma
  bool overlap_suppressed;   ///< |<g1|g2>| < exp(-k^2 / 8)
  double overlap_magnitude;
  bool weakly_interfering;   ///< either sub-criterion holds
};

/// Inner product <g1|g2> of two equal-width, equal-mass, equal-time packets.
/// Magnitude exp(-dx^2/(8 s^2) - dp^2 s^2/(2 hbar^2)), phase
/// (x1 - x2)(p1 + p2)/(2 hbar). Throws UnsupportedPacketPair on a mismatched
/// pair.
Amplitude overlap(const GaussianPacket& g1, const GaussianPacket& g2,
                  double hbar = constants::hbar);

/// Exact <x> and sqrt(Var x) of the normalized state c1|g1> + c2|g2>,
/// including the interference cross terms. Throws InvalidStateError when the
/// Gram norm of the superposition is degenerate.
SuperpositionMoments superposition_moments(Amplitude c1, const GaussianPacket& g1,
                                           Amplitude c2, const GaussianPacket& g2,
                                           double hbar = constants::hbar);

InterferenceCheck interference_check(const GaussianPacket& g1, const GaussianPacket& g2,
                                     double k = 1.0, double hbar = constants::hbar);

/// True when the packets are separated enough that their superposition is no
/// longer a wave packet: center distance above k standard deviations, or
/// overlap magnitude below exp(-k^2 / 8). Throws ParameterError for k <= 0.
bool weakly_interfering(const GaussianPacket& g1, const GaussianPacket& g2,
                        double k = 1.0, double hbar = constants::hbar);

/// Wave-packet (classical) approximation test: |x_center| >= dominance_ratio
/// * sigma_x, boundary inclusive.
bool packet_stable(const GaussianPacket& g, double dominance_ratio = 10.0);

/// Free evolution by dt >= 0: the center drifts with p/m and the width
/// spreads as sigma(t) = sigma0 sqrt(1 + (hbar dt / (2 m sigma0^2))^2).
GaussianPacket evolve_free(const GaussianPacket& g, double dt,
                           double hbar = constants::hbar);

}  // namespace pointerlab
