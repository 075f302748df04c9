#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pointerlab/ssb.hpp"

namespace pointerlab {

/// How the intermediate band between detectable superposition and full
/// mixture is mapped to a mixture fraction. Both models are extrapolations
/// beyond the two asymptotic regimes and are labeled as such in the docs.
enum class CrossoverModel { Sharp, Linear };

/// Photon of the given wavelength Compton-scattered on an electron pointer,
/// post-selected at angle_phi by a momentum-preserving angular filter.
/// alpha and beta are the renormalized post-filter branch weights.
struct ComptonConfig {
  double wavelength = 0.0;  ///< m, > 0
  double angle_phi = 0.0;   ///< rad, in [0, pi]
  Amplitude alpha{0.7071067811865476, 0.0};  ///< unscattered weight
  Amplitude beta{0.7071067811865476, 0.0};   ///< scattered weight
  double electron_sigma_x = 1e-10;  ///< m, > 0
  double ratio_threshold = 0.01;    ///< superposition regime ends here
  double epsilon_high = 0.5;        ///< broken regime begins at ratio >= 1 - epsilon_high
  CrossoverModel crossover_model = CrossoverModel::Sharp;
};

void validate(const ComptonConfig& cfg);

/// Kinematic quantities of one scattering configuration.
struct KinematicsRecord {
  double p_in;           ///< kg m / s, incident photon momentum h / lambda
  double delta_lambda;   ///< m, wavelength shift, >= 0
  double lambda_out;     ///< m, wavelength + delta_lambda
  double p_out;          ///< kg m / s, scattered photon momentum
  double recoil_dp;      ///< kg m / s, electron recoil magnitude
  double ratio;          ///< delta_lambda / wavelength
  double uncertainty_product;  ///< J s, delta_lambda * recoil_dp (0 at phi = 0)
};

/// Wavelength shift 2 lambda_ce sin^2(phi / 2); independent of the incident
/// wavelength, which is kept as a parameter for interface uniformity.
/// Throws RangeError for phi outside [0, pi].
double compton_shift(double wavelength, double phi);

/// h / lambda. Throws ParameterError for non-positive wavelength.
double debroglie_momentum(double wavelength);

/// Electron recoil magnitude from the momentum triangle,
/// sqrt(p^2 + p'^2 - 2 p p' cos phi) with p' the shifted photon momentum.
double recoil_momentum(double wavelength, double phi);

/// Relative wavelength change delta_lambda(phi) / lambda.
double wavelength_ratio(double wavelength, double phi);

KinematicsRecord kinematics(double wavelength, double phi);

/// Superposition for ratio <= ratio_threshold, Broken for
/// ratio >= 1 - epsilon_high, Intermediate between; the raw ratio is the
/// criterion value.
RegimeVerdict classify_regime(const ComptonConfig& cfg);

/// Post-filter entangled state: branch 1 keeps the electron at rest, branch 2
/// carries the electron recoiling with recoil_momentum(wavelength, phi).
TwoBranchState build_entangled_state(const ComptonConfig& cfg);

/// Fringe contrast at the recombining detector,
/// V = 2 |alpha beta| |<e 0|e recoil>|.
double detector_visibility(const ComptonConfig& cfg);

/// delta_lambda(phi) * recoil_dp(phi), of order h when the ratio approaches 1.
/// Throws PhysicsError at phi = 0 where the shift vanishes.
double uncertainty_product(const ComptonConfig& cfg);

struct MaxParameters {
  double lambda_max;        ///< m, largest wavelength whose ratio can reach 1
  double delta_lambda_max;  ///< m, largest shift still inside the superposition regime
  double phi_max;           ///< rad, angle producing delta_lambda_max
};

/// lambda_max = 2 lambda_ce, delta_lambda_max = ratio_threshold * lambda_max,
/// and phi_max from the exact inversion of the shift formula.
MaxParameters solve_max_parameters(double ratio_threshold);

/// Mixture fraction assigned to the given ratio under cfg.crossover_model.
double crossover_fraction(const ComptonConfig& cfg, double ratio);

/// One row of an angle sweep.
struct SweepRecord {
  double phi_rad;
  double delta_lambda_m;
  double ratio;
  double recoil_dp;
  double pointer_overlap;  ///< magnitude of the electron packet overlap
  Regime regime;
  double visibility;
  double f_mix;            ///< mixture sub-ensemble fraction
  std::uint64_t n_branch1;
  std::uint64_t n_branch2;
  std::uint64_t seed;      ///< derived per-cell seed, derive(run seed, cell index)
};

/// Angle sweep with n_ensemble trials per grid point. Each trial joins the
/// mixture sub-ensemble with probability f_mix and, once there, actualizes a
/// branch with Born weights; draws use the per-cell derived seeds, so output
/// is bit-exact for a given run seed and independent of evaluation order.
std::vector<SweepRecord> sweep(const ComptonConfig& base, std::span<const double> phi_grid,
                               std::uint64_t n_ensemble, std::uint64_t seed);

}  // namespace pointerlab
