#include "pointerlab/compton.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "pointerlab/errors.hpp"
#include "pointerlab/rng.hpp"

namespace pointerlab {

namespace {

void require_angle(double phi) {
  if (!std::isfinite(phi) || phi < 0.0 || phi > std::numbers::pi)
    throw RangeError("scattering angle must lie in [0, pi]");
}

void require_wavelength(double wavelength) {
  if (!std::isfinite(wavelength) || !(wavelength > 0.0))
    throw ParameterError("wavelength must be > 0");
}

std::string scattered_label(double phi, double p_out) {
  char buf[80];
  std::snprintf(buf, sizeof(buf), "scattered phi=%.9g p=%.9g", phi, p_out);
  return buf;
}

std::string transmitted_label(double p_in) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "transmitted unscattered p=%.9g", p_in);
  return buf;
}

}  // namespace

void validate(const ComptonConfig& cfg) {
  require_wavelength(cfg.wavelength);
  require_angle(cfg.angle_phi);
  if (!is_finite(cfg.alpha) || !is_finite(cfg.beta))
    throw InvalidStateError("branch coefficients must be finite");
  if (std::abs(std::norm(cfg.alpha) + std::norm(cfg.beta) - 1.0) > 1e-9)
    throw InvalidStateError("|alpha|^2 + |beta|^2 must be 1");
  if (!std::isfinite(cfg.electron_sigma_x) || !(cfg.electron_sigma_x > 0.0))
    throw InvalidStateError("electron sigma_x must be > 0");
  if (!(cfg.ratio_threshold > 0.0) || !(cfg.ratio_threshold < 1.0))
    throw ParameterError("ratio threshold must lie in (0, 1)");
  if (!(cfg.epsilon_high > 0.0) || !(cfg.epsilon_high < 1.0))
    throw ParameterError("epsilon_high must lie in (0, 1)");
  if (cfg.ratio_threshold >= 1.0 - cfg.epsilon_high)
    throw ParameterError("regime bands overlap: ratio threshold must be below 1 - epsilon_high");
}

double compton_shift(double wavelength, double phi) {
  (void)wavelength;  // the shift is wavelength-independent
  require_angle(phi);
  const double s = std::sin(0.5 * phi);
  return 2.0 * constants::compton_wavelength_e * s * s;
}

double debroglie_momentum(double wavelength) {
  require_wavelength(wavelength);
  return constants::planck / wavelength;
}

double recoil_momentum(double wavelength, double phi) {
  require_wavelength(wavelength);
  require_angle(phi);
  const double p = debroglie_momentum(wavelength);
  const double p_out = constants::planck / (wavelength + compton_shift(wavelength, phi));
  const double q2 = p * p + p_out * p_out - 2.0 * p * p_out * std::cos(phi);
  return std::sqrt(std::max(q2, 0.0));
}

double wavelength_ratio(double wavelength, double phi) {
  require_wavelength(wavelength);
  return compton_shift(wavelength, phi) / wavelength;
}

KinematicsRecord kinematics(double wavelength, double phi) {
  require_wavelength(wavelength);
  require_angle(phi);
  KinematicsRecord rec;
  rec.p_in = debroglie_momentum(wavelength);
  rec.delta_lambda = compton_shift(wavelength, phi);
  rec.lambda_out = wavelength + rec.delta_lambda;
  rec.p_out = constants::planck / rec.lambda_out;
  rec.recoil_dp = recoil_momentum(wavelength, phi);
  rec.ratio = rec.delta_lambda / wavelength;
  rec.uncertainty_product = rec.delta_lambda * rec.recoil_dp;
  return rec;
}

RegimeVerdict classify_regime(const ComptonConfig& cfg) {
  validate(cfg);
  const double ratio = wavelength_ratio(cfg.wavelength, cfg.angle_phi);
  Regime regime = Regime::Intermediate;
  if (ratio <= cfg.ratio_threshold)
    regime = Regime::Superposition;
  else if (ratio >= 1.0 - cfg.epsilon_high)
    regime = Regime::Broken;
  return {regime, ratio, CriterionKind::WavelengthRatio};
}

TwoBranchState build_entangled_state(const ComptonConfig& cfg) {
  validate(cfg);
  GaussianPacket rest{0.0, 0.0, cfg.electron_sigma_x, constants::electron_mass, 0.0};
  GaussianPacket recoiling = rest;
  recoiling.p_center = recoil_momentum(cfg.wavelength, cfg.angle_phi);

  const KinematicsRecord kin = kinematics(cfg.wavelength, cfg.angle_phi);
  TwoBranchState state;
  state.branch1 = {cfg.alpha, transmitted_label(kin.p_in), rest};
  state.branch2 = {cfg.beta, scattered_label(cfg.angle_phi, kin.p_out), recoiling};
  return state;
}

double detector_visibility(const ComptonConfig& cfg) {
  const TwoBranchState state = build_entangled_state(cfg);
  const double z = std::abs(overlap(state.branch1.pointer, state.branch2.pointer));
  return std::min(2.0 * std::abs(cfg.alpha) * std::abs(cfg.beta) * z, 1.0);
}

double uncertainty_product(const ComptonConfig& cfg) {
  validate(cfg);
  const KinematicsRecord kin = kinematics(cfg.wavelength, cfg.angle_phi);
  if (kin.delta_lambda <= 0.0)
    throw PhysicsError("uncertainty product undefined at zero wavelength shift");
  return kin.uncertainty_product;
}

MaxParameters solve_max_parameters(double ratio_threshold) {
  if (!std::isfinite(ratio_threshold) || !(ratio_threshold > 0.0) || !(ratio_threshold < 1.0))
    throw ParameterError("ratio threshold must lie in (0, 1)");
  MaxParameters out;
  out.lambda_max = 2.0 * constants::compton_wavelength_e;
  out.delta_lambda_max = ratio_threshold * out.lambda_max;
  // Exact inversion of the shift formula at the solved maximal shift.
  out.phi_max =
      2.0 * std::asin(std::sqrt(out.delta_lambda_max / (2.0 * constants::compton_wavelength_e)));
  return out;
}

double crossover_fraction(const ComptonConfig& cfg, double ratio) {
  if (!std::isfinite(ratio) || ratio < 0.0)
    throw ParameterError("ratio must be >= 0");
  const double lo = cfg.ratio_threshold;
  const double hi = 1.0 - cfg.epsilon_high;
  switch (cfg.crossover_model) {
    case CrossoverModel::Sharp:
      return ratio >= 0.5 * (lo + hi) ? 1.0 : 0.0;
    case CrossoverModel::Linear:
      return std::clamp((ratio - lo) / (hi - lo), 0.0, 1.0);
  }
  throw ParameterError("unknown crossover model");
}

std::vector<SweepRecord> sweep(const ComptonConfig& base, std::span<const double> phi_grid,
                               std::uint64_t n_ensemble, std::uint64_t seed) {
  validate(base);
  const double p1 = std::norm(base.alpha);

  std::vector<SweepRecord> out;
  out.reserve(phi_grid.size());
  for (std::size_t cell = 0; cell < phi_grid.size(); ++cell) {
    ComptonConfig cfg = base;
    cfg.angle_phi = phi_grid[cell];
    require_angle(cfg.angle_phi);

    const KinematicsRecord kin = kinematics(cfg.wavelength, cfg.angle_phi);
    const RegimeVerdict verdict = classify_regime(cfg);
    const TwoBranchState state = build_entangled_state(cfg);
    const double overlap_mag =
        std::abs(overlap(state.branch1.pointer, state.branch2.pointer));
    const double f_mix = crossover_fraction(cfg, kin.ratio);

    // Trial i of cell j draws from the per-cell stream derive(seed, j):
    // one value assigns the trial to a sub-ensemble, the next actualizes the
    // branch. Tallies are reproducible independently of evaluation order.
    const std::uint64_t cell_seed = rng::derive(seed, cell);
    SweepRecord rec{cfg.angle_phi, kin.delta_lambda, kin.ratio,   kin.recoil_dp,
                    overlap_mag,   verdict.regime,   detector_visibility(cfg),
                    f_mix,         0,                0,           cell_seed};
    for (std::uint64_t i = 0; i < n_ensemble; ++i) {
      const double u_assign = rng::uniform01(rng::derive(cell_seed, 2 * i));
      if (u_assign >= f_mix) continue;  // superposition sub-ensemble, no collapse
      const double u_branch = rng::uniform01(rng::derive(cell_seed, 2 * i + 1));
      if (u_branch < p1)
        ++rec.n_branch1;
      else
        ++rec.n_branch2;
    }
    out.push_back(rec);
  }
  return out;
}

}  // namespace pointerlab
