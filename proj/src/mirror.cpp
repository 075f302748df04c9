#include "pointerlab/mirror.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "pointerlab/errors.hpp"

namespace pointerlab {

namespace {

std::string momentum_label(const char* prefix, double p) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%s p=%.9g", prefix, p);
  return buf;
}

}  // namespace

void validate(const MirrorExperimentConfig& cfg) {
  if (!std::isfinite(cfg.photon_momentum) || !(cfg.photon_momentum > 0.0))
    throw InvalidStateError("photon momentum must be > 0");
  if (!std::isfinite(cfg.momentum_transfer) || cfg.momentum_transfer < 0.0)
    throw InvalidStateError("momentum transfer must be >= 0");
  if (!std::isfinite(cfg.mirror_mass) || !(cfg.mirror_mass > 0.0))
    throw InvalidStateError("mirror mass must be > 0");
  if (!std::isfinite(cfg.mirror_sigma_x) || !(cfg.mirror_sigma_x > 0.0))
    throw InvalidStateError("mirror sigma_x must be > 0");
  if (!std::isfinite(cfg.interaction_time) || cfg.interaction_time < 0.0)
    throw InvalidStateError("interaction time must be >= 0");
  if (!is_finite(cfg.a) || !is_finite(cfg.b))
    throw InvalidStateError("branch coefficients must be finite");
  if (std::abs(std::norm(cfg.a) + std::norm(cfg.b) - 1.0) > 1e-9)
    throw InvalidStateError("|a|^2 + |b|^2 must be 1");
}

double thermal_sigma(double mass, double temperature) {
  if (!(mass > 0.0) || !(temperature > 0.0))
    throw ParameterError("thermal sigma needs mass > 0 and temperature > 0");
  return constants::hbar / (2.0 * std::sqrt(mass * constants::boltzmann * temperature));
}

TwoBranchState evolve_interaction(const MirrorExperimentConfig& cfg) {
  validate(cfg);
  GaussianPacket rest{0.0, 0.0, cfg.mirror_sigma_x, cfg.mirror_mass, 0.0};
  GaussianPacket kicked = rest;
  kicked.p_center = cfg.momentum_transfer;

  TwoBranchState state;
  state.branch1 = {cfg.a, momentum_label("transmitted", cfg.photon_momentum),
                   evolve_free(rest, cfg.interaction_time)};
  state.branch2 = {cfg.b,
                   momentum_label("reflected", cfg.photon_momentum - cfg.momentum_transfer),
                   evolve_free(kicked, cfg.interaction_time)};
  return state;
}

ReducedDensityMatrix2 photon_mixture(const TwoBranchState& state, double k) {
  const Amplitude z = overlap(state.branch1.pointer, state.branch2.pointer);
  if (!weakly_interfering(state.branch1.pointer, state.branch2.pointer, k))
    throw RegimeError("photon_mixture requires weakly interfering mirror packets");
  return reduce_pointer(state, z);
}

std::vector<MirrorScanPoint> regime_scan(const MirrorExperimentConfig& cfg,
                                         std::span<const double> dp_grid, double k) {
  validate(cfg);
  if (dp_grid.empty()) throw ParameterError("momentum grid must be non-empty");
  std::vector<MirrorScanPoint> out;
  out.reserve(dp_grid.size());
  for (double dp : dp_grid) {
    if (!std::isfinite(dp) || dp < 0.0)
      throw ParameterError("momentum grid values must be >= 0");
    MirrorExperimentConfig point = cfg;
    point.momentum_transfer = dp;
    const TwoBranchState state = evolve_interaction(point);
    const RegimeVerdict verdict = classify(state, k);
    const double vis =
        std::min(2.0 * std::abs(cfg.a) * std::abs(cfg.b) * verdict.criterion_value, 1.0);
    out.push_back({dp, verdict.criterion_value, verdict.regime, vis});
  }
  return out;
}

}  // namespace pointerlab
