#include "pointerlab/runconfig.hpp"

#include <cmath>
#include <numbers>

#include "pointerlab/errors.hpp"

namespace pointerlab {

namespace {

constexpr double inv_sqrt2 = 0.7071067811865476;

std::vector<double> linspace(double start, double stop, std::uint64_t count) {
  if (count < 1) throw ParameterError("grid count must be >= 1");
  if (count > 1000000) throw ParameterError("grid count must be <= 1e6");
  std::vector<double> grid;
  grid.reserve(count);
  if (count == 1) {
    grid.push_back(start);
    return grid;
  }
  const double step = (stop - start) / static_cast<double>(count - 1);
  for (std::uint64_t i = 0; i < count; ++i)
    grid.push_back(start + step * static_cast<double>(i));
  grid.back() = stop;  // land exactly on the endpoint
  return grid;
}

Amplitude read_amplitude(KeyValueConfig& kv, const std::string& base, Amplitude fallback) {
  const double re = kv.get_double(base + "_re", fallback.real());
  const double im = kv.get_double(base + "_im", fallback.imag());
  return {re, im};
}

OutputFormat read_format(KeyValueConfig& kv) {
  const std::string fmt = kv.get_string("run.format", "csv");
  if (fmt == "csv") return OutputFormat::Csv;
  if (fmt == "jsonl" || fmt == "json-lines") return OutputFormat::JsonLines;
  throw ConfigError("run.format", 0, "expected 'csv' or 'jsonl', got '" + fmt + "'");
}

CrossoverModel read_crossover(KeyValueConfig& kv) {
  const std::string model = kv.get_string("compton.crossover_model", "sharp");
  if (model == "sharp") return CrossoverModel::Sharp;
  if (model == "linear") return CrossoverModel::Linear;
  throw ConfigError("compton.crossover_model", 0,
                    "expected 'sharp' or 'linear', got '" + model + "'");
}

ComptonConfig read_compton(KeyValueConfig& kv, bool with_angle) {
  ComptonConfig cfg;
  cfg.wavelength = kv.get_double("compton.wavelength_m", 2.0 * constants::compton_wavelength_e);
  if (with_angle) cfg.angle_phi = kv.get_angle_rad("compton.angle", 0.0);
  cfg.alpha = read_amplitude(kv, "compton.alpha", {inv_sqrt2, 0.0});
  cfg.beta = read_amplitude(kv, "compton.beta", {inv_sqrt2, 0.0});
  cfg.electron_sigma_x = kv.get_double("compton.electron_sigma_x_m", 1e-10);
  cfg.ratio_threshold = kv.get_double("compton.ratio_threshold", 0.01);
  cfg.epsilon_high = kv.get_double("compton.epsilon_high", 0.5);
  cfg.crossover_model = read_crossover(kv);
  return cfg;
}

MirrorRun read_mirror(KeyValueConfig& kv) {
  MirrorRun run;
  MirrorExperimentConfig& cfg = run.cfg;
  cfg.photon_momentum =
      kv.get_double("mirror.photon_momentum_kgms", constants::planck / 500e-9);
  cfg.momentum_transfer =
      kv.get_double("mirror.momentum_transfer_kgms", 2.0 * cfg.photon_momentum);
  cfg.a = read_amplitude(kv, "mirror.a", {inv_sqrt2, 0.0});
  cfg.b = read_amplitude(kv, "mirror.b", {inv_sqrt2, 0.0});
  cfg.mirror_mass = kv.get_double("mirror.mass_kg", 1e-6);
  const double temperature = kv.get_double("mirror.temperature_k", 300.0);
  const double sigma_fallback =
      (cfg.mirror_mass > 0.0 && temperature > 0.0) ? thermal_sigma(cfg.mirror_mass, temperature)
                                                   : 0.0;
  cfg.mirror_sigma_x = kv.get_double("mirror.sigma_x_m", sigma_fallback);
  cfg.interaction_time = kv.get_double("mirror.interaction_time_s", 0.0);
  run.k = kv.get_double("ssb.k", 1.0);

  const double dp_start = kv.get_double("mirror.dp_start_kgms", cfg.momentum_transfer);
  const double dp_stop = kv.get_double("mirror.dp_stop_kgms", dp_start);
  const std::uint64_t dp_count = kv.get_uint("mirror.dp_count", 1);
  run.dp_grid = linspace(dp_start, dp_stop, dp_count);
  return run;
}

EnsembleRun read_ensemble(KeyValueConfig& kv) {
  EnsembleRun run;
  const double p1 = kv.get_double("ensemble.p1", 0.5);
  if (!(p1 >= 0.0) || !(p1 <= 1.0))
    throw ParameterError("ensemble.p1 must lie in [0, 1]");
  run.n = kv.get_uint("ensemble.n", 100000);
  run.k = kv.get_double("ssb.k", 1.0);

  const double sigma = kv.get_double("ensemble.sigma_x_m", 1e-10);
  const double mass = kv.get_double("ensemble.mass_kg", constants::electron_mass);
  const double dx = kv.get_double("ensemble.delta_x_m", 10.0 * sigma);
  const double dp = kv.get_double("ensemble.delta_p_kgms", 0.0);

  GaussianPacket g1{0.0, 0.0, sigma, mass, 0.0};
  GaussianPacket g2{dx, dp, sigma, mass, 0.0};
  run.state.branch1 = {Amplitude{std::sqrt(p1), 0.0}, "branch1", g1};
  run.state.branch2 = {Amplitude{std::sqrt(1.0 - p1), 0.0}, "branch2", g2};
  return run;
}

}  // namespace

const char* to_string(ExperimentKind k) {
  switch (k) {
    case ExperimentKind::Mirror: return "mirror";
    case ExperimentKind::Compton: return "compton";
    case ExperimentKind::Sweep: return "sweep";
    case ExperimentKind::Ensemble: return "ensemble";
  }
  return "unknown";
}

RunConfig build_run_config(ExperimentKind kind, KeyValueConfig& kv) {
  RunConfig rc;
  rc.experiment = kind;
  rc.seed = kv.get_uint("run.seed", 0);
  rc.output_path = kv.get_string("run.out", "");
  rc.format = read_format(kv);

  switch (kind) {
    case ExperimentKind::Mirror: {
      MirrorRun run = read_mirror(kv);
      kv.require_all_consumed();
      validate(run.cfg);
      rc.run = std::move(run);
      break;
    }
    case ExperimentKind::Compton: {
      ComptonRun run;
      run.cfg = read_compton(kv, /*with_angle=*/true);
      run.n_ensemble = kv.get_uint("compton.n_ensemble", 10000);
      kv.require_all_consumed();
      validate(run.cfg);
      rc.run = std::move(run);
      break;
    }
    case ExperimentKind::Sweep: {
      SweepRun run;
      run.cfg = read_compton(kv, /*with_angle=*/false);
      run.n_ensemble = kv.get_uint("sweep.n_ensemble", 10000);
      const double start = kv.get_angle_rad("sweep.phi_start", 0.0);
      const double stop = kv.get_angle_rad("sweep.phi_stop", std::numbers::pi);
      const std::uint64_t count = kv.get_uint("sweep.phi_count", 9);
      kv.require_all_consumed();
      validate(run.cfg);
      run.phi_grid = linspace(start, stop, count);
      rc.run = std::move(run);
      break;
    }
    case ExperimentKind::Ensemble: {
      EnsembleRun run = read_ensemble(kv);
      kv.require_all_consumed();
      validate(run.state, 1e-9);
      rc.run = std::move(run);
      break;
    }
  }
  return rc;
}

}  // namespace pointerlab
