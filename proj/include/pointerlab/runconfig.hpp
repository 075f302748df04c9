#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "pointerlab/compton.hpp"
#include "pointerlab/config.hpp"
#include "pointerlab/mirror.hpp"
#include "pointerlab/records.hpp"

namespace pointerlab {

enum class ExperimentKind { Mirror, Compton, Sweep, Ensemble };

const char* to_string(ExperimentKind k);

struct MirrorRun {
  MirrorExperimentConfig cfg;
  std::vector<double> dp_grid;
  double k = 1.0;
};

struct ComptonRun {
  ComptonConfig cfg;
  std::uint64_t n_ensemble = 0;
};

struct SweepRun {
  ComptonConfig cfg;
  std::vector<double> phi_grid;
  std::uint64_t n_ensemble = 0;
};

struct EnsembleRun {
  TwoBranchState state;
  double k = 1.0;
  std::uint64_t n = 0;
};

/// Fully validated run request assembled from a key-value config.
struct RunConfig {
  ExperimentKind experiment;
  std::uint64_t seed = 0;
  std::string output_path;  ///< empty writes records to stdout
  OutputFormat format = OutputFormat::Csv;
  std::variant<MirrorRun, ComptonRun, SweepRun, EnsembleRun> run;
};

/// Builds the experiment from `kv`, applying documented defaults for absent
/// keys, rejecting unknown keys (ConfigError) and invalid physics
/// (PhysicsError via the module validators).
RunConfig build_run_config(ExperimentKind kind, KeyValueConfig& kv);

}  // namespace pointerlab
