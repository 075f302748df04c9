// pointer-lab: deterministic measurement-regime experiments on two-branch
// pointer states. Subcommands: mirror, compton, sweep, ensemble.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "pointerlab/errors.hpp"
#include "pointerlab/runconfig.hpp"
#include "pointerlab/ssb.hpp"

namespace {

using namespace pointerlab;

struct CliOptions {
  std::string config_path;
  std::vector<std::string> overrides;
  std::string seed;
  std::string out;
  std::string format;
};

void apply_overrides(KeyValueConfig& kv, const CliOptions& opts) {
  for (const std::string& item : opts.overrides) {
    const std::size_t eq = item.find('=');
    if (eq == std::string::npos || eq == 0)
      throw ConfigError(item, 0, "--set expects key=value");
    kv.set(item.substr(0, eq), item.substr(eq + 1));
  }
  // Flags outrank both file values and --set.
  if (!opts.seed.empty()) kv.set("run.seed", opts.seed);
  if (!opts.out.empty()) kv.set("run.out", opts.out);
  if (!opts.format.empty()) kv.set("run.format", opts.format);
}

struct RunOutput {
  std::string header;
  std::vector<std::string> lines;
  std::string summary;
};

RunOutput execute(const RunConfig& rc) {
  RunOutput out;
  char buf[200];
  std::snprintf(buf, sizeof(buf), "experiment: %s\nseed: %llu\n", to_string(rc.experiment),
                static_cast<unsigned long long>(rc.seed));
  out.summary = buf;

  if (const auto* run = std::get_if<MirrorRun>(&rc.run)) {
    const auto points = regime_scan(run->cfg, run->dp_grid, run->k);
    if (rc.format == OutputFormat::Csv) out.header = mirror_csv_header();
    out.summary += "      dp_kgms  pointer_overlap  regime         visibility\n";
    for (const auto& p : points) {
      out.lines.push_back(emit_record(p, rc.format));
      std::snprintf(buf, sizeof(buf), "%13.6g  %15.6g  %-13s %11.6g\n", p.momentum_transfer,
                    p.overlap_magnitude, to_string(p.regime), p.visibility);
      out.summary += buf;
    }
  } else if (const auto* run = std::get_if<EnsembleRun>(&rc.run)) {
    const EnsembleStats stats = run_ensemble(run->state, run->n, run->k, rc.seed);
    if (rc.format == OutputFormat::Csv) out.header = ensemble_csv_header();
    out.lines.push_back(emit_record(stats, rc.format));
    std::snprintf(buf, sizeof(buf),
                  "regime: %s\nn_total: %llu\nn_branch1: %llu\nn_branch2: %llu\nfraction1: %.6g\n",
                  to_string(stats.regime), static_cast<unsigned long long>(stats.n_total),
                  static_cast<unsigned long long>(stats.n_branch1),
                  static_cast<unsigned long long>(stats.n_branch2), stats.fraction1);
    out.summary += buf;
  } else {
    // compton and sweep share the record pipeline
    std::vector<double> grid;
    ComptonConfig cfg;
    std::uint64_t n = 0;
    if (const auto* single = std::get_if<ComptonRun>(&rc.run)) {
      cfg = single->cfg;
      grid = {cfg.angle_phi};
      n = single->n_ensemble;
    } else {
      const auto& sw = std::get<SweepRun>(rc.run);
      cfg = sw.cfg;
      grid = sw.phi_grid;
      n = sw.n_ensemble;
    }
    const auto records = sweep(cfg, grid, n, rc.seed);
    if (rc.format == OutputFormat::Csv) out.header = sweep_csv_header();
    out.summary += "   phi_rad       ratio  regime         visibility   f_mix\n";
    for (const auto& rec : records) {
      out.lines.push_back(emit_record(rec, rc.format));
      std::snprintf(buf, sizeof(buf), "%10.6f  %10.6g  %-13s %11.6g  %6.4g\n", rec.phi_rad,
                    rec.ratio, to_string(rec.regime), rec.visibility, rec.f_mix);
      out.summary += buf;
    }
  }
  return out;
}

int run_cli(ExperimentKind kind, const CliOptions& opts) {
  try {
    KeyValueConfig kv =
        opts.config_path.empty() ? KeyValueConfig{} : KeyValueConfig::parse_file(opts.config_path);
    apply_overrides(kv, opts);
    const RunConfig rc = build_run_config(kind, kv);
    const RunOutput result = execute(rc);

    std::cout << result.summary;
    if (rc.output_path.empty()) {
      if (!result.header.empty()) std::cout << result.header << '\n';
      for (const auto& line : result.lines) std::cout << line << '\n';
    } else {
      std::ofstream file(rc.output_path);
      if (!file) {
        std::cerr << "error: cannot write output file '" << rc.output_path << "'\n";
        return 1;
      }
      if (!result.header.empty()) file << result.header << '\n';
      for (const auto& line : result.lines) file << line << '\n';
      std::cout << "wrote " << result.lines.size() << " record(s) to " << rc.output_path << '\n';
    }
    return 0;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const PhysicsError& e) {
    std::cerr << "error: physical invariant violated: " << e.what() << '\n';
    return 3;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pointer-lab: pointer-state measurement-regime experiments"};
  app.require_subcommand(1);

  CliOptions opts;
  ExperimentKind kind = ExperimentKind::Mirror;

  const auto add_common = [&opts](CLI::App* sub) {
    sub->add_option("--config", opts.config_path, "key-value config file");
    sub->add_option("--set", opts.overrides, "override, key=value (repeatable)");
    sub->add_option("--seed", opts.seed, "run seed (overrides run.seed)");
    sub->add_option("--out", opts.out, "output file (overrides run.out)");
    sub->add_option("--format", opts.format, "csv or jsonl (overrides run.format)");
  };

  CLI::App* mirror_cmd =
      app.add_subcommand("mirror", "photon on a movable half-silvered mirror, momentum scan");
  CLI::App* compton_cmd =
      app.add_subcommand("compton", "Compton electron pointer at one scattering angle");
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Compton angle sweep with sub-ensembles");
  CLI::App* ensemble_cmd =
      app.add_subcommand("ensemble", "collapse tallies of a two-branch pointer state");
  for (CLI::App* sub : {mirror_cmd, compton_cmd, sweep_cmd, ensemble_cmd}) add_common(sub);

  mirror_cmd->callback([&] { kind = ExperimentKind::Mirror; });
  compton_cmd->callback([&] { kind = ExperimentKind::Compton; });
  sweep_cmd->callback([&] { kind = ExperimentKind::Sweep; });
  ensemble_cmd->callback([&] { kind = ExperimentKind::Ensemble; });

  CLI11_PARSE(app, argc, argv);
  return run_cli(kind, opts);
}
