#include "pointerlab/ssb.hpp"

#include "pointerlab/errors.hpp"
#include "pointerlab/rng.hpp"

namespace pointerlab {

RegimeVerdict classify(const TwoBranchState& state, double k, double hbar) {
  const InterferenceCheck check =
      interference_check(state.branch1.pointer, state.branch2.pointer, k, hbar);
  return {check.weakly_interfering ? Regime::Broken : Regime::Superposition,
          check.overlap_magnitude, CriterionKind::PointerOverlap};
}

BranchIndex actualize(const TwoBranchState& state, const RegimeVerdict& verdict,
                      std::uint64_t rng_seed) {
  if (verdict.regime != Regime::Broken)
    throw RegimeError("actualize requires the broken regime; "
                      "strongly interfering packets do not collapse");
  const auto [p1, p2] = born_probabilities(state);
  const double u = rng::uniform01(rng::derive(rng_seed, 0));
  // u in [0, 1) with a strict compare never selects a zero-weight branch.
  return u < p1 ? BranchIndex::First : BranchIndex::Second;
}

EnsembleStats run_ensemble(const TwoBranchState& state, std::uint64_t n, double k,
                           std::uint64_t rng_seed, double hbar) {
  if (n < 1) throw ParameterError("ensemble size must be >= 1");
  const RegimeVerdict verdict = classify(state, k, hbar);
  EnsembleStats stats;
  stats.seed = rng_seed;
  stats.regime = verdict.regime;
  if (verdict.regime != Regime::Broken) return stats;  // no collapses occur

  const auto [p1, p2] = born_probabilities(state);
  for (std::uint64_t i = 0; i < n; ++i) {
    const double u = rng::uniform01(rng::derive(rng_seed, i));
    if (u < p1)
      ++stats.n_branch1;
    else
      ++stats.n_branch2;
  }
  stats.n_total = n;
  stats.fraction1 = static_cast<double>(stats.n_branch1) / static_cast<double>(n);
  return stats;
}

}  // namespace pointerlab
