#pragma once

#include <cstdint>

#include "pointerlab/qcore.hpp"

namespace pointerlab {

enum class CriterionKind { PointerOverlap, WavelengthRatio };

inline const char* to_string(CriterionKind k) {
  return k == CriterionKind::PointerOverlap ? "pointer_overlap" : "wavelength_ratio";
}

/// Stability classification of a two-branch state together with the raw
/// criterion it was decided on.
struct RegimeVerdict {
  Regime regime;
  double criterion_value;
  CriterionKind criterion_kind;
};

/// Tally of actualized outcomes over an ensemble of identically prepared states.
struct EnsembleStats {
  std::uint64_t n_total = 0;
  std::uint64_t n_branch1 = 0;
  std::uint64_t n_branch2 = 0;
  double fraction1 = 0.0;  ///< n_branch1 / n_total, 0 when no trials ran
  std::uint64_t seed = 0;
  Regime regime = Regime::Superposition;  ///< regime the run executed under
};

/// Broken iff the pointer packets are weakly interfering at strength k;
/// criterion_value is the pointer overlap magnitude.
RegimeVerdict classify(const TwoBranchState& state, double k = 1.0,
                       double hbar = constants::hbar);

/// Samples the branch a broken superposition actualizes into, Born-weighted
/// and deterministic in rng_seed. Throws RegimeError unless the verdict is
/// Broken: collapse must not fire while the packets interfere strongly.
///
/// There is deliberately no inverse operation: nothing maps an actualized
/// branch back to the pre-collapse state.
BranchIndex actualize(const TwoBranchState& state, const RegimeVerdict& verdict,
                      std::uint64_t rng_seed);

/// n independent actualizations with per-trial seeds derive(rng_seed, i).
/// In the Superposition regime no collapses occur and the stats come back
/// with n_total = 0 and the regime flag set.
EnsembleStats run_ensemble(const TwoBranchState& state, std::uint64_t n, double k,
                           std::uint64_t rng_seed, double hbar = constants::hbar);

}  // namespace pointerlab
