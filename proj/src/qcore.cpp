#include "pointerlab/qcore.hpp"

#include <algorithm>
#include <cmath>

#include "pointerlab/errors.hpp"

namespace pointerlab {

double norm_squared(const TwoBranchState& state, double hbar) {
  const double diag = std::norm(state.branch1.amplitude) + std::norm(state.branch2.amplitude);
  if (state.norm == NormConvention::OrthogonalLabels) return diag;
  const Amplitude z = overlap(state.branch1.pointer, state.branch2.pointer, hbar);
  return diag + 2.0 * std::real(std::conj(state.branch1.amplitude) *
                                state.branch2.amplitude * z);
}

void validate(const TwoBranchState& state, double tol, double hbar) {
  if (!is_finite(state.branch1.amplitude) || !is_finite(state.branch2.amplitude))
    throw InvalidStateError("branch amplitude is not finite");
  if (state.branch1.label == state.branch2.label)
    throw InvalidStateError("branch labels must be distinct");
  validate(state.branch1.pointer);
  validate(state.branch2.pointer);
  const double n2 = norm_squared(state, hbar);
  if (std::abs(n2 - 1.0) > tol)
    throw InvalidStateError("state is not normalized under its flagged convention");
}

void validate(const ReducedDensityMatrix2& rho) {
  if (!std::isfinite(rho.rho11) || !std::isfinite(rho.rho22) || !is_finite(rho.rho12))
    throw InvalidStateError("density matrix has a non-finite entry");
  if (rho.rho11 < 0.0 || rho.rho22 < 0.0)
    throw InvalidStateError("density matrix diagonal must be non-negative");
  if (std::abs(rho.rho11 + rho.rho22 - 1.0) > 1e-9)
    throw InvalidStateError("density matrix trace must be 1");
  if (rho.rho11 * rho.rho22 - std::norm(rho.rho12) < -1e-12)
    throw InvalidStateError("density matrix is not positive semidefinite");
  const double p = rho.rho11 * rho.rho11 + rho.rho22 * rho.rho22 + 2.0 * std::norm(rho.rho12);
  if (p < 0.5 - 1e-9 || p > 1.0 + 1e-9)
    throw InvalidStateError("purity outside [1/2, 1]");
}

ReducedDensityMatrix2 reduce_pointer(const TwoBranchState& state, Amplitude pointer_overlap) {
  const Amplitude c1 = state.branch1.amplitude;
  const Amplitude c2 = state.branch2.amplitude;
  if (!is_finite(c1) || !is_finite(c2))
    throw InvalidStateError("branch amplitude is not finite");
  if (state.branch1.label == state.branch2.label)
    throw InvalidStateError("branch labels must be distinct");
  const double az = std::abs(pointer_overlap);
  if (!std::isfinite(az) || az > 1.0 + 1e-9)
    throw InvalidOverlapError("pointer overlap magnitude exceeds 1");
  // Rounding noise can push a unit overlap marginally past 1; rescale onto
  // the unit disc so the PSD invariant survives.
  if (az > 1.0) pointer_overlap /= az;

  const double w1 = std::norm(c1);
  const double w2 = std::norm(c2);
  const double trace = w1 + w2;
  if (!(trace > 0.0)) throw InvalidStateError("state has zero norm");

  ReducedDensityMatrix2 rho{w1 / trace, w2 / trace,
                            c1 * std::conj(c2) * std::conj(pointer_overlap) / trace,
                            state.branch1.label, state.branch2.label};
  validate(rho);
  return rho;
}

double purity(const ReducedDensityMatrix2& rho) {
  validate(rho);
  return rho.rho11 * rho.rho11 + rho.rho22 * rho.rho22 + 2.0 * std::norm(rho.rho12);
}

double visibility(const ReducedDensityMatrix2& rho) {
  validate(rho);
  // 2 |rho12| <= 1 follows from unit trace and positivity; rounding may
  // overshoot by an ulp.
  return std::min(2.0 * std::abs(rho.rho12), 1.0);
}

std::pair<double, double> born_probabilities(const TwoBranchState& state) {
  if (!is_finite(state.branch1.amplitude) || !is_finite(state.branch2.amplitude))
    throw InvalidStateError("branch amplitude is not finite");
  const double w1 = std::norm(state.branch1.amplitude);
  const double w2 = std::norm(state.branch2.amplitude);
  if (std::abs(w1 + w2 - 1.0) > 1e-9)
    throw InvalidStateError("state is not normalized");
  return {w1, w2};
}

}  // namespace pointerlab
