#pragma once

#include <string>
#include <utility>

#include "pointerlab/packets.hpp"
#include "pointerlab/types.hpp"

namespace pointerlab {

/// One branch of a bipartite state: weight, system label, pointer packet.
struct Branch {
  Amplitude amplitude;
  std::string label;
  GaussianPacket pointer;
};

/// Which inner-product convention a state is normalized under.
enum class NormConvention {
  /// System labels orthonormal; norm is |c1|^2 + |c2|^2.
  OrthogonalLabels,
  /// Single-system superposition of two packets; norm includes the pointer
  /// cross term 2 Re(c1* c2 <g1|g2>).
  PointerGram
};

/// Bipartite state c1 |label1>|g1> + c2 |label2>|g2> with exactly two
/// branches and distinct system labels.
struct TwoBranchState {
  Branch branch1;
  Branch branch2;
  NormConvention norm = NormConvention::OrthogonalLabels;
};

double norm_squared(const TwoBranchState& state, double hbar = constants::hbar);

/// Throws InvalidStateError unless amplitudes are finite, labels distinct and
/// the norm under the state's flagged convention is 1 within tol.
void validate(const TwoBranchState& state, double tol = 1e-9,
              double hbar = constants::hbar);

/// 2x2 reduced density matrix over the two system labels. Hermitian by
/// storage: the (2,1) element is implicitly conj(rho12).
struct ReducedDensityMatrix2 {
  double rho11;
  double rho22;
  Amplitude rho12;
  std::string label1;
  std::string label2;
};

/// Trace 1 within 1e-9, diagonal >= 0, positive semidefinite within 1e-12,
/// purity in [1/2, 1]. Throws InvalidStateError otherwise.
void validate(const ReducedDensityMatrix2& rho);

/// Partial trace over the pointer: rho11 = |c1|^2, rho22 = |c2|^2,
/// rho12 = c1 c2* conj(pointer_overlap), renormalized to unit trace.
/// Throws InvalidStateError for non-finite amplitudes and InvalidOverlapError
/// for |pointer_overlap| > 1 + 1e-9.
ReducedDensityMatrix2 reduce_pointer(const TwoBranchState& state, Amplitude pointer_overlap);

/// Tr(rho^2) = rho11^2 + rho22^2 + 2 |rho12|^2, in [1/2, 1].
double purity(const ReducedDensityMatrix2& rho);

/// Fringe contrast V = 2 |rho12| observable at a downstream detector.
double visibility(const ReducedDensityMatrix2& rho);

/// Outcome probabilities (|c1|^2, |c2|^2) of a normalized state.
std::pair<double, double> born_probabilities(const TwoBranchState& state);

}  // namespace pointerlab
