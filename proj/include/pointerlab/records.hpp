#pragma once

#include <string>

#include "pointerlab/compton.hpp"
#include "pointerlab/mirror.hpp"
#include "pointerlab/ssb.hpp"

namespace pointerlab {

enum class OutputFormat { Csv, JsonLines };

/// Shortest-field float serialization with 17 significant digits; enough to
/// reproduce every double bit-exactly on parse.
std::string format_double(double v);

// CSV headers are part of the stable output interface.
std::string sweep_csv_header();
std::string mirror_csv_header();
std::string ensemble_csv_header();

// Each emitter re-validates the record and throws PhysicsError rather than
// serialize an invariant violation.
std::string emit_record(const SweepRecord& rec, OutputFormat format);
std::string emit_record(const MirrorScanPoint& rec, OutputFormat format);
std::string emit_record(const EnsembleStats& rec, OutputFormat format);

}  // namespace pointerlab
