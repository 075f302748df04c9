#include "pointerlab/records.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "pointerlab/errors.hpp"

namespace pointerlab {

namespace {

void require_finite(double v, const char* field) {
  if (!std::isfinite(v))
    throw PhysicsError(std::string("record field ") + field + " is not finite");
}

void require_unit_interval(double v, const char* field) {
  require_finite(v, field);
  if (v < 0.0 || v > 1.0)
    throw PhysicsError(std::string("record field ") + field + " outside [0, 1]");
}

void validate_for_emit(const SweepRecord& rec) {
  require_finite(rec.phi_rad, "phi_rad");
  if (rec.phi_rad < 0.0 || rec.phi_rad > std::numbers::pi)
    throw PhysicsError("record field phi_rad outside [0, pi]");
  require_finite(rec.delta_lambda_m, "delta_lambda_m");
  if (rec.delta_lambda_m < 0.0) throw PhysicsError("record field delta_lambda_m negative");
  require_finite(rec.ratio, "ratio");
  if (rec.ratio < 0.0) throw PhysicsError("record field ratio negative");
  require_finite(rec.recoil_dp, "recoil_dp");
  if (rec.recoil_dp < 0.0) throw PhysicsError("record field recoil_dp negative");
  require_unit_interval(rec.pointer_overlap, "pointer_overlap");
  require_unit_interval(rec.visibility, "visibility");
  require_unit_interval(rec.f_mix, "f_mix");
}

void validate_for_emit(const MirrorScanPoint& rec) {
  require_finite(rec.momentum_transfer, "dp_kgms");
  if (rec.momentum_transfer < 0.0) throw PhysicsError("record field dp_kgms negative");
  require_unit_interval(rec.overlap_magnitude, "pointer_overlap");
  require_unit_interval(rec.visibility, "visibility");
}

void validate_for_emit(const EnsembleStats& rec) {
  if (rec.n_branch1 + rec.n_branch2 != rec.n_total)
    throw PhysicsError("ensemble tallies do not sum to n_total");
  require_unit_interval(rec.fraction1, "fraction1");
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::string sweep_csv_header() {
  return "phi_rad,delta_lambda_m,ratio,recoil_dp,pointer_overlap,regime,"
         "visibility,f_mix,n_branch1,n_branch2,seed";
}

std::string mirror_csv_header() { return "dp_kgms,pointer_overlap,regime,visibility"; }

std::string ensemble_csv_header() {
  return "n_total,n_branch1,n_branch2,fraction1,regime,seed";
}

std::string emit_record(const SweepRecord& rec, OutputFormat format) {
  validate_for_emit(rec);
  std::ostringstream out;
  if (format == OutputFormat::Csv) {
    out << format_double(rec.phi_rad) << ',' << format_double(rec.delta_lambda_m) << ','
        << format_double(rec.ratio) << ',' << format_double(rec.recoil_dp) << ','
        << format_double(rec.pointer_overlap) << ',' << to_string(rec.regime) << ','
        << format_double(rec.visibility) << ',' << format_double(rec.f_mix) << ','
        << rec.n_branch1 << ',' << rec.n_branch2 << ',' << rec.seed;
  } else {
    out << "{\"phi_rad\":" << format_double(rec.phi_rad)
        << ",\"delta_lambda_m\":" << format_double(rec.delta_lambda_m)
        << ",\"ratio\":" << format_double(rec.ratio)
        << ",\"recoil_dp\":" << format_double(rec.recoil_dp)
        << ",\"pointer_overlap\":" << format_double(rec.pointer_overlap)
        << ",\"regime\":\"" << to_string(rec.regime) << '"'
        << ",\"visibility\":" << format_double(rec.visibility)
        << ",\"f_mix\":" << format_double(rec.f_mix)
        << ",\"n_branch1\":" << rec.n_branch1 << ",\"n_branch2\":" << rec.n_branch2
        << ",\"seed\":" << rec.seed << '}';
  }
  return out.str();
}

std::string emit_record(const MirrorScanPoint& rec, OutputFormat format) {
  validate_for_emit(rec);
  std::ostringstream out;
  if (format == OutputFormat::Csv) {
    out << format_double(rec.momentum_transfer) << ',' << format_double(rec.overlap_magnitude)
        << ',' << to_string(rec.regime) << ',' << format_double(rec.visibility);
  } else {
    out << "{\"dp_kgms\":" << format_double(rec.momentum_transfer)
        << ",\"pointer_overlap\":" << format_double(rec.overlap_magnitude)
        << ",\"regime\":\"" << to_string(rec.regime) << '"'
        << ",\"visibility\":" << format_double(rec.visibility) << '}';
  }
  return out.str();
}

std::string emit_record(const EnsembleStats& rec, OutputFormat format) {
  validate_for_emit(rec);
  std::ostringstream out;
  if (format == OutputFormat::Csv) {
    out << rec.n_total << ',' << rec.n_branch1 << ',' << rec.n_branch2 << ','
        << format_double(rec.fraction1) << ',' << to_string(rec.regime) << ',' << rec.seed;
  } else {
    out << "{\"n_total\":" << rec.n_total << ",\"n_branch1\":" << rec.n_branch1
        << ",\"n_branch2\":" << rec.n_branch2
        << ",\"fraction1\":" << format_double(rec.fraction1)
        << ",\"regime\":\"" << to_string(rec.regime) << '"'
        << ",\"seed\":" << rec.seed << '}';
  }
  return out.str();
}

}  // namespace pointerlab
