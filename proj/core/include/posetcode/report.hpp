#pragma once

#include <string>

#include "posetcode/theorems.hpp"

namespace posetcode {

struct ReportOptions {
  /// Elapsed times vary run to run; they are serialized as zero unless
  /// explicitly requested, keeping default reports byte-reproducible.
  bool include_timings = false;
};

/// JSON array of instance rows with fields m, l, ideals, kind, case,
/// condition, predicted, verdicts, witness_u, witness_v, micros, in that
/// key order.
std::string to_json(const SweepReport& report, const ReportOptions& = {});
/// Same rows and column order as the JSON serialization, RFC 4180 quoting.
std::string to_csv(const SweepReport& report, const ReportOptions& = {});
/// Human-readable per-instance lines plus a mismatch summary.
std::string to_text_summary(const SweepReport& report);

/// Serializations of the replayed witness catalogue.
std::string to_json(const WitnessReport& report);
std::string to_text_summary(const WitnessReport& report);

}  // namespace posetcode
