#pragma once

#include "umbral/cli/render.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace umbral::cli {

struct SweepOptions {
  unsigned max_r = 20;
  unsigned max_s = 20;
  /// Prime bound for the Psi sweeps; each property has its own default.
  std::optional<unsigned> max_p;
  unsigned jobs = 1;
};

/// Outcome of one verification sweep. Failures are witness keys; a sweep
/// passes iff there are none.
struct VerifyReport {
  std::string property;
  std::string range;
  std::size_t instances = 0;
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  double seconds = 0.0;

  [[nodiscard]] bool ok() const { return failures.empty(); }
};

/// Names accepted by run_sweep, in a fixed order.
std::span<const std::string_view> property_names();

/// Runs the named sweep. Unknown names throw DomainError. Work is split by
/// rows over `jobs` threads; the report does not depend on `jobs` except
/// for the timing.
VerifyReport run_sweep(std::string_view property, const SweepOptions& options);

std::string render_report(const VerifyReport& report, OutputFormat format);

}  // namespace umbral::cli
