#ifndef NCWHEEL_VALIDATE_HPP
#define NCWHEEL_VALIDATE_HPP

#include <string>
#include <vector>

#include "errata.hpp"

namespace ncwheel {

struct ValidationOptions {
  SweepSpec sweep;
  double tol = 1e-9;
  bool strict_operators = false;
};

struct CheckResult {
  std::string name;
  double worst = 0.0;
  double tol = 0.0;
  bool passed = false;
  bool excluded = false;  // skipped because a needed formula stayed unresolved
};

enum class OverallStatus { Ok, Fault, Unresolved };

struct ValidationReport {
  ValidationOptions options;
  int instances = 0;
  std::vector<CheckResult> checks;
  ErrataLedger ledger;
  OverallStatus overall = OverallStatus::Ok;
  std::string diagnostic;
};

/// Runs the full reconciliation and cross-check sweep: pipeline axioms,
/// pipeline vs dense oracle, theorem entries vs pipeline, the lemma-level
/// identities, and the metric cross-identities. Deterministic for a fixed
/// option set; instances are visited in sorted parameter order.
ValidationReport run_validation(const ValidationOptions& opts);

std::string overall_name(OverallStatus s);

/// Complete JSON envelope for the validation command.
std::string validation_envelope_json(const ValidationReport& rep);

}  // namespace ncwheel

#endif
