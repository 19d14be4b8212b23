#ifndef NCWHEEL_ERRATA_HPP
#define NCWHEEL_ERRATA_HPP

#include <string>
#include <utility>
#include <vector>

#include "wheel.hpp"

namespace ncwheel {

enum class FormulaStatus { VerifiedAsPrinted, Reconstructed, Unresolved };

std::string status_name(FormulaStatus s);

/// One reconciled formula: what the source prints, what reading (if any)
/// matches the trusted pipeline, and how far the accepted reading stays from
/// it over the sweep.
struct ErrataRecord {
  std::string formula_id;
  std::string paper_location;
  std::string printed_fragment;
  std::string reconstruction;
  FormulaStatus status = FormulaStatus::Unresolved;
  double max_abs_deviation = 0.0;
  int sweep_size = 0;
};

struct ErrataLedger {
  std::vector<ErrataRecord> records;

  const ErrataRecord* find(const std::string& formula_id) const;
  bool has_unresolved() const;
};

/// Parameter grid the reconciliation (and validation) runs over.
struct SweepSpec {
  int m_lo = 2;
  int m_hi = 6;
  int d_lo = 1;
  int d_hi = 5;
  std::vector<std::pair<double, double>> conductances{{1.0, 1.0}, {2.0, 0.5}, {0.3, 1.7}};

  std::vector<WheelParams> instances() const;
};

/// Candidate readings must match the pipeline to this max-abs tolerance over
/// the whole sweep before they are accepted; single-point agreement is not
/// enough (several wrong operators coincide at symmetric parameter choices).
inline constexpr double kReconstructionTol = 1e-8;

/// Runs every candidate reading of the tracked formulas against the pipeline
/// over a sweep and freezes the outcome into a ledger. In strict-operators
/// mode only {+, -} insertions at fused term boundaries are candidates;
/// symbol and term corrections stay at their printed readings, so formulas
/// needing them come out unresolved.
class ErrataReconciler {
 public:
  void run(const SweepSpec& sweep, bool strict_operators = false);
  bool has_run() const { return ran_; }
  /// ErrorKind::Precondition until run() has executed.
  const ErrataLedger& report() const;

 private:
  bool ran_ = false;
  ErrataLedger ledger_;
};

}  // namespace ncwheel

#endif
