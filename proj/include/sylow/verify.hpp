#pragma once

// Main terms of the counting functions and their comparison with exact
// census counts across a grid of limits.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sylow/arith.hpp"
#include "sylow/partition.hpp"
#include "sylow/precision.hpp"

namespace sylow {

/// K x (log log x)^{l(alpha)} / (log x)^{1/(q-1)} with K = B_q C(alpha) E_q(alpha).  x >= 16.
double predicted_D(u64 q, const Partition& alpha, double x, double bq);
/// C(alpha) B_q / q^{sum alpha} x (log log x)^{l(alpha)} / (log x)^{1/(q-1)}.  x >= 16.
double predicted_D0(u64 q, const Partition& alpha, double x, double bq);
/// A x / (log x)^{1 - xi}.  x > 1.
double predicted_mnc(double x, double a, double xi);

struct Target {
  enum class Kind { D, D0, Mnc };
  Kind kind = Kind::D;
  u64 q = 0;
  Partition alpha;

  /// "d:3:[1]", "d0:5:[]", "mnc".
  std::string label() const;
  friend bool operator==(const Target&, const Target&) = default;
};

/// Parses one label as produced by Target::label().  Throws std::invalid_argument.
Target parse_target(std::string_view text);
/// Comma-separated list; commas inside [...] belong to the partition.
std::vector<Target> parse_targets(std::string_view text);

struct ComparisonRow {
  Target target;
  u64 x = 0;
  u64 empirical = 0;
  double predicted = 0.0;
  double ratio = 0.0;
};

struct Verdict {
  Target target;
  bool pass = false;
  bool within_band = false;
  bool nonincreasing = false;
  double final_ratio = 0.0;
  double final_deviation = 0.0;
};

inline constexpr double kDefaultBand = 0.4;

/// PASS iff |ratio-1| at the largest x is below band and |ratio-1| is
/// nonincreasing over the last three x (over all x when fewer are given).
/// rows must be sorted by x and belong to one target.
Verdict judge(const std::vector<ComparisonRow>& rows, double band);

struct VerifyOptions {
  std::vector<Target> targets;
  std::vector<u64> xs;  ///< strictly increasing
  double band = kDefaultBand;
  u64 bq_cutoff = 10'000'000;
  u64 a_cutoff = 100'000'000;
  u64 segment_size = u64{1} << 22;
  int threads = 0;
};

struct ConstantRecord {
  std::string name;
  std::optional<u64> q;
  std::optional<Partition> alpha;
  PrecisionValue value;
  u64 cutoff = 0;
  std::optional<std::string> exact;  ///< exact rational form when one exists
};

struct VerifyReport {
  std::vector<ComparisonRow> rows;
  std::vector<Verdict> verdicts;
  std::vector<ConstantRecord> constants;
  double band = kDefaultBand;
  std::vector<u64> xs;
  bool all_pass() const;
};

/// Builds the comparison rows from rows grouped by target, then judges each.
VerifyReport convergence_report(const std::vector<std::vector<ComparisonRow>>& per_target, double band);

/// Runs the censuses and constant evaluations the targets need, then reports.
VerifyReport run_verification(const VerifyOptions& options);

/// "target,q,alpha,x,empirical,predicted,ratio" rows.
std::string to_csv(const VerifyReport& report);
std::string summary_json(const VerifyReport& report);

/// Decimal rendering with 15 significant digits used by every output file.
std::string format_real(double v);

/// Parses "1e8", "100000", "10^6" into an exact integer.  Throws std::invalid_argument.
u64 parse_count(std::string_view text);
/// "1e4..1e8" (decades), or a comma list of counts.
std::vector<u64> parse_grid(std::string_view text);

}  // namespace sylow
