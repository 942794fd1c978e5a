#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "centropy/dataset.hpp"
#include "centropy/stats.hpp"
#include "centropy/types.hpp"

namespace centropy {

struct SkippedBenchmark {
  std::string benchmark;
  int n = 0;
  std::string reason;
};

struct CorrelationReport {
  std::vector<CorrelationResult> results;  // canonical benchmark order
  std::vector<SkippedBenchmark> skipped;
  std::map<std::string, int> n_per_benchmark;
  std::string source;
  double alpha = kDefaultAlpha;
};

/// Entropy-vs-benchmark correlation for each of the seven benchmarks, with
/// pairwise deletion of missing values. Benchmarks with fewer than three
/// pairs or a constant series are listed as skipped, not errors.
CorrelationReport correlate_all(const BenchmarkTable& table, double alpha = kDefaultAlpha);

/// One published correlation claim shipped alongside the bundled dataset.
struct PublishedClaim {
  std::string_view benchmark;
  double r = 0.0;
  double p = 0.0;
  std::string_view label;
};

/// The published (r, p, label) rows for the bundled ten-system table.
std::span<const PublishedClaim> published_claims();

// Flags attached to consistency rows.
inline constexpr std::string_view kFlagInvalidPublishedP = "INVALID_PUBLISHED_P";
inline constexpr std::string_view kFlagLabelNormalized = "LABEL_NORMALIZED";
inline constexpr std::string_view kFlagNotComputed = "NOT_COMPUTED";

struct ConsistencyRow {
  std::string benchmark;
  double published_r = 0.0;
  double published_p = 0.0;
  std::string published_label;
  std::optional<double> computed_r;  // absent when the benchmark was skipped
  std::optional<double> computed_p;
  std::optional<double> delta_r;  // |computed - published|
  std::optional<double> delta_p;
  std::string normalized_label;  // interpret() applied to the published pair
  std::vector<std::string> flags;
};

struct ConsistencyReport {
  std::vector<ConsistencyRow> rows;
  std::string source;
};

/// Recomputes every correlation from the table and diffs it against the
/// published claims. Neither side is corrected; impossible published values
/// (p outside [0, 1]) and label deviations are flagged instead.
ConsistencyReport consistency_check(const BenchmarkTable& table,
                                    std::span<const PublishedClaim> claims = published_claims());

struct EfficiencyRow {
  std::string system;
  double entropy = 0.0;
  double value = 0.0;
  double ratio = 0.0;  // entropy / value, lower is better
};

struct ExcludedSystem {
  std::string system;
  std::string reason;
};

struct EfficiencyRanking {
  std::string benchmark;
  std::string unit;
  std::vector<EfficiencyRow> rows;  // ascending ratio
  std::vector<ExcludedSystem> excluded;
};

/// Ranks systems by entropy / benchmark-value (most efficient first).
/// Systems missing the benchmark, or with a non-positive value, are excluded
/// with a reason. Throws UnknownBenchmark for names outside the seven.
EfficiencyRanking efficiency_ranking(const BenchmarkTable& table, std::string_view benchmark);

struct SensitivityDirection {
  double score = 0.0;  // perturbed score after clamping to [0, 1]
  bool clamped = false;
  double cluster_value = 0.0;
  double cluster_delta = 0.0;              // vs. the unperturbed cluster entropy
  std::vector<double> machine_deltas;      // per group, same order as the cluster
};

struct SensitivityRow {
  std::string m1;
  std::string m2;
  double base_score = 0.0;
  SensitivityDirection up;
  SensitivityDirection down;
};

struct SensitivityReport {
  std::string cluster;
  double delta = 0.0;
  double base_value = 0.0;  // unperturbed cluster entropy
  PenaltyParams params;
  std::vector<std::string> machines;  // group order, for labeling machine_deltas
  std::vector<SensitivityRow> rows;   // sorted by effect magnitude, largest first
};

/// Perturbs every matrix cell the cluster actually uses by +/- delta (scores
/// clamped to [0, 1]) and reports the resulting entropy changes.
/// Requires 0 < delta < 1.
SensitivityReport sensitivity_sweep(const ClusterSpec& cluster, const CompatibilityMatrix& matrix,
                                    double delta, const PenaltyParams& params = {});

}  // namespace centropy
