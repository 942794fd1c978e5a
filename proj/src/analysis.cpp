#include "centropy/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <fmt/format.h>

#include "centropy/core.hpp"
#include "centropy/errors.hpp"

namespace centropy {

CorrelationReport correlate_all(const BenchmarkTable& table, double alpha) {
  CorrelationReport report;
  report.source = table.source;
  report.alpha = alpha;
  for (const BenchmarkInfo& info : kBenchmarks) {
    const std::string benchmark(info.name);
    SampleSeries entropy{"Entropy", {}};
    SampleSeries values{benchmark, {}};
    for (const SystemRecord& record : table.records) {
      const auto it = record.benchmarks.find(benchmark);
      if (it == record.benchmarks.end()) continue;  // pairwise deletion
      entropy.values.push_back(record.entropy);
      values.values.push_back(it->second);
    }
    const int n = static_cast<int>(entropy.values.size());
    report.n_per_benchmark[benchmark] = n;
    try {
      report.results.push_back(correlation_result(benchmark, entropy, values, alpha));
    } catch (const InsufficientData& e) {
      report.skipped.push_back({benchmark, n, e.what()});
    } catch (const DegenerateSeries& e) {
      report.skipped.push_back({benchmark, n, e.what()});
    }
  }
  return report;
}

std::span<const PublishedClaim> published_claims() {
  static const PublishedClaim claims[] = {
      {"LINPACK", -0.7832, 0.0077, "Strong negative correlation"},
      {"STREAM", -0.4521, 10.1890, "Moderate negative, not significant"},
      {"MLPerf", -0.6234, 0.0540, "Moderate negative correlation"},
      {"HPCG", 0.2145, 0.5520, "Weak positive, not significant"},
      {"HPCC", -0.5890, 0.0730, "Moderate negative correlation"},
      {"Graph500", -0.3410, 0.3350, "Weak negative, not significant"},
      {"HPCAI", -0.4890, 0.1510, "Moderate negative, not significant"},
  };
  return claims;
}

ConsistencyReport consistency_check(const BenchmarkTable& table,
                                    std::span<const PublishedClaim> claims) {
  const CorrelationReport computed = correlate_all(table);

  ConsistencyReport report;
  report.source = table.source;
  for (const PublishedClaim& claim : claims) {
    ConsistencyRow row;
    row.benchmark = std::string(claim.benchmark);
    row.published_r = claim.r;
    row.published_p = claim.p;
    row.published_label = std::string(claim.label);
    row.normalized_label = interpret(claim.r, claim.p);

    if (!(claim.p >= 0.0 && claim.p <= 1.0))
      row.flags.emplace_back(kFlagInvalidPublishedP);
    if (row.normalized_label != row.published_label)
      row.flags.emplace_back(kFlagLabelNormalized);

    const auto it = std::find_if(computed.results.begin(), computed.results.end(),
                                 [&](const CorrelationResult& result) {
                                   return result.benchmark == row.benchmark;
                                 });
    if (it == computed.results.end()) {
      row.flags.emplace_back(kFlagNotComputed);
    } else {
      row.computed_r = it->r;
      row.computed_p = it->p_value;
      row.delta_r = std::fabs(it->r - claim.r);
      row.delta_p = std::fabs(it->p_value - claim.p);
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

EfficiencyRanking efficiency_ranking(const BenchmarkTable& table, std::string_view benchmark) {
  const auto canonical = canonical_benchmark(benchmark);
  if (!canonical) throw UnknownBenchmark(fmt::format("unknown benchmark \"{}\"", benchmark));

  EfficiencyRanking ranking;
  ranking.benchmark = std::string(*canonical);
  ranking.unit = std::string(benchmark_unit(*canonical));
  for (const SystemRecord& record : table.records) {
    const auto it = record.benchmarks.find(ranking.benchmark);
    if (it == record.benchmarks.end()) {
      ranking.excluded.push_back(
          {record.name, fmt::format("no {} value", ranking.benchmark)});
    } else if (!(it->second > 0.0)) {
      ranking.excluded.push_back(
          {record.name,
           fmt::format("{} value {} is not positive, ratio undefined", ranking.benchmark,
                       it->second)});
    } else {
      ranking.rows.push_back(
          {record.name, record.entropy, it->second, record.entropy / it->second});
    }
  }
  std::stable_sort(ranking.rows.begin(), ranking.rows.end(),
                   [](const EfficiencyRow& a, const EfficiencyRow& b) { return a.ratio < b.ratio; });
  return ranking;
}

SensitivityReport sensitivity_sweep(const ClusterSpec& cluster, const CompatibilityMatrix& matrix,
                                    double delta, const PenaltyParams& params) {
  if (!(delta > 0.0 && delta < 1.0))
    throw ValidationError(fmt::format("perturbation delta must be in (0, 1), got {}", delta));
  validate(cluster);

  SensitivityReport report;
  report.cluster = cluster.name;
  report.delta = delta;
  report.params = params;

  const ClusterEntropy baseline = cluster_entropy(cluster, matrix, params);
  report.base_value = baseline.value;
  for (const MachineGroup& group : cluster.groups) {
    report.machines.push_back(group.machine.name);
  }

  // Every matrix cell touched by some edge of some machine.
  std::set<std::pair<std::size_t, std::size_t>> cells;
  for (const MachineGroup& group : cluster.groups) {
    for (const ComponentPair& edge : build_component_graph(group.machine)) {
      const auto i = matrix.find(edge.first.manufacturer);
      const auto j = matrix.find(edge.second.manufacturer);
      if (!i || !j)
        throw UnknownManufacturer(
            fmt::format("manufacturer \"{}\" not in compatibility matrix",
                        !i ? edge.first.manufacturer : edge.second.manufacturer));
      cells.insert({std::min(*i, *j), std::max(*i, *j)});
    }
  }

  auto probe = [&](std::size_t i, std::size_t j, double target) {
    SensitivityDirection direction;
    direction.score = std::clamp(target, 0.0, 1.0);
    direction.clamped = direction.score != target;
    const CompatibilityMatrix perturbed = matrix.with_score(i, j, direction.score);
    const ClusterEntropy entropy = cluster_entropy(cluster, perturbed, params);
    direction.cluster_value = entropy.value;
    direction.cluster_delta = entropy.value - baseline.value;
    for (std::size_t g = 0; g < entropy.per_machine.size(); ++g) {
      direction.machine_deltas.push_back(entropy.per_machine[g].entropy -
                                         baseline.per_machine[g].entropy);
    }
    return direction;
  };

  for (const auto& [i, j] : cells) {
    SensitivityRow row;
    row.m1 = matrix.manufacturers()[i];
    row.m2 = matrix.manufacturers()[j];
    row.base_score = matrix.score_at(i, j);
    row.up = probe(i, j, row.base_score + delta);
    row.down = probe(i, j, row.base_score - delta);
    report.rows.push_back(std::move(row));
  }

  std::stable_sort(report.rows.begin(), report.rows.end(),
                   [](const SensitivityRow& a, const SensitivityRow& b) {
                     const double ma = std::max(std::fabs(a.up.cluster_delta),
                                                std::fabs(a.down.cluster_delta));
                     const double mb = std::max(std::fabs(b.up.cluster_delta),
                                                std::fabs(b.down.cluster_delta));
                     return ma > mb;
                   });
  return report;
}

}  // namespace centropy
