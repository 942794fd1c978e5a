#include "centropy/render.hpp"

#include <algorithm>
#include <vector>

#include <fmt/format.h>

namespace centropy {

using nlohmann::json;

namespace {

std::string fixed4(double value) { return fmt::format("{:.4f}", value); }

std::string fixed4(const std::optional<double>& value) {
  return value ? fixed4(*value) : "n/a";
}

json to_json(const std::optional<double>& value) {
  return value ? json(*value) : json(nullptr);
}

std::string_view log_base_name(LogBase base) {
  return base == LogBase::natural ? "natural" : "base10";
}

std::string penalty_formula(const PenaltyParams& params) {
  return fmt::format("P(x) = {:g} * {}(1 + x)", params.coefficient,
                     params.log_base == LogBase::natural ? "ln" : "log10");
}

std::string edge_label(const ComponentPair& edge) {
  return fmt::format("{}:{} -- {}:{}", to_string(edge.first.kind), edge.first.manufacturer,
                     to_string(edge.second.kind), edge.second.manufacturer);
}

// Column-aligned plain-text table; 'l'/'r' per column.
class TextTable {
 public:
  explicit TextTable(std::string alignments) : alignments_(std::move(alignments)) {}

  void row(std::vector<std::string> cells) { rows_.push_back(std::move(cells)); }

  std::string str(std::string_view indent = "") const {
    std::vector<std::size_t> widths;
    for (const auto& cells : rows_) {
      widths.resize(std::max(widths.size(), cells.size()), 0);
      for (std::size_t i = 0; i < cells.size(); ++i) {
        widths[i] = std::max(widths[i], cells[i].size());
      }
    }
    std::string out;
    for (const auto& cells : rows_) {
      std::string line(indent);
      for (std::size_t i = 0; i < cells.size(); ++i) {
        const bool right = i < alignments_.size() && alignments_[i] == 'r';
        const bool last = i + 1 == cells.size();
        if (right) {
          line += fmt::format("{:>{}}", cells[i], widths[i]);
        } else if (last) {
          line += cells[i];
        } else {
          line += fmt::format("{:<{}}", cells[i], widths[i]);
        }
        if (!last) line += "  ";
      }
      while (!line.empty() && line.back() == ' ') line.pop_back();
      out += line;
      out.push_back('\n');
    }
    return out;
  }

 private:
  std::string alignments_;
  std::vector<std::vector<std::string>> rows_;
};

json edge_to_json(const EdgeValue& edge) {
  return {{"first", to_json(edge.edge.first)},
          {"second", to_json(edge.edge.second)},
          {"interaction", edge.interaction}};
}

}  // namespace

json to_json(const ComponentSpec& component) {
  return {{"kind", to_string(component.kind)},
          {"manufacturer", component.manufacturer},
          {"base_value", component.base_value}};
}

json to_json(const MachineEntropy& entropy) {
  json edges = json::array();
  for (const EdgeValue& edge : entropy.edge_values) {
    edges.push_back(edge_to_json(edge));
  }
  return {{"machine", entropy.machine},
          {"value", entropy.value},
          {"argmax_edge", edge_to_json({entropy.argmax_edge, entropy.value})},
          {"edges", edges}};
}

json to_json(const ClusterEntropy& entropy, const PenaltyParams& params) {
  json machines = json::array();
  for (const MachineContribution& contribution : entropy.per_machine) {
    machines.push_back({{"machine", contribution.machine},
                        {"count", contribution.count},
                        {"entropy", contribution.entropy},
                        {"penalty", contribution.penalty},
                        {"contribution", static_cast<double>(contribution.count) *
                                             contribution.penalty}});
  }
  return {{"cluster", entropy.cluster},
          {"value", entropy.value},
          {"penalty",
           {{"coefficient", params.coefficient}, {"log_base", log_base_name(params.log_base)}}},
          {"per_machine", machines}};
}

json to_json(const CorrelationReport& report) {
  json results = json::array();
  for (const CorrelationResult& result : report.results) {
    results.push_back({{"benchmark", result.benchmark},
                       {"n", result.n},
                       {"r", result.r},
                       {"t_statistic", to_json(result.t_statistic)},
                       {"p_value", result.p_value},
                       {"label", result.label}});
  }
  json skipped = json::array();
  for (const SkippedBenchmark& skip : report.skipped) {
    skipped.push_back({{"benchmark", skip.benchmark}, {"n", skip.n}, {"reason", skip.reason}});
  }
  return {{"source", report.source},
          {"alpha", report.alpha},
          {"results", results},
          {"skipped", skipped},
          {"n_per_benchmark", report.n_per_benchmark}};
}

json to_json(const ConsistencyReport& report) {
  json rows = json::array();
  for (const ConsistencyRow& row : report.rows) {
    rows.push_back({{"benchmark", row.benchmark},
                    {"published", {{"r", row.published_r},
                                   {"p", row.published_p},
                                   {"label", row.published_label}}},
                    {"computed", {{"r", to_json(row.computed_r)}, {"p", to_json(row.computed_p)}}},
                    {"delta_r", to_json(row.delta_r)},
                    {"delta_p", to_json(row.delta_p)},
                    {"normalized_label", row.normalized_label},
                    {"flags", row.flags}});
  }
  return {{"source", report.source}, {"rows", rows}};
}

json to_json(const EfficiencyRanking& ranking) {
  json rows = json::array();
  for (const EfficiencyRow& row : ranking.rows) {
    rows.push_back({{"system", row.system},
                    {"entropy", row.entropy},
                    {"value", row.value},
                    {"ratio", row.ratio}});
  }
  json excluded = json::array();
  for (const ExcludedSystem& skip : ranking.excluded) {
    excluded.push_back({{"system", skip.system}, {"reason", skip.reason}});
  }
  return {{"benchmark", ranking.benchmark},
          {"unit", ranking.unit},
          {"rows", rows},
          {"excluded", excluded}};
}

json to_json(const SensitivityReport& report) {
  auto direction_json = [](const SensitivityDirection& direction) {
    return json{{"score", direction.score},
                {"clamped", direction.clamped},
                {"cluster_value", direction.cluster_value},
                {"cluster_delta", direction.cluster_delta},
                {"machine_deltas", direction.machine_deltas}};
  };
  json cells = json::array();
  for (const SensitivityRow& row : report.rows) {
    cells.push_back({{"m1", row.m1},
                     {"m2", row.m2},
                     {"base_score", row.base_score},
                     {"up", direction_json(row.up)},
                     {"down", direction_json(row.down)}});
  }
  return {{"cluster", report.cluster},
          {"delta", report.delta},
          {"base_value", report.base_value},
          {"penalty", {{"coefficient", report.params.coefficient},
                       {"log_base", log_base_name(report.params.log_base)}}},
          {"machines", report.machines},
          {"cells", cells}};
}

std::string render_text(const MachineEntropy& entropy) {
  std::string out;
  out += fmt::format("Machine: {}\n", entropy.machine);
  out += fmt::format("Machine entropy: {}\n", fixed4(entropy.value));
  out += fmt::format("Bottleneck edge: {}\n", edge_label(entropy.argmax_edge));
  out += fmt::format("Edges ({}):\n", entropy.edge_values.size());
  TextTable table("lr");
  for (const EdgeValue& edge : entropy.edge_values) {
    table.row({edge_label(edge.edge), fixed4(edge.interaction)});
  }
  out += table.str("  ");
  return out;
}

std::string render_text(const ClusterEntropy& entropy, const PenaltyParams& params) {
  std::string out;
  out += fmt::format("Cluster: {}\n", entropy.cluster);
  out += fmt::format("Cluster entropy: {}\n", fixed4(entropy.value));
  out += fmt::format("Penalty: {}\n", penalty_formula(params));
  out += "Machines:\n";
  TextTable table("rrrrl");
  table.row({"count", "entropy", "penalty", "contribution", "machine"});
  for (const MachineContribution& contribution : entropy.per_machine) {
    table.row({fmt::format("{}", contribution.count), fixed4(contribution.entropy),
               fixed4(contribution.penalty),
               fixed4(static_cast<double>(contribution.count) * contribution.penalty),
               contribution.machine});
  }
  out += table.str("  ");
  return out;
}

std::string render_text(const CorrelationReport& report) {
  std::string out;
  out += fmt::format("Correlations: entropy vs. benchmarks  (source: {}, alpha = {:g})\n\n",
                     report.source, report.alpha);
  TextTable table("lrrrrl");
  table.row({"Benchmark", "n", "r", "t", "p-value", "Interpretation"});
  for (const CorrelationResult& result : report.results) {
    table.row({result.benchmark, fmt::format("{}", result.n), fixed4(result.r),
               fixed4(result.t_statistic), fixed4(result.p_value), result.label});
  }
  out += table.str();
  if (!report.skipped.empty()) {
    out += "\nSkipped:\n";
    for (const SkippedBenchmark& skip : report.skipped) {
      out += fmt::format("  {}: {}\n", skip.benchmark, skip.reason);
    }
  }
  return out;
}

std::string render_text(const ConsistencyReport& report) {
  std::string out;
  out += fmt::format("Consistency audit: computed vs. published  (source: {})\n\n", report.source);
  TextTable table("lrrrrrrl");
  table.row({"Benchmark", "published r", "computed r", "delta r", "published p", "computed p",
             "delta p", "flags"});
  for (const ConsistencyRow& row : report.rows) {
    std::string flags;
    for (const std::string& flag : row.flags) {
      if (!flags.empty()) flags += ",";
      flags += flag;
    }
    if (flags.empty()) flags = "-";
    table.row({row.benchmark, fixed4(row.published_r), fixed4(row.computed_r),
               fixed4(row.delta_r), fixed4(row.published_p), fixed4(row.computed_p),
               fixed4(row.delta_p), flags});
  }
  out += table.str();
  out += "\nLabels (published vs. strict alpha rule):\n";
  TextTable labels("lll");
  labels.row({"Benchmark", "published", "normalized"});
  for (const ConsistencyRow& row : report.rows) {
    labels.row({row.benchmark, row.published_label, row.normalized_label});
  }
  out += labels.str("  ");
  return out;
}

std::string render_text(const EfficiencyRanking& ranking) {
  std::string out;
  out += fmt::format("Efficiency ranking: {} ({}); ratio = entropy / value, lower is better\n\n",
                     ranking.benchmark, ranking.unit);
  TextTable table("rlrrr");
  table.row({"rank", "system", "entropy", "value", "ratio"});
  for (std::size_t i = 0; i < ranking.rows.size(); ++i) {
    const EfficiencyRow& row = ranking.rows[i];
    table.row({fmt::format("{}", i + 1), row.system, fixed4(row.entropy), fixed4(row.value),
               fixed4(row.ratio)});
  }
  out += table.str();
  if (!ranking.excluded.empty()) {
    out += "\nExcluded:\n";
    for (const ExcludedSystem& skip : ranking.excluded) {
      out += fmt::format("  {}: {}\n", skip.system, skip.reason);
    }
  }
  return out;
}

std::string render_text(const SensitivityReport& report) {
  std::string out;
  out += fmt::format(
      "Sensitivity sweep: cluster \"{}\", delta = {:g}, base entropy = {}\n", report.cluster,
      report.delta, fixed4(report.base_value));
  out += fmt::format("Penalty: {}\n\n", penalty_formula(report.params));
  TextTable table("llrrrrr");
  table.row({"M1", "M2", "score", "down", "delta", "up", "delta"});
  for (const SensitivityRow& row : report.rows) {
    auto score_cell = [](const SensitivityDirection& direction) {
      return fmt::format("{}{}", fixed4(direction.score), direction.clamped ? "*" : "");
    };
    table.row({row.m1, row.m2, fixed4(row.base_score), score_cell(row.down),
               fixed4(row.down.cluster_delta), score_cell(row.up),
               fixed4(row.up.cluster_delta)});
  }
  out += table.str();
  out += "(*) score clamped to [0, 1]\n";
  return out;
}

}  // namespace centropy
