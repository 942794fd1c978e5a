#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "centropy/analysis.hpp"
#include "centropy/core.hpp"
#include "centropy/dataset.hpp"
#include "centropy/errors.hpp"
#include "centropy/plot.hpp"
#include "centropy/render.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

int exit_code(centropy::ErrorCategory category) {
  switch (category) {
    case centropy::ErrorCategory::io: return 1;
    case centropy::ErrorCategory::validation: return 2;
    case centropy::ErrorCategory::domain: return 3;
  }
  return 1;
}

centropy::CompatibilityMatrix resolve_matrix(const std::string& path) {
  if (path.empty()) return centropy::bundled_compatibility_matrix();
  return centropy::load_matrix(path);
}

centropy::BenchmarkTable resolve_benchmarks(const std::string& path) {
  if (path.empty()) return centropy::bundled_top10();
  return centropy::load_benchmarks(path);
}

void emit(const json& value, const std::string& text, bool as_json) {
  if (as_json) {
    std::cout << value.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

void write_file(const fs::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw centropy::IoError(fmt::format("cannot write {}", path.string()));
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.flush();
  if (!out) throw centropy::IoError(fmt::format("failed writing {}", path.string()));
}

struct PenaltyFlags {
  std::string log_base = "natural";
  double coefficient = centropy::kDefaultPenaltyCoefficient;

  centropy::PenaltyParams params() const {
    centropy::PenaltyParams p;
    p.coefficient = coefficient;
    p.log_base = log_base == "10" ? centropy::LogBase::base10 : centropy::LogBase::natural;
    return p;
  }
};

void add_penalty_flags(CLI::App* cmd, PenaltyFlags& flags) {
  cmd->add_option("--log-base", flags.log_base, "penalty logarithm base")
      ->check(CLI::IsMember({"natural", "10"}))
      ->capture_default_str();
  cmd->add_option("--coefficient", flags.coefficient, "penalty coefficient")
      ->capture_default_str();
}

int run_machine(const std::string& spec_path, const std::string& matrix_path, bool as_json) {
  const centropy::MachineSpec machine = centropy::load_machine_spec(spec_path);
  const centropy::CompatibilityMatrix matrix = resolve_matrix(matrix_path);
  const centropy::MachineEntropy entropy = centropy::machine_entropy(machine, matrix);
  emit(centropy::to_json(entropy), centropy::render_text(entropy), as_json);
  return 0;
}

int run_cluster(const std::string& spec_path, const std::string& matrix_path,
                const PenaltyFlags& flags, bool as_json) {
  const centropy::ClusterSpec cluster = centropy::load_cluster_spec(spec_path);
  const centropy::CompatibilityMatrix matrix = resolve_matrix(matrix_path);
  const centropy::PenaltyParams params = flags.params();
  const centropy::ClusterEntropy entropy = centropy::cluster_entropy(cluster, matrix, params);
  emit(centropy::to_json(entropy, params), centropy::render_text(entropy, params), as_json);
  return 0;
}

int run_correlate(const std::string& benchmarks_path, double alpha, bool as_json) {
  const centropy::BenchmarkTable table = resolve_benchmarks(benchmarks_path);
  const centropy::CorrelationReport report = centropy::correlate_all(table, alpha);
  emit(centropy::to_json(report), centropy::render_text(report), as_json);
  return 0;
}

int run_sensitivity(const std::string& spec_path, const std::string& matrix_path, double delta,
                    const PenaltyFlags& flags, bool as_json) {
  const centropy::ClusterSpec cluster = centropy::load_cluster_spec(spec_path);
  const centropy::CompatibilityMatrix matrix = resolve_matrix(matrix_path);
  const centropy::SensitivityReport report =
      centropy::sensitivity_sweep(cluster, matrix, delta, flags.params());
  emit(centropy::to_json(report), centropy::render_text(report), as_json);
  return 0;
}

int run_plot(const std::string& benchmarks_path, const std::string& benchmark, bool all,
             const std::string& format, std::string out_path, bool as_json) {
  const centropy::BenchmarkTable table = resolve_benchmarks(benchmarks_path);
  const bool svg = format == "svg";

  std::string content;
  std::string label;
  if (all) {
    if (!benchmark.empty())
      throw centropy::ValidationError("--all and --benchmark are mutually exclusive");
    if (!svg) throw centropy::ValidationError("--all produces a panel grid, SVG only");
    content = centropy::scatter_grid_svg(table);
    label = "all";
  } else {
    if (benchmark.empty())
      throw centropy::ValidationError("either --benchmark or --all is required");
    content = svg ? centropy::scatter_svg(table, benchmark)
                  : centropy::scatter_csv(table, benchmark);
    label = std::string(*centropy::canonical_benchmark(benchmark));
  }
  if (out_path.empty()) out_path = fmt::format("entropy_vs_{}.{}", label, svg ? "svg" : "csv");
  write_file(out_path, content);

  const json summary = {{"benchmark", label},
                        {"format", format},
                        {"out", out_path},
                        {"systems", table.records.size()}};
  emit(summary, fmt::format("wrote {}\n", out_path), as_json);
  return 0;
}

int run_reproduce(const std::string& out_dir, bool as_json) {
  const centropy::BenchmarkTable table = centropy::bundled_top10();

  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec)
    throw centropy::IoError(fmt::format("cannot create directory {}: {}", out_dir, ec.message()));
  const fs::path out(out_dir);

  const centropy::CorrelationReport correlations = centropy::correlate_all(table);
  const centropy::ConsistencyReport consistency = centropy::consistency_check(table);

  std::string summary;
  summary += centropy::render_text(correlations);
  summary += "\n";
  summary += centropy::render_text(consistency);

  json efficiency_json = json::array();
  std::vector<std::string> files;
  write_file(out / "correlations.json", centropy::to_json(correlations).dump(2) + "\n");
  files.push_back("correlations.json");
  write_file(out / "consistency.json", centropy::to_json(consistency).dump(2) + "\n");
  files.push_back("consistency.json");

  for (const centropy::BenchmarkInfo& info : centropy::kBenchmarks) {
    const centropy::EfficiencyRanking ranking = centropy::efficiency_ranking(table, info.name);
    efficiency_json.push_back(centropy::to_json(ranking));
    summary += "\n";
    summary += centropy::render_text(ranking);

    const std::string plot_name = fmt::format("entropy_vs_{}.svg", info.name);
    write_file(out / plot_name, centropy::scatter_svg(table, info.name));
    files.push_back(plot_name);
  }
  write_file(out / "efficiency.json", json{{"rankings", efficiency_json}}.dump(2) + "\n");
  files.push_back("efficiency.json");
  write_file(out / "summary.txt", summary);
  files.push_back("summary.txt");

  std::sort(files.begin(), files.end());
  const json manifest = {{"out", out_dir}, {"files", files}};
  std::string text = fmt::format("wrote {} files to {}\n", files.size(), out_dir);
  for (const std::string& file : files) {
    text += fmt::format("  {}\n", file);
  }
  emit(manifest, text, as_json);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantifies component-incompatibility entropy of parallel clusters and "
               "correlates it against benchmark results"};
  app.require_subcommand(1);

  std::string matrix_path;
  bool as_json = false;
  app.add_option("--matrix", matrix_path,
                 "compatibility matrix file (CSV or JSON); default: bundled matrix")
      ->envname("CLUSTER_ENTROPY_MATRIX");
  app.add_flag("--json", as_json, "machine-readable JSON output");

  auto* machine_cmd =
      app.add_subcommand("machine", "entropy of a single machine from a machine spec file");
  std::string machine_spec;
  machine_cmd->add_option("spec", machine_spec, "machine spec JSON file")->required();

  auto* cluster_cmd =
      app.add_subcommand("cluster", "entropy of a cluster from a cluster spec file");
  std::string cluster_spec;
  PenaltyFlags cluster_flags;
  cluster_cmd->add_option("spec", cluster_spec, "cluster spec JSON file")->required();
  add_penalty_flags(cluster_cmd, cluster_flags);

  auto* correlate_cmd =
      app.add_subcommand("correlate", "entropy vs. benchmark correlations for a table");
  std::string correlate_path;
  double alpha = centropy::kDefaultAlpha;
  correlate_cmd->add_option("benchmarks", correlate_path,
                            "benchmark table (CSV or JSON); default: bundled ten-system table");
  correlate_cmd->add_option("--alpha", alpha, "significance level")->capture_default_str();

  auto* reproduce_cmd = app.add_subcommand(
      "reproduce", "full audit bundle: reports, consistency audit and plots for the bundled data");
  std::string out_dir = "reproduction";
  reproduce_cmd->add_option("--out", out_dir, "output directory")->capture_default_str();

  auto* plot_cmd = app.add_subcommand("plot", "scatter plot of entropy vs. one benchmark");
  std::string plot_path;
  std::string plot_benchmark;
  std::string plot_format = "svg";
  std::string plot_out;
  bool plot_all = false;
  plot_cmd->add_option("benchmarks", plot_path,
                       "benchmark table (CSV or JSON); default: bundled ten-system table");
  plot_cmd->add_option("--benchmark", plot_benchmark, "benchmark to plot");
  plot_cmd->add_flag("--all", plot_all, "one SVG with a panel grid of all benchmarks");
  plot_cmd->add_option("--format", plot_format, "output format")
      ->check(CLI::IsMember({"svg", "csv"}))
      ->capture_default_str();
  plot_cmd->add_option("--out", plot_out, "output file; default: entropy_vs_<benchmark>.<ext>");

  auto* sensitivity_cmd = app.add_subcommand(
      "sensitivity", "perturb matrix cells used by a cluster and report entropy changes");
  std::string sensitivity_spec;
  double delta = 0.05;
  PenaltyFlags sensitivity_flags;
  sensitivity_cmd->add_option("spec", sensitivity_spec, "cluster spec JSON file")->required();
  sensitivity_cmd->add_option("--delta", delta, "perturbation step")->capture_default_str();
  add_penalty_flags(sensitivity_cmd, sensitivity_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (machine_cmd->parsed()) return run_machine(machine_spec, matrix_path, as_json);
    if (cluster_cmd->parsed())
      return run_cluster(cluster_spec, matrix_path, cluster_flags, as_json);
    if (correlate_cmd->parsed()) return run_correlate(correlate_path, alpha, as_json);
    if (reproduce_cmd->parsed()) return run_reproduce(out_dir, as_json);
    if (plot_cmd->parsed())
      return run_plot(plot_path, plot_benchmark, plot_all, plot_format, plot_out, as_json);
    if (sensitivity_cmd->parsed())
      return run_sensitivity(sensitivity_spec, matrix_path, delta, sensitivity_flags, as_json);
  } catch (const centropy::Error& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return exit_code(e.category());
  } catch (const std::exception& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return 1;
  }
  return 0;
}
