#pragma once

#include <array>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "centropy/types.hpp"

namespace centropy {

struct BenchmarkInfo {
  std::string_view name;
  std::string_view unit;
};

/// The seven benchmarks, in canonical report order.
inline constexpr std::array<BenchmarkInfo, 7> kBenchmarks = {{
    {"LINPACK", "EFlop/s"},
    {"STREAM", "TB/s"},
    {"MLPerf", "EFlop/s"},
    {"HPCG", "PFlop/s"},
    {"HPCC", "GFlop/s"},
    {"Graph500", "GTEPS"},
    {"HPCAI", "score"},
}};

/// Canonical benchmark name for any case variant; nullopt if unknown.
std::optional<std::string_view> canonical_benchmark(std::string_view name);

/// Unit string for a canonical benchmark name ("" if unknown).
std::string_view benchmark_unit(std::string_view canonical_name);

/// Trims whitespace and resolves accepted aliases ("HPE-Cray" -> "HPE/Cray").
std::string canonical_manufacturer(std::string_view name);

struct SystemRecord {
  std::string name;
  double entropy = 0.0;
  std::map<std::string, double> benchmarks;  // canonical benchmark name -> value

  bool operator==(const SystemRecord&) const = default;
};

struct BenchmarkTable {
  std::vector<SystemRecord> records;
  std::string source;  // "bundled:top10" or a file path

  bool operator==(const BenchmarkTable&) const = default;
};

/// The built-in 6x6 manufacturer compatibility matrix
/// ({AMD, Intel, NVIDIA, IBM, Fujitsu, HPE/Cray}).
CompatibilityMatrix bundled_compatibility_matrix();

/// The built-in ten-system table: per-system entropy plus all seven
/// benchmark values. Entropies ship as published data and are not recomputed.
BenchmarkTable bundled_top10();

// -- parsing / formatting (text level, used by the file loaders) -----------

MachineSpec parse_machine_spec(const std::string& text, std::string_view source);
ClusterSpec parse_cluster_spec(const std::string& text, std::string_view source);
CompatibilityMatrix parse_matrix_csv(const std::string& text, std::string_view source);
CompatibilityMatrix parse_matrix_json(const std::string& text, std::string_view source);
BenchmarkTable parse_benchmarks_csv(const std::string& text, std::string_view source);
BenchmarkTable parse_benchmarks_json(const std::string& text, std::string_view source);

std::string cluster_spec_to_json(const ClusterSpec& cluster);
std::string matrix_to_csv(const CompatibilityMatrix& matrix);
std::string matrix_to_json(const CompatibilityMatrix& matrix);
std::string benchmarks_to_csv(const BenchmarkTable& table);

// -- file loaders / savers ---------------------------------------------------

MachineSpec load_machine_spec(const std::filesystem::path& path);
ClusterSpec load_cluster_spec(const std::filesystem::path& path);

/// CSV or JSON, decided by extension (falls back to sniffing the first byte).
CompatibilityMatrix load_matrix(const std::filesystem::path& path);
BenchmarkTable load_benchmarks(const std::filesystem::path& path);

void save_cluster_spec(const ClusterSpec& cluster, const std::filesystem::path& path);
void save_matrix_csv(const CompatibilityMatrix& matrix, const std::filesystem::path& path);
void save_matrix_json(const CompatibilityMatrix& matrix, const std::filesystem::path& path);
void save_benchmarks_csv(const BenchmarkTable& table, const std::filesystem::path& path);

}  // namespace centropy
