#pragma once

#include <string>
#include <string_view>

#include "centropy/dataset.hpp"

namespace centropy {

/// Self-contained SVG scatter of entropy vs. one benchmark: labeled points,
/// a least-squares line, and the sample correlation in the title. Systems
/// missing the benchmark are left out. Output is byte-deterministic.
/// Throws UnknownBenchmark, or InsufficientData when no system has a value.
std::string scatter_svg(const BenchmarkTable& table, std::string_view benchmark);

/// One SVG with a panel grid covering every benchmark the table has data for.
std::string scatter_grid_svg(const BenchmarkTable& table);

/// CSV variant: header "System,Entropy,<Benchmark>" plus one row per system
/// that has the benchmark. Loadable again via the benchmark-table reader.
std::string scatter_csv(const BenchmarkTable& table, std::string_view benchmark);

}  // namespace centropy
