// Seeded random generators for the property suites.
#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "centropy/types.hpp"

namespace generators {

class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0x5eedULL) : engine_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }

  // Uniform on a decimal grid; grid values are far enough apart that strict
  // inequalities survive floating-point rounding.
  double grid(double lo, double hi, double step) {
    const auto n = static_cast<std::int64_t>((hi - lo) / step);
    return lo + step * static_cast<double>(integer(0, n));
  }

  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine_);
  }

  bool flip() { return integer(0, 1) == 1; }

  template <typename T>
  const T& pick(const std::vector<T>& items) {
    return items[static_cast<std::size_t>(integer(0, static_cast<std::int64_t>(items.size()) - 1))];
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

// Random symmetric matrix over the given number of manufacturers, with
// scores drawn from a 1e-4 grid in [0, 1].
inline centropy::CompatibilityMatrix random_matrix(Rng& rng, std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back("M" + std::to_string(i));
  }
  std::vector<std::vector<double>> scores(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const double value = rng.grid(0.0, 1.0, 1e-4);
      scores[i][j] = value;
      scores[j][i] = value;
    }
  }
  return centropy::CompatibilityMatrix(std::move(names), std::move(scores));
}

// Random machine with `k` distinct component kinds and manufacturers drawn
// from the matrix.
inline centropy::MachineSpec random_machine(Rng& rng, const centropy::CompatibilityMatrix& matrix,
                                            std::size_t k, bool default_base = true) {
  std::vector<centropy::ComponentKind> kinds(centropy::kComponentKinds.begin(),
                                             centropy::kComponentKinds.end());
  std::shuffle(kinds.begin(), kinds.end(), rng.engine());
  centropy::MachineSpec machine;
  machine.name = "m" + std::to_string(rng.integer(0, 1 << 20));
  for (std::size_t i = 0; i < k; ++i) {
    centropy::ComponentSpec component;
    component.kind = kinds[i];
    component.manufacturer = matrix.manufacturers()[static_cast<std::size_t>(
        rng.integer(0, static_cast<std::int64_t>(matrix.size()) - 1))];
    component.base_value = default_base ? centropy::kDefaultBaseValue : rng.grid(0.1, 50.0, 0.1);
    machine.components.push_back(std::move(component));
  }
  return machine;
}

inline centropy::ClusterSpec random_cluster(Rng& rng, const centropy::CompatibilityMatrix& matrix,
                                            std::size_t max_groups = 5) {
  centropy::ClusterSpec cluster;
  cluster.name = "c" + std::to_string(rng.integer(0, 1 << 20));
  const std::int64_t groups = rng.integer(1, static_cast<std::int64_t>(max_groups));
  for (std::int64_t g = 0; g < groups; ++g) {
    centropy::MachineGroup group;
    group.machine = random_machine(rng, matrix, static_cast<std::size_t>(rng.integer(2, 4)));
    group.count = rng.integer(1, 1000);
    cluster.groups.push_back(std::move(group));
  }
  return cluster;
}

}  // namespace generators
