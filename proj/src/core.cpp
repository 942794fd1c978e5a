#include "centropy/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <fmt/format.h>

#include "centropy/errors.hpp"

namespace centropy {

double interaction_value(const ComponentSpec& u, const ComponentSpec& v,
                         const CompatibilityMatrix& matrix) {
  const double compatibility = matrix.score(u.manufacturer, v.manufacturer);
  return u.base_value * v.base_value / (compatibility + matrix.epsilon());
}

std::vector<ComponentPair> build_component_graph(const MachineSpec& machine) {
  validate(machine);
  std::vector<ComponentSpec> components = machine.components;
  std::sort(components.begin(), components.end(), canonical_less);

  std::vector<ComponentPair> edges;
  edges.reserve(components.size() * (components.size() - 1) / 2);
  for (std::size_t i = 0; i < components.size(); ++i) {
    for (std::size_t j = i + 1; j < components.size(); ++j) {
      edges.push_back({components[i], components[j]});
    }
  }
  return edges;
}

MachineEntropy machine_entropy(const MachineSpec& machine, const CompatibilityMatrix& matrix) {
  MachineEntropy result;
  result.machine = machine.name;
  for (const ComponentPair& edge : build_component_graph(machine)) {
    result.edge_values.push_back({edge, interaction_value(edge.first, edge.second, matrix)});
  }
  // Strict > keeps the first canonical edge on ties.
  std::size_t best = 0;
  for (std::size_t i = 1; i < result.edge_values.size(); ++i) {
    if (result.edge_values[i].interaction > result.edge_values[best].interaction) best = i;
  }
  result.value = result.edge_values[best].interaction;
  result.argmax_edge = result.edge_values[best].edge;
  return result;
}

double penalty(double x, const PenaltyParams& params) {
  if (!(params.coefficient > 0.0))
    throw ValidationError(
        fmt::format("penalty coefficient must be positive, got {}", params.coefficient));
  if (x < 0.0) throw NegativeInput(fmt::format("penalty input must be nonnegative, got {}", x));
  const double logged =
      params.log_base == LogBase::natural ? std::log1p(x) : std::log10(1.0 + x);
  return params.coefficient * logged;
}

ClusterEntropy cluster_entropy(const ClusterSpec& cluster, const CompatibilityMatrix& matrix,
                               const PenaltyParams& params) {
  validate(cluster);
  ClusterEntropy result;
  result.cluster = cluster.name;

  std::vector<double> contributions;
  contributions.reserve(cluster.groups.size());
  for (const MachineGroup& group : cluster.groups) {
    const MachineEntropy entropy = machine_entropy(group.machine, matrix);
    const double penalized = penalty(entropy.value, params);
    result.per_machine.push_back({group.machine.name, group.count, entropy.value, penalized});
    contributions.push_back(static_cast<double>(group.count) * penalized);
  }
  // Summing in sorted order keeps the total independent of group order.
  std::sort(contributions.begin(), contributions.end());
  result.value = std::accumulate(contributions.begin(), contributions.end(), 0.0);
  return result;
}

}  // namespace centropy
