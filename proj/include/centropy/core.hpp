#pragma once

#include <vector>

#include "centropy/types.hpp"

namespace centropy {

/// Interaction value of one edge:
///
///   I(u, v) = B(u) * B(v) / (C(M(u), M(v)) + epsilon)
///
/// Symmetric in its arguments; grows as compatibility shrinks. The epsilon
/// guard comes from the matrix, so a compatibility score of 0 yields a large
/// finite value instead of infinity.
double interaction_value(const ComponentSpec& u, const ComponentSpec& v,
                         const CompatibilityMatrix& matrix);

/// All k*(k-1)/2 unordered component pairs of the machine's complete graph,
/// in canonical order (components sorted by kind name, then manufacturer).
std::vector<ComponentPair> build_component_graph(const MachineSpec& machine);

/// Machine entropy: the maximum interaction value over the complete component
/// graph. Ties pick the first edge in canonical order.
MachineEntropy machine_entropy(const MachineSpec& machine, const CompatibilityMatrix& matrix);

/// P(x) = coefficient * log(1 + x). Strictly increasing, P(0) = 0.
/// Throws NegativeInput for x < 0.
double penalty(double x, const PenaltyParams& params = {});

/// Cluster entropy: sum over machine groups of count * P(machine entropy).
/// The total is accumulated in value-sorted order so the result does not
/// depend on how the groups are listed.
ClusterEntropy cluster_entropy(const ClusterSpec& cluster, const CompatibilityMatrix& matrix,
                               const PenaltyParams& params = {});

}  // namespace centropy
