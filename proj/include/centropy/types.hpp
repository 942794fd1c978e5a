#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace centropy {

inline constexpr double kDefaultBaseValue = 10.0;
inline constexpr double kDefaultEpsilon = 1e-9;
inline constexpr double kDefaultPenaltyCoefficient = 3.0;

/// Hardware component classes a machine graph is built from.
enum class ComponentKind { CPU, GPU, Cache, Memory };

inline constexpr std::array<ComponentKind, 4> kComponentKinds = {
    ComponentKind::CPU, ComponentKind::GPU, ComponentKind::Cache, ComponentKind::Memory};

std::string_view to_string(ComponentKind kind);

/// Case-insensitive; returns nullopt for anything outside the four kinds.
std::optional<ComponentKind> parse_component_kind(std::string_view text);

struct ComponentSpec {
  ComponentKind kind = ComponentKind::CPU;
  std::string manufacturer;
  double base_value = kDefaultBaseValue;

  bool operator==(const ComponentSpec&) const = default;
};

/// Canonical component order: kind name first, manufacturer second (bytewise).
bool canonical_less(const ComponentSpec& a, const ComponentSpec& b);

/// Symmetric manufacturer-pair compatibility scores in [0, 1].
///
/// The constructor enforces every structural invariant: the score table must
/// be square, exactly symmetric (AsymmetricMatrix), inside [0, 1]
/// (RangeError), and the manufacturer names unique ignoring case. Lookups are
/// case-insensitive.
class CompatibilityMatrix {
 public:
  CompatibilityMatrix(std::vector<std::string> manufacturers,
                      std::vector<std::vector<double>> scores,
                      double epsilon = kDefaultEpsilon);

  std::size_t size() const { return manufacturers_.size(); }
  const std::vector<std::string>& manufacturers() const { return manufacturers_; }
  double epsilon() const { return epsilon_; }

  std::optional<std::size_t> find(std::string_view manufacturer) const;
  bool contains(std::string_view manufacturer) const { return find(manufacturer).has_value(); }

  /// Throws UnknownManufacturer if either name is absent.
  double score(std::string_view m1, std::string_view m2) const;
  double score_at(std::size_t i, std::size_t j) const;

  /// Copy with cell (i, j) (and its mirror) replaced; value must stay in [0, 1].
  CompatibilityMatrix with_score(std::size_t i, std::size_t j, double value) const;

  bool operator==(const CompatibilityMatrix&) const = default;

 private:
  std::vector<std::string> manufacturers_;
  std::vector<double> scores_;  // row-major size() x size()
  double epsilon_ = kDefaultEpsilon;
};

struct MachineSpec {
  std::string name;
  std::vector<ComponentSpec> components;

  bool operator==(const MachineSpec&) const = default;
};

/// Throws InvalidMachine (fewer than two components) or ValidationError
/// (duplicate kind, empty manufacturer, non-positive base value).
void validate(const MachineSpec& machine);

struct MachineGroup {
  MachineSpec machine;
  std::int64_t count = 1;

  bool operator==(const MachineGroup&) const = default;
};

struct ClusterSpec {
  std::string name;
  std::vector<MachineGroup> groups;

  bool operator==(const ClusterSpec&) const = default;
};

/// Throws EmptyCluster when there are no groups; otherwise validates counts
/// and every machine.
void validate(const ClusterSpec& cluster);

enum class LogBase { natural, base10 };

struct PenaltyParams {
  double coefficient = kDefaultPenaltyCoefficient;
  LogBase log_base = LogBase::natural;

  bool operator==(const PenaltyParams&) const = default;
};

/// Unordered component pair, stored in canonical order.
struct ComponentPair {
  ComponentSpec first;
  ComponentSpec second;

  bool operator==(const ComponentPair&) const = default;
};

struct EdgeValue {
  ComponentPair edge;
  double interaction = 0.0;

  bool operator==(const EdgeValue&) const = default;
};

struct MachineEntropy {
  std::string machine;
  double value = 0.0;
  ComponentPair argmax_edge;
  std::vector<EdgeValue> edge_values;  // canonical edge order
};

struct MachineContribution {
  std::string machine;
  std::int64_t count = 1;
  double entropy = 0.0;  // machine entropy before the penalty
  double penalty = 0.0;  // penalty applied to one machine of this group
};

struct ClusterEntropy {
  std::string cluster;
  double value = 0.0;
  std::vector<MachineContribution> per_machine;  // group order
};

}  // namespace centropy
