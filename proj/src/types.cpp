#include "centropy/types.hpp"

#include <algorithm>
#include <cctype>

#include <fmt/format.h>

#include "centropy/errors.hpp"

namespace centropy {
namespace {

bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(), [](unsigned char x, unsigned char y) {
           return std::tolower(x) == std::tolower(y);
         });
}

}  // namespace

std::string_view to_string(ComponentKind kind) {
  switch (kind) {
    case ComponentKind::CPU: return "CPU";
    case ComponentKind::GPU: return "GPU";
    case ComponentKind::Cache: return "Cache";
    case ComponentKind::Memory: return "Memory";
  }
  return "?";
}

std::optional<ComponentKind> parse_component_kind(std::string_view text) {
  for (ComponentKind kind : kComponentKinds) {
    if (iequals(text, to_string(kind))) return kind;
  }
  return std::nullopt;
}

bool canonical_less(const ComponentSpec& a, const ComponentSpec& b) {
  const std::string_view ka = to_string(a.kind);
  const std::string_view kb = to_string(b.kind);
  if (ka != kb) return ka < kb;
  return a.manufacturer < b.manufacturer;
}

CompatibilityMatrix::CompatibilityMatrix(std::vector<std::string> manufacturers,
                                         std::vector<std::vector<double>> scores, double epsilon)
    : manufacturers_(std::move(manufacturers)), epsilon_(epsilon) {
  const std::size_t n = manufacturers_.size();
  if (n == 0) throw ValidationError("compatibility matrix: needs at least one manufacturer");
  if (!(epsilon_ > 0.0))
    throw ValidationError(fmt::format("compatibility matrix: epsilon must be positive, got {}", epsilon_));
  for (std::size_t i = 0; i < n; ++i) {
    if (manufacturers_[i].empty())
      throw ValidationError("compatibility matrix: empty manufacturer name");
    for (std::size_t j = 0; j < i; ++j) {
      if (iequals(manufacturers_[i], manufacturers_[j]))
        throw ValidationError(
            fmt::format("compatibility matrix: duplicate manufacturer \"{}\"", manufacturers_[i]));
    }
  }
  if (scores.size() != n)
    throw ValidationError(fmt::format(
        "compatibility matrix: expected {} score rows for {} manufacturers, got {}", n, n,
        scores.size()));
  scores_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (scores[i].size() != n)
      throw ValidationError(fmt::format("compatibility matrix: row {} has {} entries, expected {}",
                                        manufacturers_[i], scores[i].size(), n));
    for (std::size_t j = 0; j < n; ++j) {
      const double value = scores[i][j];
      if (!(value >= 0.0 && value <= 1.0))
        throw RangeError(fmt::format("compatibility matrix: C({}, {}) = {} outside [0, 1]",
                                     manufacturers_[i], manufacturers_[j], value));
      scores_[i * n + j] = value;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (scores_[i * n + j] != scores_[j * n + i])
        throw AsymmetricMatrix(
            fmt::format("compatibility matrix: C({m1}, {m2}) = {a} but C({m2}, {m1}) = {b}",
                        fmt::arg("m1", manufacturers_[i]), fmt::arg("m2", manufacturers_[j]),
                        fmt::arg("a", scores_[i * n + j]), fmt::arg("b", scores_[j * n + i])));
    }
  }
}

std::optional<std::size_t> CompatibilityMatrix::find(std::string_view manufacturer) const {
  for (std::size_t i = 0; i < manufacturers_.size(); ++i) {
    if (iequals(manufacturers_[i], manufacturer)) return i;
  }
  return std::nullopt;
}

double CompatibilityMatrix::score(std::string_view m1, std::string_view m2) const {
  const auto i = find(m1);
  if (!i) throw UnknownManufacturer(fmt::format("manufacturer \"{}\" not in compatibility matrix", m1));
  const auto j = find(m2);
  if (!j) throw UnknownManufacturer(fmt::format("manufacturer \"{}\" not in compatibility matrix", m2));
  return score_at(*i, *j);
}

double CompatibilityMatrix::score_at(std::size_t i, std::size_t j) const {
  return scores_[i * size() + j];
}

CompatibilityMatrix CompatibilityMatrix::with_score(std::size_t i, std::size_t j,
                                                    double value) const {
  if (!(value >= 0.0 && value <= 1.0))
    throw RangeError(fmt::format("compatibility score {} outside [0, 1]", value));
  CompatibilityMatrix copy = *this;
  copy.scores_[i * size() + j] = value;
  copy.scores_[j * size() + i] = value;
  return copy;
}

void validate(const MachineSpec& machine) {
  if (machine.components.size() < 2)
    throw InvalidMachine(fmt::format("machine \"{}\": needs at least 2 components, got {}",
                                     machine.name, machine.components.size()));
  std::array<int, kComponentKinds.size()> seen{};
  for (const ComponentSpec& component : machine.components) {
    if (component.manufacturer.empty())
      throw ValidationError(fmt::format("machine \"{}\": {} component has an empty manufacturer",
                                        machine.name, to_string(component.kind)));
    if (!(component.base_value > 0.0))
      throw ValidationError(fmt::format("machine \"{}\": {} base value must be positive, got {}",
                                        machine.name, to_string(component.kind),
                                        component.base_value));
    if (++seen[static_cast<std::size_t>(component.kind)] > 1)
      throw ValidationError(fmt::format("machine \"{}\": duplicate component kind {}", machine.name,
                                        to_string(component.kind)));
  }
}

void validate(const ClusterSpec& cluster) {
  if (cluster.groups.empty())
    throw EmptyCluster(fmt::format("cluster \"{}\": no machine groups", cluster.name));
  for (const MachineGroup& group : cluster.groups) {
    if (group.count < 1)
      throw ValidationError(fmt::format("cluster \"{}\": group \"{}\" has count {}, must be >= 1",
                                        cluster.name, group.machine.name, group.count));
    validate(group.machine);
  }
}

}  // namespace centropy
