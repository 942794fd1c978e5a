// Generative suites for the model invariants. Each property runs over at
// least 1000 seeded random cases.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "centropy/core.hpp"
#include "centropy/dataset.hpp"
#include "centropy/stats.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace centropy;
using generators::Rng;

namespace {
constexpr int kCases = 1000;
}

TEST_CASE("property: interaction value is symmetric") {
  Rng rng(1);
  for (int i = 0; i < kCases; ++i) {
    const auto matrix = generators::random_matrix(rng, 3);
    const ComponentSpec u{ComponentKind::CPU, rng.pick(matrix.manufacturers()),
                          rng.grid(0.1, 40.0, 0.1)};
    const ComponentSpec v{ComponentKind::Memory, rng.pick(matrix.manufacturers()),
                          rng.grid(0.1, 40.0, 0.1)};
    REQUIRE(interaction_value(u, v, matrix) == interaction_value(v, u, matrix));
  }
}

TEST_CASE("property: interaction value strictly decreases as compatibility grows") {
  Rng rng(2);
  for (int i = 0; i < kCases; ++i) {
    double c1 = rng.grid(0.0, 1.0, 1e-4);
    double c2 = rng.grid(0.0, 1.0, 1e-4);
    if (c1 == c2) continue;
    if (c1 > c2) std::swap(c1, c2);
    const CompatibilityMatrix low({"A", "B"}, {{1.0, c1}, {c1, 1.0}});
    const CompatibilityMatrix high({"A", "B"}, {{1.0, c2}, {c2, 1.0}});
    const ComponentSpec u{ComponentKind::CPU, "A", 10.0};
    const ComponentSpec v{ComponentKind::GPU, "B", 10.0};
    REQUIRE(interaction_value(u, v, low) > interaction_value(u, v, high));
  }
}

TEST_CASE("property: scaling both base values by k scales the interaction by k^2") {
  Rng rng(3);
  for (int i = 0; i < kCases; ++i) {
    const auto matrix = generators::random_matrix(rng, 2);
    const double b1 = rng.uniform(0.1, 50.0);
    const double b2 = rng.uniform(0.1, 50.0);
    const double k = rng.uniform(0.1, 10.0);
    const ComponentSpec u{ComponentKind::CPU, matrix.manufacturers()[0], b1};
    const ComponentSpec v{ComponentKind::GPU, matrix.manufacturers()[1], b2};
    const ComponentSpec su{ComponentKind::CPU, matrix.manufacturers()[0], k * b1};
    const ComponentSpec sv{ComponentKind::GPU, matrix.manufacturers()[1], k * b2};
    const double base = interaction_value(u, v, matrix);
    const double scaled = interaction_value(su, sv, matrix);
    REQUIRE(scaled == doctest::Approx(k * k * base).epsilon(1e-12));
  }
}

TEST_CASE("property: adding a component never decreases machine entropy") {
  Rng rng(4);
  for (int i = 0; i < kCases; ++i) {
    const auto matrix = generators::random_matrix(rng, 4);
    MachineSpec machine = generators::random_machine(rng, matrix, 2 + (i % 2), false);
    const double before = machine_entropy(machine, matrix).value;

    std::vector<ComponentKind> unused;
    for (ComponentKind kind : kComponentKinds) {
      const bool used = std::any_of(machine.components.begin(), machine.components.end(),
                                    [&](const ComponentSpec& c) { return c.kind == kind; });
      if (!used) unused.push_back(kind);
    }
    REQUIRE(!unused.empty());
    machine.components.push_back({unused.front(), rng.pick(matrix.manufacturers()),
                                  rng.grid(0.1, 50.0, 0.1)});
    REQUIRE(machine_entropy(machine, matrix).value >= before);
  }
}

TEST_CASE("property: homogeneous machines hit the closed form exactly") {
  Rng rng(5);
  const auto matrix = bundled_compatibility_matrix();
  for (int i = 0; i < kCases; ++i) {
    const std::string manufacturer = rng.pick(matrix.manufacturers());
    const auto k = static_cast<std::size_t>(rng.integer(2, 4));
    MachineSpec machine = generators::random_machine(rng, matrix, k);
    for (ComponentSpec& component : machine.components) {
      component.manufacturer = manufacturer;
      component.base_value = kDefaultBaseValue;
    }
    REQUIRE(machine_entropy(machine, matrix).value ==
            100.0 / (matrix.score(manufacturer, manufacturer) + matrix.epsilon()));
  }
}

TEST_CASE("property: machine entropy equals brute-force enumeration") {
  Rng rng(6);
  for (int i = 0; i < kCases; ++i) {
    const auto matrix = generators::random_matrix(rng, static_cast<std::size_t>(rng.integer(2, 6)));
    const auto k = static_cast<std::size_t>(rng.integer(2, 4));
    const MachineSpec machine = generators::random_machine(rng, matrix, k, false);
    REQUIRE(machine_entropy(machine, matrix).value ==
            oracles::brute_force_machine_entropy(machine, matrix));
  }
}

TEST_CASE("property: penalty is strictly increasing with P(0) = 0") {
  Rng rng(7);
  CHECK(penalty(0.0, {3.0, LogBase::natural}) == 0.0);
  CHECK(penalty(0.0, {3.0, LogBase::base10}) == 0.0);
  for (int i = 0; i < kCases; ++i) {
    double x1 = rng.grid(0.0, 1e6, 1e-3);
    double x2 = rng.grid(0.0, 1e6, 1e-3);
    if (x1 == x2) continue;
    if (x1 > x2) std::swap(x1, x2);
    const PenaltyParams params{rng.uniform(0.5, 5.0),
                               rng.flip() ? LogBase::natural : LogBase::base10};
    REQUIRE(penalty(x1, params) < penalty(x2, params));
  }
}

TEST_CASE("property: cluster entropy is invariant under group permutation") {
  Rng rng(8);
  for (int i = 0; i < kCases; ++i) {
    const auto matrix = generators::random_matrix(rng, 4);
    const ClusterSpec cluster = generators::random_cluster(rng, matrix);
    ClusterSpec shuffled = cluster;
    std::shuffle(shuffled.groups.begin(), shuffled.groups.end(), rng.engine());
    REQUIRE(cluster_entropy(cluster, matrix).value ==
            cluster_entropy(shuffled, matrix).value);
  }
}

TEST_CASE("property: cluster entropy is additive over disjoint group lists") {
  Rng rng(9);
  for (int i = 0; i < kCases; ++i) {
    const auto matrix = generators::random_matrix(rng, 4);
    const ClusterSpec a = generators::random_cluster(rng, matrix, 3);
    const ClusterSpec b = generators::random_cluster(rng, matrix, 3);
    ClusterSpec merged{"merged", a.groups};
    merged.groups.insert(merged.groups.end(), b.groups.begin(), b.groups.end());
    const double lhs = cluster_entropy(merged, matrix).value;
    const double rhs = cluster_entropy(a, matrix).value + cluster_entropy(b, matrix).value;
    REQUIRE(lhs == doctest::Approx(rhs).epsilon(1e-12));
  }
}

TEST_CASE("property: n identical machines scale linearly") {
  Rng rng(10);
  for (int i = 0; i < kCases; ++i) {
    const auto matrix = generators::random_matrix(rng, 3);
    const MachineSpec machine = generators::random_machine(rng, matrix, 3, false);
    const std::int64_t n = rng.integer(1, 1000000);
    const ClusterSpec grouped{"g", {{machine, n}}};
    const double single = penalty(machine_entropy(machine, matrix).value);
    REQUIRE(cluster_entropy(grouped, matrix).value ==
            doctest::Approx(static_cast<double>(n) * single).epsilon(1e-12));
  }
}

TEST_CASE("property: pearson_r is symmetric, bounded, and affine-invariant") {
  Rng rng(11);
  for (int i = 0; i < kCases; ++i) {
    const auto n = static_cast<std::size_t>(rng.integer(3, 40));
    SampleSeries x{"x", {}};
    SampleSeries y{"y", {}};
    for (std::size_t k = 0; k < n; ++k) {
      x.values.push_back(rng.uniform(0.0, 100.0));
      y.values.push_back(rng.uniform(0.0, 100.0));
    }
    const double r = pearson_r(x, y);
    REQUIRE(r >= -1.0);
    REQUIRE(r <= 1.0);
    REQUIRE(r == pearson_r(y, x));

    const double a = rng.uniform(0.1, 10.0);
    const double b = rng.uniform(-100.0, 100.0);
    SampleSeries scaled{"ax+b", {}};
    for (double v : x.values) scaled.values.push_back(a * v + b);
    REQUIRE(pearson_r(scaled, y) == doctest::Approx(r).epsilon(1e-10));

    SampleSeries flipped{"-ax+b", {}};
    for (double v : x.values) flipped.values.push_back(-a * v + b);
    REQUIRE(pearson_r(flipped, y) == doctest::Approx(-r).epsilon(1e-10));
  }
}

TEST_CASE("property: t CDF is strictly increasing and reflects around zero") {
  Rng rng(12);
  for (int i = 0; i < kCases; ++i) {
    const int df = static_cast<int>(rng.integer(1, 30));
    double t1 = rng.grid(-6.0, 6.0, 0.05);
    double t2 = rng.grid(-6.0, 6.0, 0.05);
    if (t1 == t2) continue;
    if (t1 > t2) std::swap(t1, t2);
    REQUIRE(student_t_cdf(t1, df) < student_t_cdf(t2, df));
    REQUIRE(student_t_cdf(t1, df) + student_t_cdf(-t1, df) ==
            doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("property: t CDF agrees with the quadrature oracle") {
  Rng rng(13);
  for (int i = 0; i < kCases; ++i) {
    const int df = static_cast<int>(rng.integer(1, 30));
    const double t = rng.uniform(-6.0, 6.0);
    const double expected = oracles::t_cdf_quadrature(t, df);
    REQUIRE(std::fabs(student_t_cdf(t, df) - expected) <= 1e-10);
  }
}

TEST_CASE("property: p value strictly decreases in |r|") {
  Rng rng(14);
  for (int i = 0; i < kCases; ++i) {
    const int n = static_cast<int>(rng.integer(4, 50));
    double r1 = rng.grid(1e-4, 0.9999, 1e-4);
    double r2 = rng.grid(1e-4, 0.9999, 1e-4);
    if (r1 == r2) continue;
    if (r1 > r2) std::swap(r1, r2);
    REQUIRE(p_value_two_sided(r1, n) > p_value_two_sided(r2, n));
    REQUIRE(p_value_two_sided(r1, n) == p_value_two_sided(-r1, n));
  }
}

TEST_CASE("property: matrix and benchmark serialization round-trips are lossless") {
  Rng rng(15);
  for (int i = 0; i < 200; ++i) {
    // matrix with arbitrary double scores
    const auto n = static_cast<std::size_t>(rng.integer(1, 6));
    std::vector<std::string> names;
    for (std::size_t k = 0; k < n; ++k) names.push_back("M" + std::to_string(k));
    std::vector<std::vector<double>> scores(n, std::vector<double>(n, 0.0));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a; b < n; ++b) {
        scores[a][b] = scores[b][a] = rng.uniform(0.0, 1.0);
      }
    }
    const CompatibilityMatrix matrix(names, scores, rng.uniform(1e-12, 1e-3));
    REQUIRE(parse_matrix_csv(matrix_to_csv(matrix), "prop") ==
            CompatibilityMatrix(names, scores));  // CSV carries no epsilon
    REQUIRE(parse_matrix_json(matrix_to_json(matrix), "prop") == matrix);

    // benchmark table with random gaps
    BenchmarkTable table;
    table.source = "prop";
    const auto records = static_cast<std::size_t>(rng.integer(1, 12));
    for (std::size_t s = 0; s < records; ++s) {
      SystemRecord record;
      record.name = "sys" + std::to_string(s);
      record.entropy = rng.uniform(0.0, 50.0);
      for (const BenchmarkInfo& info : kBenchmarks) {
        if (rng.flip()) record.benchmarks[std::string(info.name)] = rng.uniform(0.0, 100.0);
      }
      table.records.push_back(std::move(record));
    }
    REQUIRE(parse_benchmarks_csv(benchmarks_to_csv(table), "prop").records == table.records);

    // cluster spec through JSON
    const ClusterSpec cluster = generators::random_cluster(rng, matrix, 4);
    REQUIRE(parse_cluster_spec(cluster_spec_to_json(cluster), "prop") == cluster);
  }
}
