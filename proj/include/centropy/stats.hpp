#pragma once

#include <optional>
#include <string>
#include <vector>

namespace centropy {

inline constexpr double kDefaultAlpha = 0.05;

struct SampleSeries {
  std::string label;
  std::vector<double> values;
};

/// Sample Pearson correlation coefficient (two-pass formula), clamped to
/// [-1, 1] against floating-point overshoot.
///
/// Throws LengthMismatch for unequal lengths, InsufficientData for fewer
/// than 3 pairs, DegenerateSeries when either series is constant.
double pearson_r(const SampleSeries& x, const SampleSeries& y);

/// Regularized incomplete beta function I_x(a, b), evaluated with the
/// continued-fraction expansion (modified Lentz).
double regularized_incomplete_beta(double x, double a, double b);

/// CDF of Student's t distribution with df >= 1 degrees of freedom.
/// Exact at the limits: cdf(-inf) = 0, cdf(0) = 0.5, cdf(+inf) = 1.
double student_t_cdf(double t, int df);

/// Two-sided p-value for a sample correlation r over n pairs, via the
/// t statistic r * sqrt((n-2) / (1 - r^2)) with n-2 degrees of freedom.
/// |r| = 1 returns exactly 0. Throws InvalidR when |r| > 1.
double p_value_two_sided(double r, int n);

/// Human-readable interpretation: strength from |r| (>= 0.7 strong,
/// >= 0.4 moderate, else weak; exactly 0 -> "No correlation"), direction from
/// the sign, and ", not significant" appended whenever p >= alpha.
std::string interpret(double r, double p, double alpha = kDefaultAlpha);

struct CorrelationResult {
  std::string benchmark;
  double r = 0.0;
  std::optional<double> t_statistic;  // absent when |r| == 1 (p is 0 directly)
  double p_value = 0.0;
  int n = 0;
  std::string label;
};

/// Bundles pearson_r, the t statistic, p_value_two_sided and interpret for
/// one paired sample.
CorrelationResult correlation_result(std::string benchmark, const SampleSeries& x,
                                     const SampleSeries& y, double alpha = kDefaultAlpha);

}  // namespace centropy
