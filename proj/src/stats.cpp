#include "centropy/stats.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "centropy/errors.hpp"

namespace centropy {
namespace {

bool is_constant(const std::vector<double>& values) {
  return std::all_of(values.begin(), values.end(),
                     [&](double v) { return v == values.front(); });
}

double log_beta(double a, double b) {
  return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

// Continued-fraction expansion for the incomplete beta function, evaluated
// with the modified Lentz algorithm.
double incomplete_beta_cf(double x, double a, double b) {
  constexpr double tiny = 1e-300;
  constexpr double tolerance = 1e-16;
  constexpr int max_terms = 500;

  double c = 1.0;
  double d = 1.0 - (a + b) * x / (a + 1.0);
  if (std::fabs(d) < tiny) d = tiny;
  d = 1.0 / d;
  double result = d;

  for (int m = 1; m <= max_terms; ++m) {
    const double dm = static_cast<double>(m);
    // even step
    double numer = dm * (b - dm) * x / ((a + 2.0 * dm - 1.0) * (a + 2.0 * dm));
    d = 1.0 + numer * d;
    if (std::fabs(d) < tiny) d = tiny;
    c = 1.0 + numer / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    result *= d * c;
    // odd step
    numer = -(a + dm) * (a + b + dm) * x / ((a + 2.0 * dm) * (a + 2.0 * dm + 1.0));
    d = 1.0 + numer * d;
    if (std::fabs(d) < tiny) d = tiny;
    c = 1.0 + numer / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double mult = d * c;
    result *= mult;
    if (std::fabs(mult - 1.0) <= tolerance) break;
  }
  return result;
}

}  // namespace

double regularized_incomplete_beta(double x, double a, double b) {
  if (!(a > 0.0 && b > 0.0))
    throw ValidationError(fmt::format("incomplete beta: a and b must be positive, got {}, {}", a, b));
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double front = std::exp(a * std::log(x) + b * std::log1p(-x) - log_beta(a, b));
  // Use the expansion on the side where it converges fast.
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return front * incomplete_beta_cf(x, a, b) / a;
  }
  return 1.0 - std::exp(b * std::log1p(-x) + a * std::log(x) - log_beta(a, b)) *
                   incomplete_beta_cf(1.0 - x, b, a) / b;
}

double student_t_cdf(double t, int df) {
  if (df < 1) throw ValidationError(fmt::format("degrees of freedom must be >= 1, got {}", df));
  if (std::isinf(t)) return t > 0 ? 1.0 : 0.0;
  const double v = static_cast<double>(df);
  const double x = v / (t * t + v);
  const double tail = 0.5 * regularized_incomplete_beta(x, 0.5 * v, 0.5);
  return t >= 0.0 ? 1.0 - tail : tail;
}

double pearson_r(const SampleSeries& x, const SampleSeries& y) {
  if (x.values.size() != y.values.size())
    throw LengthMismatch(fmt::format("series \"{}\" has {} values but \"{}\" has {}", x.label,
                                     x.values.size(), y.label, y.values.size()));
  const std::size_t n = x.values.size();
  if (n < 3)
    throw InsufficientData(
        fmt::format("{} paired observations, correlation needs at least 3", n));
  if (is_constant(x.values))
    throw DegenerateSeries(fmt::format("series \"{}\" is constant", x.label));
  if (is_constant(y.values))
    throw DegenerateSeries(fmt::format("series \"{}\" is constant", y.label));

  double mean_x = 0.0;
  double mean_y = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mean_x += x.values[i];
    mean_y += y.values[i];
  }
  mean_x /= static_cast<double>(n);
  mean_y /= static_cast<double>(n);

  double sxx = 0.0;
  double syy = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = x.values[i] - mean_x;
    const double dy = y.values[i] - mean_y;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx == 0.0)
    throw DegenerateSeries(fmt::format("series \"{}\" has zero variance", x.label));
  if (syy == 0.0)
    throw DegenerateSeries(fmt::format("series \"{}\" has zero variance", y.label));

  // sqrt of the product keeps perfectly linear data at exactly +-1
  const double r = sxy / std::sqrt(sxx * syy);
  return std::clamp(r, -1.0, 1.0);
}

double p_value_two_sided(double r, int n) {
  if (!(std::fabs(r) <= 1.0)) throw InvalidR(fmt::format("|r| must be <= 1, got {}", r));
  if (n < 3)
    throw InsufficientData(fmt::format("{} observations, the t test needs at least 3", n));
  if (std::fabs(r) == 1.0) return 0.0;
  const int df = n - 2;
  const double t = r * std::sqrt(static_cast<double>(df) / (1.0 - r * r));
  return 2.0 * student_t_cdf(-std::fabs(t), df);
}

std::string interpret(double r, double p, double alpha) {
  std::string base;
  if (r == 0.0) {
    base = "No correlation";
  } else {
    const double magnitude = std::fabs(r);
    const char* strength = magnitude >= 0.7 ? "Strong" : magnitude >= 0.4 ? "Moderate" : "Weak";
    const char* direction = r > 0.0 ? "positive" : "negative";
    base = fmt::format("{} {}", strength, direction);
  }
  if (p >= alpha) return base + ", not significant";
  return r == 0.0 ? base : base + " correlation";
}

CorrelationResult correlation_result(std::string benchmark, const SampleSeries& x,
                                     const SampleSeries& y, double alpha) {
  CorrelationResult result;
  result.benchmark = std::move(benchmark);
  result.n = static_cast<int>(x.values.size());
  result.r = pearson_r(x, y);
  if (std::fabs(result.r) < 1.0) {
    const int df = result.n - 2;
    result.t_statistic = result.r * std::sqrt(static_cast<double>(df) / (1.0 - result.r * result.r));
  }
  result.p_value = p_value_two_sided(result.r, result.n);
  result.label = interpret(result.r, result.p_value, alpha);
  return result;
}

}  // namespace centropy
