#pragma once

#include <span>
#include <vector>

namespace coast::stats {

struct TestResult {
  double statistic = 0.0;
  double p = 1.0;
};

// Two-sided Welch's t-test with Welch-Satterthwaite degrees of freedom.
// Requires at least two observations per sample and nonzero variance in both.
TestResult welch_t(std::span<const double> a, std::span<const double> b);

// Welch with a documented degenerate-variance rule instead of an error:
// both variances zero -> p = 1 if means equal else p = 0; one variance zero
// -> the test proceeds with that term dropped. Used by pipeline stages that
// must score every feature (e.g. surgically intervened columns are constant).
TestResult welch_t_lenient(std::span<const double> a, std::span<const double> b);

// Two-sided Mann-Whitney U via the normal approximation with tie correction
// and continuity correction. Statistic is U for the first sample.
TestResult mann_whitney_u(std::span<const double> a, std::span<const double> b);

// Benjamini-Hochberg step-up adjustment, clipped to [0,1].
std::vector<double> bh_adjust(const std::vector<double>& pvals);

double mean(std::span<const double> x);
double variance(std::span<const double> x);  // population convention
double sample_skewness(std::span<const double> x);

// Standard normal survival function P(Z > z).
double normal_sf(double z);
// Student-t survival function P(T > t) with nu degrees of freedom.
double student_t_sf(double t, double nu);

}  // namespace coast::stats
