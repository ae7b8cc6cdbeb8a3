#include "coast/stats.hpp"

#include <algorithm>
#include <boost/math/distributions/students_t.hpp>
#include <cmath>
#include <numeric>

#include "coast/error.hpp"
#include "coast/kernels.hpp"

namespace coast::stats {

double mean(std::span<const double> x) {
  return x.empty() ? 0.0 : kernels::sum(x.data(), x.size()) / static_cast<double>(x.size());
}

double variance(std::span<const double> x) {
  if (x.empty()) return 0.0;
  const double m = mean(x);
  double ss = 0.0;
  for (double v : x) ss += (v - m) * (v - m);
  return ss / static_cast<double>(x.size());
}

double sample_skewness(std::span<const double> x) {
  const double m = mean(x);
  double m2 = 0.0, m3 = 0.0;
  for (double v : x) {
    const double d = v - m;
    m2 += d * d;
    m3 += d * d * d;
  }
  const double n = static_cast<double>(x.size());
  m2 /= n;
  m3 /= n;
  if (m2 <= 0.0) return 0.0;
  return m3 / std::pow(m2, 1.5);
}

double normal_sf(double z) { return 0.5 * std::erfc(z / std::sqrt(2.0)); }

double student_t_sf(double t, double nu) {
  boost::math::students_t dist(nu);
  return boost::math::cdf(boost::math::complement(dist, t));
}

namespace {

// Unbiased (n-1) variance, as the Welch statistic expects.
double welch_var(std::span<const double> x) {
  const double m = mean(x);
  double ss = 0.0;
  for (double v : x) ss += (v - m) * (v - m);
  return ss / static_cast<double>(x.size() - 1);
}

TestResult welch_core(std::span<const double> a, std::span<const double> b, double va, double vb) {
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  const double se2 = va / na + vb / nb;
  if (se2 == 0.0) return {0.0, mean(a) == mean(b) ? 1.0 : 0.0};
  const double t = (mean(a) - mean(b)) / std::sqrt(se2);
  double nu;
  if (va == 0.0) {
    nu = nb - 1.0;
  } else if (vb == 0.0) {
    nu = na - 1.0;
  } else {
    nu = se2 * se2 /
         ((va / na) * (va / na) / (na - 1.0) + (vb / nb) * (vb / nb) / (nb - 1.0));
  }
  const double p = std::min(1.0, 2.0 * student_t_sf(std::fabs(t), nu));
  return {t, p};
}

}  // namespace

TestResult welch_t(std::span<const double> a, std::span<const double> b) {
  if (a.size() < 2 || b.size() < 2)
    throw ValidationError("welch_t requires at least 2 observations per sample");
  const double va = welch_var(a);
  const double vb = welch_var(b);
  if (va == 0.0 || vb == 0.0) throw ValidationError("welch_t: degenerate (zero) variance");
  return welch_core(a, b, va, vb);
}

TestResult welch_t_lenient(std::span<const double> a, std::span<const double> b) {
  if (a.size() < 2 || b.size() < 2)
    throw ValidationError("welch test requires at least 2 observations per sample");
  return welch_core(a, b, welch_var(a), welch_var(b));
}

TestResult mann_whitney_u(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty())
    throw ValidationError("mann_whitney_u requires nonempty samples");
  const std::size_t na = a.size(), nb = b.size(), n = na + nb;

  struct Obs {
    double v;
    bool from_a;
  };
  std::vector<Obs> all;
  all.reserve(n);
  for (double v : a) all.push_back({v, true});
  for (double v : b) all.push_back({v, false});
  std::sort(all.begin(), all.end(), [](const Obs& x, const Obs& y) { return x.v < y.v; });

  // midranks + tie bookkeeping
  double rank_sum_a = 0.0;
  double tie_term = 0.0;
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j < n && all[j].v == all[i].v) ++j;
    const double t = static_cast<double>(j - i);
    const double midrank = 0.5 * static_cast<double>(i + 1 + j);  // average of ranks i+1..j
    for (std::size_t k = i; k < j; ++k)
      if (all[k].from_a) rank_sum_a += midrank;
    tie_term += t * t * t - t;
    i = j;
  }

  const double u_a = rank_sum_a - static_cast<double>(na) * (na + 1) / 2.0;
  const double mu = static_cast<double>(na) * static_cast<double>(nb) / 2.0;
  const double nn = static_cast<double>(n);
  const double var = static_cast<double>(na) * static_cast<double>(nb) / 12.0 *
                     ((nn + 1.0) - tie_term / (nn * (nn - 1.0)));
  if (var <= 0.0) return {u_a, 1.0};  // all observations tied
  const double z = std::max(0.0, std::fabs(u_a - mu) - 0.5) / std::sqrt(var);
  return {u_a, std::min(1.0, 2.0 * normal_sf(z))};
}

std::vector<double> bh_adjust(const std::vector<double>& pvals) {
  for (double p : pvals)
    if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("p-value outside [0,1]");
  const std::size_t m = pvals.size();
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return pvals[x] < pvals[y]; });

  std::vector<double> adj(m);
  double running_min = 1.0;
  for (std::size_t r = m; r-- > 0;) {
    const double scaled = pvals[order[r]] * static_cast<double>(m) / static_cast<double>(r + 1);
    running_min = std::min(running_min, scaled);
    adj[order[r]] = std::min(1.0, running_min);
  }
  return adj;
}

}  // namespace coast::stats
