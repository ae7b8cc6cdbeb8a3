#include "coast/linalg.hpp"

#include <cmath>

#include "coast/error.hpp"
#include "coast/kernels.hpp"

namespace coast::linalg {

namespace {

// In-place lower Cholesky; returns false on a non-positive pivot.
bool cholesky(std::vector<double>& a, std::size_t d) {
  for (std::size_t j = 0; j < d; ++j) {
    double diag = a[j * d + j];
    for (std::size_t k = 0; k < j; ++k) diag -= a[j * d + k] * a[j * d + k];
    if (diag <= 0.0 || !std::isfinite(diag)) return false;
    const double l = std::sqrt(diag);
    a[j * d + j] = l;
    for (std::size_t i = j + 1; i < d; ++i) {
      double v = a[i * d + j];
      for (std::size_t k = 0; k < j; ++k) v -= a[i * d + k] * a[j * d + k];
      a[i * d + j] = v / l;
    }
  }
  return true;
}

std::vector<double> chol_solve(const std::vector<double>& l, std::vector<double> b,
                               std::size_t d) {
  for (std::size_t i = 0; i < d; ++i) {
    double v = b[i];
    for (std::size_t k = 0; k < i; ++k) v -= l[i * d + k] * b[k];
    b[i] = v / l[i * d + i];
  }
  for (std::size_t i = d; i-- > 0;) {
    double v = b[i];
    for (std::size_t k = i + 1; k < d; ++k) v -= l[k * d + i] * b[k];
    b[i] = v / l[i * d + i];
  }
  return b;
}

}  // namespace

std::vector<double> solve_spd(std::vector<double> a, std::vector<double> b, std::size_t d,
                              double ridge, bool* ridged) {
  if (ridged) *ridged = false;
  if (d == 0) return {};
  std::vector<double> fac = a;
  if (!cholesky(fac, d)) {
    fac = a;
    for (std::size_t j = 0; j < d; ++j) fac[j * d + j] += ridge;
    if (ridged) *ridged = true;
    if (!cholesky(fac, d)) throw Error("solve_spd: factorization failed even with ridge");
  }
  return chol_solve(fac, std::move(b), d);
}

OlsFit ols(const Matrix& x, std::span<const int> cols, const double* y, std::size_t n,
           double ridge_jitter) {
  const std::size_t d = cols.size();
  OlsFit fit;
  const double yn = static_cast<double>(n);
  const double ymean = kernels::sum(y, n) / yn;

  if (d == 0) {
    fit.intercept = ymean;
    fit.residuals.resize(n);
    for (std::size_t i = 0; i < n; ++i) fit.residuals[i] = y[i] - ymean;
    fit.resid_var = kernels::sumsq(fit.residuals.data(), n) / yn;
    return fit;
  }

  // centered copies of the regressors so the Gram accumulation is stable
  std::vector<std::vector<double>> xc(d, std::vector<double>(n));
  std::vector<double> xmean(d);
  for (std::size_t a = 0; a < d; ++a) {
    const double* c = x.col(static_cast<std::size_t>(cols[a]));
    xmean[a] = kernels::sum(c, n) / yn;
    for (std::size_t i = 0; i < n; ++i) xc[a][i] = c[i] - xmean[a];
  }
  std::vector<double> yc(n);
  for (std::size_t i = 0; i < n; ++i) yc[i] = y[i] - ymean;

  std::vector<double> gram(d * d);
  std::vector<double> rhs(d);
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b <= a; ++b) {
      const double g = kernels::dot(xc[a].data(), xc[b].data(), n);
      gram[a * d + b] = g;
      gram[b * d + a] = g;
    }
    rhs[a] = kernels::dot(xc[a].data(), yc.data(), n);
  }

  fit.coef = solve_spd(std::move(gram), std::move(rhs), d, ridge_jitter, &fit.ridged);
  fit.intercept = ymean;
  for (std::size_t a = 0; a < d; ++a) fit.intercept -= fit.coef[a] * xmean[a];

  fit.residuals = std::move(yc);
  for (std::size_t a = 0; a < d; ++a)
    kernels::axpy(-fit.coef[a], xc[a].data(), fit.residuals.data(), n);
  fit.resid_var = kernels::sumsq(fit.residuals.data(), n) / yn;
  return fit;
}

}  // namespace coast::linalg
