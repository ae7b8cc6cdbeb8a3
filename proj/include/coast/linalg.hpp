#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "coast/matrix.hpp"

namespace coast::linalg {

// Solves A x = b for a small symmetric positive semi-definite system via
// Cholesky. On pivot breakdown the system is re-factored with +ridge on the
// diagonal; *ridged reports whether that happened.
std::vector<double> solve_spd(std::vector<double> a, std::vector<double> b, std::size_t d,
                              double ridge, bool* ridged = nullptr);

struct OlsFit {
  double intercept = 0.0;
  std::vector<double> coef;       // one per regressor column
  std::vector<double> residuals;  // length n, zero-mean up to float error
  double resid_var = 0.0;         // population convention (RSS / n)
  bool ridged = false;
};

// Least squares of y on the selected columns of X plus an intercept.
// Rank deficiency is absorbed by a ridge jitter, never an error.
OlsFit ols(const Matrix& x, std::span<const int> cols, const double* y, std::size_t n,
           double ridge_jitter = 1e-8);

}  // namespace coast::linalg
