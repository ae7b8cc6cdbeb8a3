#pragma once

#include <cstddef>

// Vector arithmetic kernels used by the numeric inner loops (column
// statistics, least squares, coordinate descent, ancestral sampling,
// objective evaluation). Every kernel has a scalar reference
// implementation and, on x86-64, an AVX2/FMA variant. The active lane is
// picked once at startup: COAST_SIMD=scalar|avx2|auto overrides the
// default CPU probe. SIMD lanes reassociate reductions, so results may
// differ from the scalar lane in the last ulps; the equivalence tests pin
// the tolerance.

namespace coast::kernels {

enum class Lane { scalar, avx2 };

Lane active_lane();
bool lane_available(Lane lane);
const char* lane_name(Lane lane);

// Test hook. Throws coast::Error if the lane is not available on this CPU.
void force_lane(Lane lane);

double dot(const double* a, const double* b, std::size_t n);
// y += a * x
void axpy(double a, const double* x, double* y, std::size_t n);
double sum(const double* x, std::size_t n);
double sumsq(const double* x, std::size_t n);
// sum_i (a_i - b_i)^2
double sq_dist(const double* a, const double* b, std::size_t n);
// out_i = sign(v_i) * max(|v_i| - t_i, 0)
void soft_threshold(const double* v, const double* t, double* out, std::size_t n);

// Reference lane, always available. The dispatched entry points above are
// equivalence-tested against these.
namespace scalar {
double dot(const double* a, const double* b, std::size_t n);
void axpy(double a, const double* x, double* y, std::size_t n);
double sum(const double* x, std::size_t n);
double sumsq(const double* x, std::size_t n);
double sq_dist(const double* a, const double* b, std::size_t n);
void soft_threshold(const double* v, const double* t, double* out, std::size_t n);
}  // namespace scalar

}  // namespace coast::kernels
