#include "coast/kernels.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <string>

#include "coast/error.hpp"

namespace coast::kernels {

namespace scalar {

double dot(const double* a, const double* b, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
  return s;
}

void axpy(double a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

double sum(const double* x, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i];
  return s;
}

double sumsq(const double* x, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i] * x[i];
  return s;
}

double sq_dist(const double* a, const double* b, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

void soft_threshold(const double* v, const double* t, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double m = std::fabs(v[i]) - t[i];
    out[i] = m > 0.0 ? std::copysign(m, v[i]) : 0.0;
  }
}

}  // namespace scalar

#ifdef COAST_HAVE_AVX2_TU
namespace avx2 {
double dot(const double* a, const double* b, std::size_t n);
void axpy(double a, const double* x, double* y, std::size_t n);
double sum(const double* x, std::size_t n);
double sumsq(const double* x, std::size_t n);
double sq_dist(const double* a, const double* b, std::size_t n);
void soft_threshold(const double* v, const double* t, double* out, std::size_t n);
}  // namespace avx2
#endif

namespace {

struct KernelTable {
  double (*dot)(const double*, const double*, std::size_t);
  void (*axpy)(double, const double*, double*, std::size_t);
  double (*sum)(const double*, std::size_t);
  double (*sumsq)(const double*, std::size_t);
  double (*sq_dist)(const double*, const double*, std::size_t);
  void (*soft_threshold)(const double*, const double*, double*, std::size_t);
};

constexpr KernelTable kScalarTable{scalar::dot,   scalar::axpy,    scalar::sum,
                                   scalar::sumsq, scalar::sq_dist, scalar::soft_threshold};

#ifdef COAST_HAVE_AVX2_TU
constexpr KernelTable kAvx2Table{avx2::dot,   avx2::axpy,    avx2::sum,
                                 avx2::sumsq, avx2::sq_dist, avx2::soft_threshold};
#endif

bool cpu_has_avx2() {
#if defined(COAST_HAVE_AVX2_TU) && defined(__GNUC__)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Lane resolve_initial_lane() {
  const char* env = std::getenv("COAST_SIMD");
  const std::string mode = env ? env : "auto";
  if (mode == "scalar") return Lane::scalar;
  if (mode == "avx2") {
    if (!lane_available(Lane::avx2))
      throw Error("COAST_SIMD=avx2 requested but AVX2 is not available on this CPU/build");
    return Lane::avx2;
  }
  return lane_available(Lane::avx2) ? Lane::avx2 : Lane::scalar;
}

Lane g_lane = resolve_initial_lane();

const KernelTable& table() {
#ifdef COAST_HAVE_AVX2_TU
  if (g_lane == Lane::avx2) return kAvx2Table;
#endif
  return kScalarTable;
}

}  // namespace

Lane active_lane() { return g_lane; }

bool lane_available(Lane lane) {
  if (lane == Lane::scalar) return true;
  return cpu_has_avx2();
}

const char* lane_name(Lane lane) { return lane == Lane::scalar ? "scalar" : "avx2"; }

void force_lane(Lane lane) {
  if (!lane_available(lane))
    throw Error(std::string("kernel lane not available: ") + lane_name(lane));
  g_lane = lane;
}

double dot(const double* a, const double* b, std::size_t n) { return table().dot(a, b, n); }
void axpy(double a, const double* x, double* y, std::size_t n) { table().axpy(a, x, y, n); }
double sum(const double* x, std::size_t n) { return table().sum(x, n); }
double sumsq(const double* x, std::size_t n) { return table().sumsq(x, n); }
double sq_dist(const double* a, const double* b, std::size_t n) { return table().sq_dist(a, b, n); }
void soft_threshold(const double* v, const double* t, double* out, std::size_t n) {
  table().soft_threshold(v, t, out, n);
}

}  // namespace coast::kernels
