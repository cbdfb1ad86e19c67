#pragma once

#include <cstddef>

// Numeric inner loops shared by the statistics and classifier code. Every
// kernel has a scalar reference implementation (kernels::ref) and an AVX2
// variant; the dispatching entry points pick the widest ISA the CPU supports
// at runtime. set_force_scalar(true) pins the reference path, which the
// equivalence tests use to compare both implementations on the same machine.
namespace bdscv::kernels {

// Reference implementations. Plain loops, no intrinsics.
namespace ref {
double dot(const double* a, const double* b, std::size_t n);
double sum(const double* a, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
double sum_sq_dev(const double* a, std::size_t n, double mean);
double scaled_sq_dev_sum(const double* x, const double* mu,
                         const double* inv_sd, std::size_t n);
std::size_t count_in_range(const double* a, std::size_t n, double lo,
                           double hi);
}  // namespace ref

double dot(const double* a, const double* b, std::size_t n);
double sum(const double* a, std::size_t n);
// y += alpha * x
void axpy(double alpha, const double* x, double* y, std::size_t n);
// sum of (a[i] - mean)^2
double sum_sq_dev(const double* a, std::size_t n, double mean);
// sum of ((x[i] - mu[i]) * inv_sd[i])^2
double scaled_sq_dev_sum(const double* x, const double* mu,
                         const double* inv_sd, std::size_t n);
// number of i with lo <= a[i] < hi
std::size_t count_in_range(const double* a, std::size_t n, double lo,
                           double hi);

void set_force_scalar(bool v);
bool force_scalar();

// "avx2" or "scalar", after the force flag is applied.
const char* active_impl();

}  // namespace bdscv::kernels
