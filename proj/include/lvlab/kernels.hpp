#pragma once

#include <complex>
#include <cstddef>
#include <string>

// Phase-sum kernels: the arithmetic inner loops shared by the Gram builder,
// Dirichlet evaluators, R-function sweeps, oscillatory quadrature panels and
// the Hardy Z sum. Scalar reference implementations plus an AVX2 variant,
// selected at runtime and equivalence-tested against each other.

namespace lvlab::kernels {

enum class Isa { Scalar, Avx2 };

bool cpu_has_avx2();
Isa active_isa();
void set_isa(Isa isa);     // override (tests, LVLAB_ISA env, CLI flag)
std::string isa_name(Isa isa);

// sum_k coef[k] * exp(i * t * x[k])
std::complex<double> phase_sum(const double* x, const double* coef, std::size_t n, double t);

// sum_k coef[k] * exp(i * (a*x[k] + b*y[k]))
std::complex<double> blend_phase_sum(const double* x, const double* y, const double* coef,
                                     std::size_t n, double a, double b);

// In-place rotate-and-accumulate step for grid scans:
//   cur[k] *= step[k];  out = sum_k cur[k]
// with cur and step split into re/im arrays.
std::complex<double> rotate_accumulate(double* cur_re, double* cur_im, const double* step_re,
                                       const double* step_im, std::size_t n);

// Fixed-ISA entry points used by the equivalence tests.
std::complex<double> phase_sum_scalar(const double* x, const double* coef, std::size_t n, double t);
std::complex<double> blend_phase_sum_scalar(const double* x, const double* y, const double* coef,
                                            std::size_t n, double a, double b);
std::complex<double> rotate_accumulate_scalar(double* cur_re, double* cur_im, const double* step_re,
                                              const double* step_im, std::size_t n);
#if defined(LVLAB_HAVE_AVX2)
std::complex<double> phase_sum_avx2(const double* x, const double* coef, std::size_t n, double t);
std::complex<double> blend_phase_sum_avx2(const double* x, const double* y, const double* coef,
                                          std::size_t n, double a, double b);
std::complex<double> rotate_accumulate_avx2(double* cur_re, double* cur_im, const double* step_re,
                                            const double* step_im, std::size_t n);
#endif

} // namespace lvlab::kernels
