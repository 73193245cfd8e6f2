#pragma once

#include <complex>
#include <cstddef>

namespace zk {

// Global kernel-level thread count (OpenMP).  Also applied to FFTW plans.
void set_num_threads(int n);
int num_threads();

// Data-parallel inner loops.  Each kernel has a serial reference twin in
// kern::serial used by the parity tests and the benchmark; the OpenMP
// versions use per-thread partial sums combined in thread order so results
// are reproducible for a fixed thread count.
namespace kern {

using Complex = std::complex<double>;

void fill(double* y, std::size_t n, double value);
void copy(double* y, const double* x, std::size_t n);
void scale(double* y, std::size_t n, double a);
// y += a*x
void axpy(double* y, const double* x, std::size_t n, double a);
// y = a*x + b*y
void axpby(double* y, const double* x, std::size_t n, double a, double b);
// z = x*y elementwise
void mul(double* z, const double* x, const double* y, std::size_t n);
// z += a * x*y elementwise
void mul_add(double* z, const double* x, const double* y, std::size_t n, double a);
// y = x^3
void cube(double* y, const double* x, std::size_t n);

double dot(const double* x, const double* y, std::size_t n);
// sum of x_i * y_i * w_i
double dot3(const double* x, const double* y, const double* w, std::size_t n);
double sum(const double* x, std::size_t n);
double max_abs(const double* x, std::size_t n);
bool all_finite(const double* x, std::size_t n);

// Spectral coefficient loops; m is the multiplier sampled per stored mode.
void apply_multiplier_real(Complex* c, const double* m, std::size_t n);
void apply_multiplier_complex(Complex* c, const Complex* m, std::size_t n);
void caxpy(Complex* y, const Complex* x, std::size_t n, Complex a);

namespace serial {
void fill(double* y, std::size_t n, double value);
void copy(double* y, const double* x, std::size_t n);
void scale(double* y, std::size_t n, double a);
void axpy(double* y, const double* x, std::size_t n, double a);
void axpby(double* y, const double* x, std::size_t n, double a, double b);
void mul(double* z, const double* x, const double* y, std::size_t n);
void mul_add(double* z, const double* x, const double* y, std::size_t n, double a);
void cube(double* y, const double* x, std::size_t n);
double dot(const double* x, const double* y, std::size_t n);
double dot3(const double* x, const double* y, const double* w, std::size_t n);
double sum(const double* x, std::size_t n);
double max_abs(const double* x, std::size_t n);
bool all_finite(const double* x, std::size_t n);
void apply_multiplier_real(Complex* c, const double* m, std::size_t n);
void apply_multiplier_complex(Complex* c, const Complex* m, std::size_t n);
void caxpy(Complex* y, const Complex* x, std::size_t n, Complex a);
} // namespace serial

} // namespace kern
} // namespace zk
