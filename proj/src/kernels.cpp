#include "zk/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <fftw3.h>
#include <omp.h>
#include <vector>

namespace zk {

namespace {
int g_threads = 1;
bool g_fftw_threads_ready = false;
} // namespace

void set_num_threads(int n)
{
    g_threads = std::max(1, n);
    omp_set_num_threads(g_threads);
    if (!g_fftw_threads_ready) {
        fftw_init_threads();
        g_fftw_threads_ready = true;
    }
    fftw_plan_with_nthreads(g_threads);
}

int num_threads() { return g_threads; }

namespace kern {

// Deterministic parallel reduction: static chunks, partial sums combined in
// thread order.
template <class F>
static double reduce_blocks(std::size_t n, F&& block_sum)
{
    const int nt = num_threads();
    if (nt <= 1 || n < 1024) return block_sum(std::size_t(0), n);
    std::vector<double> partial(nt, 0.0);
#pragma omp parallel num_threads(nt)
    {
        const int t = omp_get_thread_num();
        const std::size_t chunk = (n + nt - 1) / nt;
        const std::size_t lo = std::min(n, chunk * t);
        const std::size_t hi = std::min(n, lo + chunk);
        partial[t] = block_sum(lo, hi);
    }
    double s = 0.0;
    for (double p : partial) s += p;
    return s;
}

void fill(double* y, std::size_t n, double v)
{
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < (std::ptrdiff_t)n; ++i) y[i] = v;
}

void copy(double* y, const double* x, std::size_t n)
{
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < (std::ptrdiff_t)n; ++i) y[i] = x[i];
}

void scale(double* y, std::size_t n, double a)
{
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < (std::ptrdiff_t)n; ++i) y[i] *= a;
}

void axpy(double* y, const double* x, std::size_t n, double a)
{
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < (std::ptrdiff_t)n; ++i) y[i] += a * x[i];
}

void axpby(double* y, const double* x, std::size_t n, double a, double b)
{
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < (std::ptrdiff_t)n; ++i) y[i] = a * x[i] + b * y[i];
}

void mul(double* z, const double* x, const double* y, std::size_t n)
{
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < (std::ptrdiff_t)n; ++i) z[i] = x[i] * y[i];
}

void mul_add(double* z, const double* x, const double* y, std::size_t n, double a)
{
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < (std::ptrdiff_t)n; ++i) z[i] += a * x[i] * y[i];
}

void cube(double* y, const double* x, std::size_t n)
{
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < (std::ptrdiff_t)n; ++i) y[i] = x[i] * x[i] * x[i];
}

double dot(const double* x, const double* y, std::size_t n)
{
    return reduce_blocks(n, [&](std::size_t lo, std::size_t hi) {
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) s += x[i] * y[i];
        return s;
    });
}

double dot3(const double* x, const double* y, const double* w, std::size_t n)
{
    return reduce_blocks(n, [&](std::size_t lo, std::size_t hi) {
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) s += x[i] * y[i] * w[i];
        return s;
    });
}

double sum(const double* x, std::size_t n)
{
    return reduce_blocks(n, [&](std::size_t lo, std::size_t hi) {
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) s += x[i];
        return s;
    });
}

double max_abs(const double* x, std::size_t n)
{
    const int nt = num_threads();
    if (nt <= 1 || n < 1024) return serial::max_abs(x, n);
    std::vector<double> partial(nt, 0.0);
#pragma omp parallel num_threads(nt)
    {
        const int t = omp_get_thread_num();
        const std::size_t chunk = (n + nt - 1) / nt;
        const std::size_t lo = std::min(n, chunk * t);
        const std::size_t hi = std::min(n, lo + chunk);
        double m = 0.0;
        for (std::size_t i = lo; i < hi; ++i) m = std::max(m, std::fabs(x[i]));
        partial[t] = m;
    }
    return *std::max_element(partial.begin(), partial.end());
}

bool all_finite(const double* x, std::size_t n)
{
    bool ok = true;
#pragma omp parallel for schedule(static) reduction(&& : ok)
    for (std::ptrdiff_t i = 0; i < (std::ptrdiff_t)n; ++i) ok = ok && std::isfinite(x[i]);
    return ok;
}

void apply_multiplier_real(Complex* c, const double* m, std::size_t n)
{
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < (std::ptrdiff_t)n; ++i) c[i] *= m[i];
}

void apply_multiplier_complex(Complex* c, const Complex* m, std::size_t n)
{
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < (std::ptrdiff_t)n; ++i) c[i] *= m[i];
}

void caxpy(Complex* y, const Complex* x, std::size_t n, Complex a)
{
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < (std::ptrdiff_t)n; ++i) y[i] += a * x[i];
}

namespace serial {

void fill(double* y, std::size_t n, double v) { for (std::size_t i = 0; i < n; ++i) y[i] = v; }
void copy(double* y, const double* x, std::size_t n) { for (std::size_t i = 0; i < n; ++i) y[i] = x[i]; }
void scale(double* y, std::size_t n, double a) { for (std::size_t i = 0; i < n; ++i) y[i] *= a; }
void axpy(double* y, const double* x, std::size_t n, double a) { for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i]; }
void axpby(double* y, const double* x, std::size_t n, double a, double b)
{
    for (std::size_t i = 0; i < n; ++i) y[i] = a * x[i] + b * y[i];
}
void mul(double* z, const double* x, const double* y, std::size_t n) { for (std::size_t i = 0; i < n; ++i) z[i] = x[i] * y[i]; }
void mul_add(double* z, const double* x, const double* y, std::size_t n, double a)
{
    for (std::size_t i = 0; i < n; ++i) z[i] += a * x[i] * y[i];
}
void cube(double* y, const double* x, std::size_t n) { for (std::size_t i = 0; i < n; ++i) y[i] = x[i] * x[i] * x[i]; }

double dot(const double* x, const double* y, std::size_t n)
{
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += x[i] * y[i];
    return s;
}
double dot3(const double* x, const double* y, const double* w, std::size_t n)
{
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += x[i] * y[i] * w[i];
    return s;
}
double sum(const double* x, std::size_t n)
{
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += x[i];
    return s;
}
double max_abs(const double* x, std::size_t n)
{
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::fabs(x[i]));
    return m;
}
bool all_finite(const double* x, std::size_t n)
{
    for (std::size_t i = 0; i < n; ++i)
        if (!std::isfinite(x[i])) return false;
    return true;
}
void apply_multiplier_real(Complex* c, const double* m, std::size_t n) { for (std::size_t i = 0; i < n; ++i) c[i] *= m[i]; }
void apply_multiplier_complex(Complex* c, const Complex* m, std::size_t n) { for (std::size_t i = 0; i < n; ++i) c[i] *= m[i]; }
void caxpy(Complex* y, const Complex* x, std::size_t n, Complex a) { for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i]; }

} // namespace serial
} // namespace kern
} // namespace zk
