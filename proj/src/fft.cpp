#include "zk/fft.hpp"

#include <fftw3.h>
#include <map>
#include <mutex>
#include <stdexcept>

namespace zk {

namespace {

// One cached plan pair (and scratch) per lattice size.  FFTW_ESTIMATE keeps
// plan selection deterministic across runs.
struct PlanSet {
    int n1 = 0, n2 = 0;
    fftw_plan r2c = nullptr;
    fftw_plan c2r = nullptr;
    double* real_buf = nullptr;
    fftw_complex* cplx_buf = nullptr;
    std::mutex mtx;

    ~PlanSet()
    {
        if (r2c) fftw_destroy_plan(r2c);
        if (c2r) fftw_destroy_plan(c2r);
        if (real_buf) fftw_free(real_buf);
        if (cplx_buf) fftw_free(cplx_buf);
    }
};

std::mutex g_registry_mtx;
std::map<std::pair<int, int>, PlanSet*>& registry()
{
    static std::map<std::pair<int, int>, PlanSet*> r;
    return r;
}

PlanSet& plans_for(int n1, int n2)
{
    std::lock_guard<std::mutex> lock(g_registry_mtx);
    auto key = std::make_pair(n1, n2);
    auto it = registry().find(key);
    if (it != registry().end()) return *it->second;
    auto* ps = new PlanSet;
    ps->n1 = n1;
    ps->n2 = n2;
    ps->real_buf = fftw_alloc_real(static_cast<std::size_t>(n1) * n2);
    ps->cplx_buf = fftw_alloc_complex(static_cast<std::size_t>(n1) * (n2 / 2 + 1));
    ps->r2c = fftw_plan_dft_r2c_2d(n1, n2, ps->real_buf, ps->cplx_buf, FFTW_ESTIMATE);
    ps->c2r = fftw_plan_dft_c2r_2d(n1, n2, ps->cplx_buf, ps->real_buf, FFTW_ESTIMATE);
    registry()[key] = ps;
    return *ps;
}

struct Plan1D {
    int n = 0;
    fftw_plan r2c = nullptr;
    fftw_plan c2r = nullptr;
    double* real_buf = nullptr;
    fftw_complex* cplx_buf = nullptr;
    std::mutex mtx;
    ~Plan1D()
    {
        if (r2c) fftw_destroy_plan(r2c);
        if (c2r) fftw_destroy_plan(c2r);
        if (real_buf) fftw_free(real_buf);
        if (cplx_buf) fftw_free(cplx_buf);
    }
};

Plan1D& plans_1d(int n)
{
    std::lock_guard<std::mutex> lock(g_registry_mtx);
    static std::map<int, Plan1D*> r;
    auto it = r.find(n);
    if (it != r.end()) return *it->second;
    auto* p = new Plan1D;
    p->n = n;
    p->real_buf = fftw_alloc_real(n);
    p->cplx_buf = fftw_alloc_complex(n / 2 + 1);
    p->r2c = fftw_plan_dft_r2c_1d(n, p->real_buf, p->cplx_buf, FFTW_ESTIMATE);
    p->c2r = fftw_plan_dft_c2r_1d(n, p->cplx_buf, p->real_buf, FFTW_ESTIMATE);
    r[n] = p;
    return *p;
}

} // namespace

SpectralField2D forward_transform(const RealField2D& f)
{
    const Grid2D& g = f.grid();
    PlanSet& ps = plans_for(g.n1(), g.n2());
    std::lock_guard<std::mutex> lock(ps.mtx);
    const std::size_t n = g.size();
    for (std::size_t i = 0; i < n; ++i) ps.real_buf[i] = f[i];
    fftw_execute(ps.r2c);
    SpectralField2D out(g);
    const double scale = g.cell_area() / (2.0 * M_PI);
    const std::size_t m = g.spectral_size();
    for (std::size_t i = 0; i < m; ++i)
        out[i] = Complex(ps.cplx_buf[i][0], ps.cplx_buf[i][1]) * scale;
    return out;
}

RealField2D inverse_transform(const SpectralField2D& c)
{
    const Grid2D& g = c.grid();
    PlanSet& ps = plans_for(g.n1(), g.n2());
    std::lock_guard<std::mutex> lock(ps.mtx);
    const std::size_t m = g.spectral_size();
    // Undo both the forward scale and FFTW's unnormalized inverse.
    const double scale = (2.0 * M_PI) / (g.cell_area() * g.size());
    for (std::size_t i = 0; i < m; ++i) {
        ps.cplx_buf[i][0] = c[i].real() * scale;
        ps.cplx_buf[i][1] = c[i].imag() * scale;
    }
    fftw_execute(ps.c2r);
    RealField2D out(g);
    const std::size_t n = g.size();
    for (std::size_t i = 0; i < n; ++i) out[i] = ps.real_buf[i];
    return out;
}

std::vector<Complex> forward_transform_1d(const Grid1D& g, const std::vector<double>& f)
{
    if (static_cast<int>(f.size()) != g.n()) throw std::invalid_argument("forward_transform_1d: size mismatch");
    Plan1D& p = plans_1d(g.n());
    std::lock_guard<std::mutex> lock(p.mtx);
    for (int i = 0; i < g.n(); ++i) p.real_buf[i] = f[i];
    fftw_execute(p.r2c);
    std::vector<Complex> out(g.nk());
    const double scale = g.dx() / std::sqrt(2.0 * M_PI);
    for (int k = 0; k < g.nk(); ++k) out[k] = Complex(p.cplx_buf[k][0], p.cplx_buf[k][1]) * scale;
    return out;
}

std::vector<double> inverse_transform_1d(const Grid1D& g, const std::vector<Complex>& c)
{
    if (static_cast<int>(c.size()) != g.nk()) throw std::invalid_argument("inverse_transform_1d: size mismatch");
    Plan1D& p = plans_1d(g.n());
    std::lock_guard<std::mutex> lock(p.mtx);
    const double scale = std::sqrt(2.0 * M_PI) / (g.dx() * g.n());
    for (int k = 0; k < g.nk(); ++k) {
        p.cplx_buf[k][0] = c[k].real() * scale;
        p.cplx_buf[k][1] = c[k].imag() * scale;
    }
    fftw_execute(p.c2r);
    std::vector<double> out(g.n());
    for (int i = 0; i < g.n(); ++i) out[i] = p.real_buf[i];
    return out;
}

double spectral_norm_sq(const SpectralField2D& c)
{
    const Grid2D& g = c.grid();
    const double dxi = (M_PI / g.half_width1()) * (M_PI / g.half_width2());
    double s = 0.0;
    const int nk2 = g.nk2();
    for (int k1 = 0; k1 < g.n1(); ++k1) {
        for (int k2 = 0; k2 < nk2; ++k2) {
            const double a = std::norm(c.at(k1, k2));
            // conjugate-half weight: interior axis-2 modes stand for two modes
            const bool edge = (k2 == 0) || (k2 == g.n2() / 2);
            s += (edge ? 1.0 : 2.0) * a;
        }
    }
    return s * dxi;
}

} // namespace zk
