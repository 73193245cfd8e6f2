#include "zk/ops.hpp"

#include <cmath>
#include <stdexcept>

#include "zk/kernels.hpp"

namespace zk {

double inner(const RealField2D& f, const RealField2D& g)
{
    require_same_grid(f, g);
    return kern::dot(f.data(), g.data(), f.size()) * f.grid().cell_area();
}

double l2_norm(const RealField2D& f) { return std::sqrt(inner(f, f)); }

double integral(const RealField2D& f) { return kern::sum(f.data(), f.size()) * f.grid().cell_area(); }

double max_abs(const RealField2D& f) { return kern::max_abs(f.data(), f.size()); }

double h1_norm_sq(const RealField2D& f)
{
    SpectralField2D c = forward_transform(f);
    const Grid2D& g = f.grid();
    const double dxi = (M_PI / g.half_width1()) * (M_PI / g.half_width2());
    double s = 0.0;
    for (int k1 = 0; k1 < g.n1(); ++k1) {
        const double x1 = g.xi1(k1);
        for (int k2 = 0; k2 < g.nk2(); ++k2) {
            const double x2 = g.xi2(k2);
            const bool edge = (k2 == 0) || (k2 == g.n2() / 2);
            s += (edge ? 1.0 : 2.0) * (1.0 + x1 * x1 + x2 * x2) * std::norm(c.at(k1, k2));
        }
    }
    return s * dxi;
}

RealField2D sample(const Grid2D& g, const std::function<double(double, double)>& fn)
{
    RealField2D out(g);
    for (int i = 0; i < g.n1(); ++i)
        for (int j = 0; j < g.n2(); ++j) out.at(i, j) = fn(g.y1(i), g.y2(j));
    return out;
}

RealField2D derivative(const RealField2D& f, int axis, int order)
{
    if (axis != 1 && axis != 2) throw std::invalid_argument("derivative: axis must be 1 or 2");
    SpectralField2D c = forward_transform(f);
    const Grid2D& g = f.grid();
    const bool odd = (order % 2) != 0;
    for (int k1 = 0; k1 < g.n1(); ++k1) {
        for (int k2 = 0; k2 < g.nk2(); ++k2) {
            double xi = (axis == 1) ? g.xi1(k1) : g.xi2(k2);
            // the unpaired Nyquist mode cannot carry an odd derivative
            if (odd && ((axis == 1 && k1 == g.n1() / 2) || (axis == 2 && k2 == g.n2() / 2))) {
                c.at(k1, k2) = 0.0;
                continue;
            }
            Complex m = std::pow(Complex(0.0, xi), order);
            c.at(k1, k2) *= m;
        }
    }
    return inverse_transform(c);
}

RealField2D laplacian(const RealField2D& f)
{
    SpectralField2D c = forward_transform(f);
    const Grid2D& g = f.grid();
    for (int k1 = 0; k1 < g.n1(); ++k1) {
        const double a = g.xi1(k1) * g.xi1(k1);
        for (int k2 = 0; k2 < g.nk2(); ++k2) {
            const double b = g.xi2(k2) * g.xi2(k2);
            c.at(k1, k2) *= -(a + b);
        }
    }
    return inverse_transform(c);
}

RealField2D fractional_derivative(const RealField2D& f, int axis, double r)
{
    if (axis != 1 && axis != 2) throw std::invalid_argument("fractional_derivative: axis must be 1 or 2");
    if (!(r > -1.0)) throw std::invalid_argument("fractional_derivative: order must exceed -1");
    if (r == 0.0) return f;
    SpectralField2D c = forward_transform(f);
    const Grid2D& g = f.grid();
    for (int k1 = 0; k1 < g.n1(); ++k1) {
        for (int k2 = 0; k2 < g.nk2(); ++k2) {
            const double xi = std::fabs((axis == 1) ? g.xi1(k1) : g.xi2(k2));
            double m;
            if (xi == 0.0)
                m = 0.0; // |xi|^r with r>0 vanishes; for r<0 the plane is annihilated
            else
                m = std::pow(xi, r);
            c.at(k1, k2) *= m;
        }
    }
    return inverse_transform(c);
}

void linear_flow_inplace(SpectralField2D& c, double t)
{
    const Grid2D& g = c.grid();
    for (int k1 = 0; k1 < g.n1(); ++k1) {
        const double x1 = g.xi1(k1);
        const double x1sq = x1 * x1;
        for (int k2 = 0; k2 < g.nk2(); ++k2) {
            const double x2 = g.xi2(k2);
            const double phase = t * x1 * (x1sq + x2 * x2);
            c.at(k1, k2) *= Complex(std::cos(phase), std::sin(phase));
        }
    }
}

RealField2D linear_flow(const RealField2D& f, double t)
{
    SpectralField2D c = forward_transform(f);
    linear_flow_inplace(c, t);
    return inverse_transform(c);
}

RealField2D scaling_operator(const RealField2D& f)
{
    const Grid2D& g = f.grid();
    RealField2D d1 = derivative(f, 1);
    RealField2D d2 = derivative(f, 2);
    RealField2D out(g);
    for (int i = 0; i < g.n1(); ++i) {
        const double y1 = g.y1(i);
        for (int j = 0; j < g.n2(); ++j)
            out.at(i, j) = f.at(i, j) + y1 * d1.at(i, j) + g.y2(j) * d2.at(i, j);
    }
    return out;
}

double inner_1d(const Grid1D& g, const std::vector<double>& a, const std::vector<double>& b)
{
    double s = 0.0;
    for (int i = 0; i < g.n(); ++i) s += a[i] * b[i];
    return s * g.dx();
}

double integral_1d(const Grid1D& g, const std::vector<double>& f)
{
    double s = 0.0;
    for (double v : f) s += v;
    return s * g.dx();
}

std::vector<double> derivative_1d(const Grid1D& g, const std::vector<double>& f, int order)
{
    auto c = forward_transform_1d(g, f);
    const bool odd = (order % 2) != 0;
    for (int k = 0; k < g.nk(); ++k) {
        if (odd && k == g.n() / 2) {
            c[k] = 0.0;
            continue;
        }
        c[k] *= std::pow(Complex(0.0, g.xi(k)), order);
    }
    return inverse_transform_1d(g, c);
}

std::vector<double> integral_to_right_1d(const Grid1D& g, const std::vector<double>& f)
{
    // f decays at the box edge; the mean part integrates linearly, the rest
    // has a periodic spectral antiderivative.
    auto c = forward_transform_1d(g, f);
    const double mean_total = integral_1d(g, f); // = sqrt(2 pi) * c[0] for sanity
    std::vector<Complex> a(g.nk(), Complex(0.0, 0.0));
    for (int k = 1; k < g.nk(); ++k) {
        if (k == g.n() / 2) continue;
        a[k] = c[k] / Complex(0.0, g.xi(k));
    }
    std::vector<double> A = inverse_transform_1d(g, a); // periodic antiderivative of f - mean
    // I(y) = int_y^L f = [A(L) - A(y)] + mean_density * (L - y)
    const double mean_density = mean_total / (2.0 * g.half_width());
    // periodic A: value at the right edge equals value at the left edge sample
    const double A_edge = A[0];
    std::vector<double> out(g.n());
    for (int i = 0; i < g.n(); ++i)
        out[i] = (A_edge - A[i]) + mean_density * (g.half_width() - g.y(i));
    return out;
}

RealField2D integral_to_right_axis1(const RealField2D& f)
{
    const Grid2D& g = f.grid();
    Grid1D ax = axis1_grid(g);
    RealField2D out(g);
    std::vector<double> line(g.n1());
    for (int j = 0; j < g.n2(); ++j) {
        for (int i = 0; i < g.n1(); ++i) line[i] = f.at(i, j);
        auto I = integral_to_right_1d(ax, line);
        for (int i = 0; i < g.n1(); ++i) out.at(i, j) = I[i];
    }
    return out;
}

std::vector<double> integrate_axis1(const RealField2D& f)
{
    const Grid2D& g = f.grid();
    std::vector<double> out(g.n2(), 0.0);
    for (int i = 0; i < g.n1(); ++i)
        for (int j = 0; j < g.n2(); ++j) out[j] += f.at(i, j);
    for (double& v : out) v *= g.dx1();
    return out;
}

std::vector<double> integrate_axis2(const RealField2D& f)
{
    const Grid2D& g = f.grid();
    std::vector<double> out(g.n1(), 0.0);
    for (int i = 0; i < g.n1(); ++i) {
        double s = 0.0;
        for (int j = 0; j < g.n2(); ++j) s += f.at(i, j);
        out[i] = s * g.dx2();
    }
    return out;
}

std::vector<double> helmholtz_of_second_derivative_1d(const Grid1D& g, const std::vector<double>& rhs)
{
    auto c = forward_transform_1d(g, rhs);
    for (int k = 0; k < g.nk(); ++k) {
        const double x2 = g.xi(k) * g.xi(k);
        c[k] *= -x2 / (1.0 + x2);
    }
    return inverse_transform_1d(g, c);
}

RealField2D reflect_axis2(const RealField2D& f)
{
    const Grid2D& g = f.grid();
    RealField2D out(g);
    for (int i = 0; i < g.n1(); ++i) {
        out.at(i, 0) = f.at(i, 0); // y2 = -L maps to itself under periodic reflection
        for (int j = 1; j < g.n2(); ++j) out.at(i, j) = f.at(i, g.n2() - j);
    }
    return out;
}

RealField2D reflect_axis1(const RealField2D& f)
{
    const Grid2D& g = f.grid();
    RealField2D out(g);
    for (int j = 0; j < g.n2(); ++j) {
        out.at(0, j) = f.at(0, j);
        for (int i = 1; i < g.n1(); ++i) out.at(i, j) = f.at(g.n1() - i, j);
    }
    return out;
}

RealField2D tensor(const Grid2D& g, const std::vector<double>& t1, const std::vector<double>& t2)
{
    if ((int)t1.size() != g.n1() || (int)t2.size() != g.n2())
        throw std::invalid_argument("tensor: size mismatch");
    RealField2D out(g);
    for (int i = 0; i < g.n1(); ++i)
        for (int j = 0; j < g.n2(); ++j) out.at(i, j) = t1[i] * t2[j];
    return out;
}

Grid1D axis1_grid(const Grid2D& g) { return Grid1D(g.n1(), g.half_width1()); }
Grid1D axis2_grid(const Grid2D& g) { return Grid1D(g.n2(), g.half_width2()); }

} // namespace zk
