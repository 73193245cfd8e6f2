#pragma once

#include <functional>
#include <vector>

#include "zk/fft.hpp"
#include "zk/field.hpp"

namespace zk {

// --- pointwise/quadrature helpers -----------------------------------------

// Discrete L2 pairing: sum f*g * cell area.
double inner(const RealField2D& f, const RealField2D& g);
double l2_norm(const RealField2D& f);
double integral(const RealField2D& f);
// ||f||_{H1}^2 = ||f||_2^2 + ||grad f||_2^2 with spectral gradient.
double h1_norm_sq(const RealField2D& f);
double max_abs(const RealField2D& f);

RealField2D sample(const Grid2D& g, const std::function<double(double, double)>& fn);

// --- spectral multipliers ---------------------------------------------------

// d^order/dy_axis^order, axis in {1,2}; odd orders zero the Nyquist plane.
RealField2D derivative(const RealField2D& f, int axis, int order = 1);
RealField2D laplacian(const RealField2D& f);

// D^r along one axis: multiplier |xi_axis|^r.  r must exceed -1; for r < 0
// the xi_axis = 0 plane is annihilated; r = 0 is the identity.
RealField2D fractional_derivative(const RealField2D& f, int axis, double r);

// Linear ZK group U(t) = exp(-t d_{x1} Laplacian): multiplier e^{i t xi1 |xi|^2}.
RealField2D linear_flow(const RealField2D& f, double t);
void linear_flow_inplace(SpectralField2D& c, double t);

// Scaling generator  Lf = f + y . grad f  (gradient spectral, y pointwise).
RealField2D scaling_operator(const RealField2D& f);

// --- 1D utilities -----------------------------------------------------------

double inner_1d(const Grid1D& g, const std::vector<double>& a, const std::vector<double>& b);
double integral_1d(const Grid1D& g, const std::vector<double>& f);
std::vector<double> derivative_1d(const Grid1D& g, const std::vector<double>& f, int order = 1);

// Antiderivative of a decaying sample set: returns I(y) = integral_{y}^{L} f,
// computed spectrally (mean handled separately).
std::vector<double> integral_to_right_1d(const Grid1D& g, const std::vector<double>& f);

// Row-wise version along axis 1: out(y1,y2) = integral_{y1}^{L1} f(t,y2) dt.
RealField2D integral_to_right_axis1(const RealField2D& f);

// Transverse reduction: out(y2) = sum_i f(y1_i, y2) * dx1.
std::vector<double> integrate_axis1(const RealField2D& f);
// out(y1) = sum_j f(y1, y2_j) * dx2.
std::vector<double> integrate_axis2(const RealField2D& f);

// Solve -u'' + u = rhs'' on the periodic axis: u_hat = -xi^2/(1+xi^2) rhs_hat.
std::vector<double> helmholtz_of_second_derivative_1d(const Grid1D& g, const std::vector<double>& rhs);

// y2-reflection f(y1,y2) -> f(y1,-y2) on the grid (index map), for parity checks.
RealField2D reflect_axis2(const RealField2D& f);
RealField2D reflect_axis1(const RealField2D& f);

// Tensor product t1 (x) t2 sampled on the grid.
RealField2D tensor(const Grid2D& g, const std::vector<double>& t1, const std::vector<double>& t2);

Grid1D axis1_grid(const Grid2D& g);
Grid1D axis2_grid(const Grid2D& g);

} // namespace zk
