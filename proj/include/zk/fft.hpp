#pragma once

#include <vector>

#include "zk/field.hpp"
#include "zk/grid.hpp"

namespace zk {

// Forward/inverse transforms in the symmetric normalization
//   fhat(xi) = (2*pi)^{-1} * sum f(x) e^{-i xi.x} dA,
// so the discrete Plancherel identity
//   sum |f|^2 dA = sum' |fhat|^2 dXi
// holds exactly (sum' counts the conjugate half twice).
SpectralField2D forward_transform(const RealField2D& f);
RealField2D inverse_transform(const SpectralField2D& c);

// 1D analogues on a periodic axis, normalization (2*pi)^{-1/2} * sum f e^{-i xi y} dy.
std::vector<Complex> forward_transform_1d(const Grid1D& g, const std::vector<double>& f);
std::vector<double> inverse_transform_1d(const Grid1D& g, const std::vector<Complex>& c);

// Plancherel-weighted spectral norm squared (equals the physical L2 norm
// squared for transforms of real fields).
double spectral_norm_sq(const SpectralField2D& c);

} // namespace zk
