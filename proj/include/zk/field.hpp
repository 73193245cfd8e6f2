#pragma once

#include <complex>
#include <memory>
#include <stdexcept>
#include <vector>

#include "zk/grid.hpp"

namespace zk {

using Complex = std::complex<double>;

class RealField2D {
public:
    RealField2D() = default;
    explicit RealField2D(const Grid2D& g, double fill = 0.0)
        : grid_(std::make_shared<Grid2D>(g)), v_(g.size(), fill) {}
    RealField2D(std::shared_ptr<const Grid2D> g, double fill = 0.0)
        : grid_(std::move(g)), v_(grid_->size(), fill) {}

    const Grid2D& grid() const { return *grid_; }
    std::shared_ptr<const Grid2D> grid_ptr() const { return grid_; }
    bool empty() const { return grid_ == nullptr; }
    double* data() { return v_.data(); }
    const double* data() const { return v_.data(); }
    std::size_t size() const { return v_.size(); }
    double& operator[](std::size_t i) { return v_[i]; }
    double operator[](std::size_t i) const { return v_[i]; }
    double& at(int i1, int i2) { return v_[static_cast<std::size_t>(i1) * grid_->n2() + i2]; }
    double at(int i1, int i2) const { return v_[static_cast<std::size_t>(i1) * grid_->n2() + i2]; }
    std::vector<double>& values() { return v_; }
    const std::vector<double>& values() const { return v_; }

private:
    std::shared_ptr<const Grid2D> grid_;
    std::vector<double> v_;
};

// Fourier coefficients of a real field, r2c layout: n1 x (n2/2+1), axis-2
// conjugate half retained.  Normalized so that 2*pi*coefficient(0,0) equals
// the integral of the field.
class SpectralField2D {
public:
    SpectralField2D() = default;
    explicit SpectralField2D(const Grid2D& g, Complex fill = Complex(0.0, 0.0))
        : grid_(std::make_shared<Grid2D>(g)), c_(g.spectral_size(), fill) {}
    SpectralField2D(std::shared_ptr<const Grid2D> g, Complex fill = Complex(0.0, 0.0))
        : grid_(std::move(g)), c_(grid_->spectral_size(), fill) {}

    const Grid2D& grid() const { return *grid_; }
    std::shared_ptr<const Grid2D> grid_ptr() const { return grid_; }
    bool empty() const { return grid_ == nullptr; }
    Complex* data() { return c_.data(); }
    const Complex* data() const { return c_.data(); }
    std::size_t size() const { return c_.size(); }
    Complex& operator[](std::size_t i) { return c_[i]; }
    const Complex& operator[](std::size_t i) const { return c_[i]; }
    Complex& at(int k1, int k2) { return c_[static_cast<std::size_t>(k1) * grid_->nk2() + k2]; }
    const Complex& at(int k1, int k2) const { return c_[static_cast<std::size_t>(k1) * grid_->nk2() + k2]; }

private:
    std::shared_ptr<const Grid2D> grid_;
    std::vector<Complex> c_;
};

inline void require_same_grid(const RealField2D& a, const RealField2D& b)
{
    if (a.grid() != b.grid()) throw std::invalid_argument("fields live on different grids");
}

} // namespace zk
