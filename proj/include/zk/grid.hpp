#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace zk {

// Periodic truncation of the plane: box [-L1, L1) x [-L2, L2) sampled on an
// n1 x n2 uniform lattice, row-major (axis 1 outer, axis 2 inner).
// Wavenumber entry k is pi*k_signed/L_j, signed in FFT order; index 0 carries
// wavenumber 0.
class Grid2D {
public:
    Grid2D(int n1, int n2, double half_width1, double half_width2)
        : n1_(n1), n2_(n2), L1_(half_width1), L2_(half_width2)
    {
        if (n1 < 16 || n2 < 16 || n1 % 2 != 0 || n2 % 2 != 0)
            throw std::invalid_argument("Grid2D: point counts must be even and >= 16");
        if (!(half_width1 > 0.0) || !(half_width2 > 0.0))
            throw std::invalid_argument("Grid2D: half-widths must be positive");
        y1_.resize(n1);
        y2_.resize(n2);
        for (int i = 0; i < n1; ++i) y1_[i] = -L1_ + dx1() * i;
        for (int j = 0; j < n2; ++j) y2_[j] = -L2_ + dx2() * j;
        xi1_.resize(n1);
        xi2_.resize(n2);
        for (int k = 0; k < n1; ++k) xi1_[k] = M_PI * signed_index(k, n1) / L1_;
        for (int k = 0; k < n2; ++k) xi2_[k] = M_PI * signed_index(k, n2) / L2_;
    }

    int n1() const { return n1_; }
    int n2() const { return n2_; }
    double half_width1() const { return L1_; }
    double half_width2() const { return L2_; }
    double dx1() const { return 2.0 * L1_ / n1_; }
    double dx2() const { return 2.0 * L2_ / n2_; }
    double cell_area() const { return dx1() * dx2(); }
    std::size_t size() const { return static_cast<std::size_t>(n1_) * n2_; }
    // Stored spectral modes for a real field (r2c along axis 2).
    int nk2() const { return n2_ / 2 + 1; }
    std::size_t spectral_size() const { return static_cast<std::size_t>(n1_) * nk2(); }

    double y1(int i) const { return y1_[i]; }
    double y2(int j) const { return y2_[j]; }
    double xi1(int k) const { return xi1_[k]; }
    double xi2(int k) const { return xi2_[k]; }
    const std::vector<double>& y1() const { return y1_; }
    const std::vector<double>& y2() const { return y2_; }
    const std::vector<double>& xi1() const { return xi1_; }
    const std::vector<double>& xi2() const { return xi2_; }

    static int signed_index(int k, int n) { return (k <= n / 2) ? k : k - n; }

    bool operator==(const Grid2D& o) const
    {
        return n1_ == o.n1_ && n2_ == o.n2_ && L1_ == o.L1_ && L2_ == o.L2_;
    }
    bool operator!=(const Grid2D& o) const { return !(*this == o); }

private:
    int n1_, n2_;
    double L1_, L2_;
    std::vector<double> y1_, y2_, xi1_, xi2_;
};

// 1D uniform periodic axis, used for the transverse profiles F, h2 and the
// y1 weight functions.
class Grid1D {
public:
    Grid1D(int n, double half_width) : n_(n), L_(half_width)
    {
        if (n < 16 || n % 2 != 0) throw std::invalid_argument("Grid1D: n must be even and >= 16");
        if (!(half_width > 0.0)) throw std::invalid_argument("Grid1D: half-width must be positive");
        y_.resize(n);
        xi_.resize(n);
        for (int i = 0; i < n; ++i) y_[i] = -L_ + dx() * i;
        for (int k = 0; k < n; ++k) xi_[k] = M_PI * Grid2D::signed_index(k, n) / L_;
    }
    int n() const { return n_; }
    double half_width() const { return L_; }
    double dx() const { return 2.0 * L_ / n_; }
    int nk() const { return n_ / 2 + 1; }
    double y(int i) const { return y_[i]; }
    double xi(int k) const { return xi_[k]; }
    const std::vector<double>& y() const { return y_; }
    const std::vector<double>& xi() const { return xi_; }
    bool operator==(const Grid1D& o) const { return n_ == o.n_ && L_ == o.L_; }

private:
    int n_;
    double L_;
    std::vector<double> y_, xi_;
};

} // namespace zk
