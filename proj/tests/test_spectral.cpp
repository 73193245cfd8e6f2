#include <doctest.h>

#include <cmath>

#include "zk/fft.hpp"
#include "zk/kernels.hpp"
#include "zk/ops.hpp"

using namespace zk;

namespace {
Grid2D test_grid() { return Grid2D(128, 128, 20.0, 20.0); }

RealField2D gaussian(const Grid2D& g, double s = 1.0)
{
    return sample(g, [s](double a, double b) { return std::exp(-(a * a + b * b) / (2.0 * s * s)); });
}
} // namespace

TEST_CASE("grid wavenumbers follow pi k / L")
{
    Grid2D g(64, 32, 10.0, 5.0);
    CHECK(g.xi1(0) == 0.0);
    CHECK(g.xi1(1) == doctest::Approx(M_PI / 10.0));
    CHECK(g.xi1(63) == doctest::Approx(-M_PI / 10.0));
    CHECK(g.xi2(1) == doctest::Approx(M_PI / 5.0));
    CHECK_THROWS(Grid2D(15, 32, 1.0, 1.0));
    CHECK_THROWS(Grid2D(64, 32, -1.0, 1.0));
}

TEST_CASE("constant field transforms to a delta at zero frequency")
{
    Grid2D g = test_grid();
    RealField2D one(g, 1.0);
    auto c = forward_transform(one);
    double off = 0.0;
    for (std::size_t i = 1; i < c.size(); ++i) off = std::max(off, std::abs(c[i]));
    CHECK(off < 1e-12 * std::abs(c[0]));
    // integral of the field = 2 pi * coefficient(0)
    CHECK(2.0 * M_PI * c[0].real() == doctest::Approx(integral(one)).epsilon(1e-12));
}

TEST_CASE("cosine on a matched grid excites exactly two coefficients")
{
    Grid2D g = test_grid();
    const double k = g.xi1(3);
    RealField2D f = sample(g, [k](double a, double) { return std::cos(k * a); });
    auto c = forward_transform(f);
    double rest = 0.0, peak = 0.0;
    for (int k1 = 0; k1 < g.n1(); ++k1)
        for (int k2 = 0; k2 < g.nk2(); ++k2) {
            const double a = std::abs(c.at(k1, k2));
            if ((k1 == 3 || k1 == g.n1() - 3) && k2 == 0)
                peak = std::max(peak, a);
            else
                rest = std::max(rest, a);
        }
    CHECK(rest < 1e-13 * peak);
}

TEST_CASE("Gaussian transform matches the closed form")
{
    // exp(-|x|^2/2) has transform exp(-|xi|^2/2) in the symmetric convention
    Grid2D g = test_grid();
    RealField2D f = gaussian(g);
    auto c = forward_transform(f);
    double werr = 0.0;
    for (int k1 = 0; k1 < g.n1(); ++k1)
        for (int k2 = 0; k2 < g.nk2(); ++k2) {
            const double x1 = g.xi1(k1), x2 = g.xi2(k2);
            const double expect = std::exp(-(x1 * x1 + x2 * x2) / 2.0);
            werr = std::max(werr, std::abs(c.at(k1, k2) - Complex(expect, 0.0)));
        }
    CHECK(werr < 1e-10);
}

TEST_CASE("Plancherel and round trip")
{
    Grid2D g = test_grid();
    RealField2D f = sample(g, [](double a, double b) {
        return std::exp(-(a * a + b * b) / 4.0) * (1.0 + 0.5 * std::sin(2.0 * a) * std::cos(b));
    });
    auto c = forward_transform(f);
    CHECK(spectral_norm_sq(c) == doctest::Approx(inner(f, f)).epsilon(1e-12));
    RealField2D back = inverse_transform(c);
    kern::axpy(back.data(), f.data(), back.size(), -1.0);
    CHECK(max_abs(back) < 1e-12 * max_abs(f));
}

TEST_CASE("fractional derivative basics")
{
    Grid2D g = test_grid();
    RealField2D f = gaussian(g, 2.0);
    SUBCASE("r = 0 is the identity")
    {
        RealField2D d = fractional_derivative(f, 1, 0.0);
        kern::axpy(d.data(), f.data(), d.size(), -1.0);
        CHECK(max_abs(d) == 0.0);
    }
    SUBCASE("r = 2 on a cosine multiplies by k^2")
    {
        const double k = g.xi1(5);
        RealField2D cosf = sample(g, [k](double a, double) { return std::cos(k * a); });
        RealField2D d = fractional_derivative(cosf, 1, 2.0);
        kern::axpy(d.data(), cosf.data(), d.size(), -k * k);
        CHECK(max_abs(d) < 1e-10 * k * k);
    }
    SUBCASE("negative then positive order round-trips on zero-mean input")
    {
        // remove the xi1 = 0 plane first
        RealField2D f0 = derivative(f, 1); // guaranteed zero plane
        RealField2D r1 = fractional_derivative(f0, 1, -2.0 / 9.0);
        RealField2D r2 = fractional_derivative(r1, 1, 2.0 / 9.0);
        kern::axpy(r2.data(), f0.data(), r2.size(), -1.0);
        CHECK(max_abs(r2) < 1e-10 * max_abs(f0));
    }
    SUBCASE("order at or below -1 is rejected")
    {
        CHECK_THROWS(fractional_derivative(f, 1, -1.0));
        CHECK_THROWS(fractional_derivative(f, 2, -1.5));
    }
}

TEST_CASE("linear flow conserves the L2 norm and advances single-mode phases")
{
    Grid2D g = test_grid();
    RealField2D f = sample(g, [](double a, double b) {
        return std::exp(-(a * a + b * b) / 6.0) * (1.0 + 0.3 * std::sin(a + b));
    });
    SUBCASE("t = 0 is the identity")
    {
        RealField2D u = linear_flow(f, 0.0);
        kern::axpy(u.data(), f.data(), u.size(), -1.0);
        CHECK(max_abs(u) < 1e-14);
    }
    SUBCASE("unitary")
    {
        RealField2D u = linear_flow(f, 0.37);
        CHECK(l2_norm(u) == doctest::Approx(l2_norm(f)).epsilon(1e-13));
    }
    SUBCASE("single mode phase = t k1 (k1^2 + k2^2)")
    {
        const double k1 = g.xi1(2), k2 = g.xi2(3);
        RealField2D mode = sample(g, [=](double a, double b) { return std::cos(k1 * a + k2 * b); });
        const double t = 0.173;
        RealField2D u = linear_flow(mode, t);
        const double phase = t * k1 * (k1 * k1 + k2 * k2);
        RealField2D expect = sample(g, [=](double a, double b) { return std::cos(k1 * a + k2 * b + phase); });
        kern::axpy(expect.data(), u.data(), expect.size(), -1.0);
        CHECK(max_abs(expect) < 1e-12);
    }
    SUBCASE("group property")
    {
        RealField2D u1 = linear_flow(linear_flow(f, 0.21), 0.34);
        RealField2D u2 = linear_flow(f, 0.55);
        kern::axpy(u1.data(), u2.data(), u1.size(), -1.0);
        CHECK(max_abs(u1) < 1e-12 * max_abs(f));
    }
    SUBCASE("commutes with fractional derivative")
    {
        RealField2D a = fractional_derivative(linear_flow(f, 0.4), 1, 0.5);
        RealField2D b = linear_flow(fractional_derivative(f, 1, 0.5), 0.4);
        kern::axpy(a.data(), b.data(), a.size(), -1.0);
        CHECK(max_abs(a) < 1e-12 * max_abs(b));
    }
    SUBCASE("time reversal of the linear group")
    {
        RealField2D u = linear_flow(linear_flow(f, 1.3), -1.3);
        kern::axpy(u.data(), f.data(), u.size(), -1.0);
        CHECK(max_abs(u) < 1e-12 * max_abs(f));
    }
}

TEST_CASE("scaling operator")
{
    Grid2D g = test_grid();
    SUBCASE("constant field maps to itself")
    {
        RealField2D one(g, 1.0);
        RealField2D s = scaling_operator(one);
        kern::axpy(s.data(), one.data(), s.size(), -1.0);
        CHECK(max_abs(s) < 1e-11);
    }
    SUBCASE("integral of Lambda f equals minus integral of f for decaying f")
    {
        RealField2D f = gaussian(g, 2.5);
        CHECK(integral(scaling_operator(f)) == doctest::Approx(-integral(f)).epsilon(1e-10));
    }
}

TEST_CASE("spectral antiderivative to the right")
{
    Grid1D g(256, 20.0);
    std::vector<double> f(g.n()), expect(g.n());
    for (int i = 0; i < g.n(); ++i) {
        const double y = g.y(i);
        f[i] = std::exp(-y * y);
        expect[i] = std::sqrt(M_PI) / 2.0 * std::erfc(y);
    }
    auto I = integral_to_right_1d(g, f);
    double err = 0.0;
    for (int i = 0; i < g.n(); ++i) err = std::max(err, std::fabs(I[i] - expect[i]));
    CHECK(err < 1e-12);
}

TEST_CASE("omp kernels match the serial reference")
{
    const std::size_t n = 10000;
    std::vector<double> x(n), y(n), y2(n), z(n), z2(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = std::sin(0.1 * i);
        y[i] = std::cos(0.05 * i);
    }
    y2 = y;
    kern::axpy(y.data(), x.data(), n, 0.7);
    kern::serial::axpy(y2.data(), x.data(), n, 0.7);
    for (std::size_t i = 0; i < n; i += 997) CHECK(y[i] == y2[i]);

    kern::cube(z.data(), x.data(), n);
    kern::serial::cube(z2.data(), x.data(), n);
    for (std::size_t i = 0; i < n; i += 997) CHECK(z[i] == z2[i]);

    const double d1 = kern::dot(x.data(), y.data(), n);
    const double d2 = kern::serial::dot(x.data(), y.data(), n);
    CHECK(d1 == doctest::Approx(d2).epsilon(1e-14));
    CHECK(kern::max_abs(x.data(), n) == kern::serial::max_abs(x.data(), n));
    CHECK(kern::sum(x.data(), n) == doctest::Approx(kern::serial::sum(x.data(), n)).epsilon(1e-14));
}
