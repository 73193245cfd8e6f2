#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "zk/ground_state.hpp"
#include "zk/kernels.hpp"
#include "zk/ops.hpp"

using namespace zk;

namespace {
const GroundState& shared_gs()
{
    static GroundState gs = solve_ground_state(Grid2D(256, 256, 20.0, 20.0), 1e-11, 2000);
    return gs;
}
} // namespace

TEST_CASE("Petviashvili converges to a positive radial profile")
{
    const GroundState& gs = shared_gs();
    CHECK(gs.residual_sup < 1e-10);
    CHECK(gs.iterations < 2000);
    // positive on the resolved core
    const Grid2D& g = gs.Q.grid();
    double minv = 1e300;
    for (int i = 0; i < g.n1(); ++i)
        for (int j = 0; j < g.n2(); ++j)
            if (g.y1(i) * g.y1(i) + g.y2(j) * g.y2(j) < 100.0) minv = std::min(minv, gs.Q.at(i, j));
    CHECK(minv > 0.0);
    CHECK(radial_deviation(gs.Q) < 1e-9);
    // maximum at the origin
    CHECK(gs.Q.at(g.n1() / 2, g.n2() / 2) == doctest::Approx(max_abs(gs.Q)));
}

TEST_CASE("determinism for fixed grid")
{
    Grid2D g(128, 128, 20.0, 20.0);
    auto a = solve_ground_state(g, 1e-11, 2000);
    auto b = solve_ground_state(g, 1e-11, 2000);
    RealField2D d = a.Q;
    kern::axpy(d.data(), b.Q.data(), d.size(), -1.0);
    CHECK(max_abs(d) == 0.0);
}

TEST_CASE("mass matches the radial shooting oracle")
{
    const GroundState& gs = shared_gs();
    auto shot = oracles::shoot_ground_state_radial();
    CHECK(std::fabs(gs.mass - shot.mass) / shot.mass < 1e-6);
    // the center value is a second independent scalar
    const Grid2D& g = gs.Q.grid();
    CHECK(gs.Q.at(g.n1() / 2, g.n2() / 2) == doctest::Approx(shot.center).epsilon(1e-7));
}

TEST_CASE("zero energy and the quartic-gradient identity")
{
    const GroundState& gs = shared_gs();
    const double h1 = h1_norm_sq(gs.Q);
    CHECK(std::fabs(gs.energy) < 1e-8 * h1 * h1);
    // int Q^4 = 2 int |grad Q|^2
    RealField2D q2(gs.Q.grid());
    kern::mul(q2.data(), gs.Q.data(), gs.Q.data(), q2.size());
    const double quart = inner(q2, q2);
    RealField2D d1 = derivative(gs.Q, 1), d2 = derivative(gs.Q, 2);
    const double grad2 = inner(d1, d1) + inner(d2, d2);
    CHECK(quart == doctest::Approx(2.0 * grad2).epsilon(1e-8));
}

TEST_CASE("Gagliardo-Nirenberg ratio")
{
    const GroundState& gs = shared_gs();
    SUBCASE("equality at Q") { CHECK(gagliardo_nirenberg_ratio(gs.Q, gs) == doctest::Approx(1.0).epsilon(1e-8)); }
    SUBCASE("strictly below one at a Gaussian")
    {
        RealField2D f = sample(gs.Q.grid(), [](double a, double b) { return std::exp(-(a * a + b * b) / 2.0); });
        const double r = gagliardo_nirenberg_ratio(f, gs);
        CHECK(r < 1.0);
        CHECK(r > 0.0);
    }
    SUBCASE("scale invariance")
    {
        const double lam = 1.7;
        RealField2D f = sample(gs.Q.grid(), [&](double a, double b) {
            // rescaled Gaussian stand-in; any profile works, factors cancel
            return std::exp(-(a * a + b * b) / (2.0 * lam * lam)) / lam;
        });
        RealField2D f1 = sample(gs.Q.grid(), [](double a, double b) { return std::exp(-(a * a + b * b) / 2.0); });
        CHECK(gagliardo_nirenberg_ratio(f, gs) == doctest::Approx(gagliardo_nirenberg_ratio(f1, gs)).epsilon(1e-9));
    }
    SUBCASE("zero input rejected")
    {
        RealField2D z(gs.Q.grid(), 0.0);
        CHECK_THROWS(gagliardo_nirenberg_ratio(z, gs));
    }
}

TEST_CASE("parity: Q is even in each variable separately")
{
    const GroundState& gs = shared_gs();
    RealField2D r2 = reflect_axis2(gs.Q);
    kern::axpy(r2.data(), gs.Q.data(), r2.size(), -1.0);
    CHECK(max_abs(r2) < 1e-10);
    RealField2D r1 = reflect_axis1(gs.Q);
    kern::axpy(r1.data(), gs.Q.data(), r1.size(), -1.0);
    CHECK(max_abs(r1) < 1e-10);
}
