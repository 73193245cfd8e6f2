#include "zk/ground_state.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

#include "zk/kernels.hpp"
#include "zk/linops.hpp"
#include "zk/ops.hpp"

namespace zk {

double mass(const RealField2D& f) { return inner(f, f); }

double energy(const RealField2D& f)
{
    RealField2D d1 = derivative(f, 1);
    RealField2D d2 = derivative(f, 2);
    const double grad2 = inner(d1, d1) + inner(d2, d2);
    RealField2D f2(f.grid());
    kern::mul(f2.data(), f.data(), f.data(), f.size());
    const double quart = kern::dot(f2.data(), f2.data(), f2.size()) * f.grid().cell_area();
    return 0.5 * grad2 - 0.25 * quart;
}

namespace {

// (-Lap + 1)^{-1} g, spectral.
RealField2D invert_one_minus_lap(const RealField2D& g)
{
    SpectralField2D c = forward_transform(g);
    const Grid2D& gr = g.grid();
    for (int k1 = 0; k1 < gr.n1(); ++k1) {
        const double a = gr.xi1(k1) * gr.xi1(k1);
        for (int k2 = 0; k2 < gr.nk2(); ++k2) {
            const double b = gr.xi2(k2) * gr.xi2(k2);
            c.at(k1, k2) /= (1.0 + a + b);
        }
    }
    return inverse_transform(c);
}

RealField2D equation_residual(const RealField2D& Q)
{
    RealField2D r = laplacian(Q);
    const std::size_t n = Q.size();
    for (std::size_t i = 0; i < n; ++i) {
        const double q = Q[i];
        r[i] = -r[i] + q - q * q * q;
    }
    return r;
}

} // namespace

GroundState solve_ground_state(const Grid2D& grid, double tol, int max_iterations)
{
    RealField2D Q = sample(grid, [](double y1, double y2) {
        return 3.0 * std::exp(-(y1 * y1 + y2 * y2));
    });

    GroundState out;
    double diff = 1.0, res = 1.0;
    int it = 0;
    for (; it < max_iterations; ++it) {
        RealField2D Q3(grid);
        kern::cube(Q3.data(), Q.data(), Q.size());
        // M = ((-Lap+1)Q, Q) / (Q^3, Q); both via quadrature
        RealField2D LQ = laplacian(Q);
        double num = inner(Q, Q) - inner(LQ, Q);
        double den = inner(Q3, Q);
        if (!(den > 0.0)) throw std::runtime_error("solve_ground_state: collapsed to zero field");
        const double M = num / den;
        RealField2D next = invert_one_minus_lap(Q3);
        kern::scale(next.data(), next.size(), std::pow(M, 1.5));

        RealField2D delta = next;
        kern::axpy(delta.data(), Q.data(), delta.size(), -1.0);
        diff = max_abs(delta);
        Q = next;
        if (diff < tol) {
            res = max_abs(equation_residual(Q));
            if (res < tol) break;
        }
    }
    if (diff >= tol) throw std::runtime_error("solve_ground_state: no convergence after max iterations");

    out.Q = Q;
    out.residual_sup = max_abs(equation_residual(Q));
    out.mass = mass(Q);
    out.energy = energy(Q);
    out.iterations = it + 1;
    return out;
}

double gagliardo_nirenberg_ratio(const RealField2D& f, const GroundState& gs)
{
    const double m = mass(f);
    if (!(m > 0.0)) throw std::invalid_argument("gagliardo_nirenberg_ratio: zero input");
    RealField2D d1 = derivative(f, 1);
    RealField2D d2 = derivative(f, 2);
    const double grad2 = inner(d1, d1) + inner(d2, d2);
    RealField2D f2(f.grid());
    kern::mul(f2.data(), f.data(), f.data(), f.size());
    const double quart = kern::dot(f2.data(), f2.data(), f2.size()) * f.grid().cell_area();
    return quart * gs.mass / (2.0 * grad2 * m);
}

IdentityReport verify_identities(const GroundState& gs)
{
    const RealField2D& Q = gs.Q;
    LinearizedOperator L = make_L(gs);
    RealField2D lamQ = scaling_operator(Q);
    RealField2D d1Q = derivative(Q, 1);
    RealField2D d2Q = derivative(Q, 2);

    IdentityReport rep;
    const double q2 = inner(Q, Q);
    rep.lambdaQ_Q = std::fabs(inner(lamQ, Q)) / q2;

    RealField2D a = apply_operator(L, lamQ);
    kern::axpy(a.data(), Q.data(), a.size(), 2.0);
    rep.L_lambdaQ_plus2Q = l2_norm(a) / std::sqrt(q2);

    RealField2D b = apply_operator(L, d1Q);
    rep.L_dy1Q = l2_norm(b) / l2_norm(d1Q);
    RealField2D c = apply_operator(L, d2Q);
    rep.L_dy2Q = l2_norm(c) / l2_norm(d2Q);
    return rep;
}

double radial_deviation(const RealField2D& Q)
{
    const Grid2D& g = Q.grid();
    // bucket samples by radius (quantized); compare spread within buckets
    std::map<long long, std::pair<double, double>> buckets; // r -> (min,max)
    const double qmax = max_abs(Q);
    for (int i = 0; i < g.n1(); ++i) {
        for (int j = 0; j < g.n2(); ++j) {
            const double r2 = g.y1(i) * g.y1(i) + g.y2(j) * g.y2(j);
            if (r2 > 100.0) continue; // compare only the resolved core
            const long long key = llround(r2 * 1e9);
            auto it = buckets.find(key);
            const double v = Q.at(i, j);
            if (it == buckets.end())
                buckets[key] = {v, v};
            else {
                it->second.first = std::min(it->second.first, v);
                it->second.second = std::max(it->second.second, v);
            }
        }
    }
    double dev = 0.0;
    for (auto& [k, mm] : buckets) dev = std::max(dev, mm.second - mm.first);
    return dev / qmax;
}

} // namespace zk
