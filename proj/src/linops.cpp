#include "zk/linops.hpp"

#include <cmath>
#include <lapacke.h>
#include <random>
#include <stdexcept>

#include "zk/kernels.hpp"
#include "zk/ops.hpp"

namespace zk {

namespace {

RealField2D apply_inv_one_minus_lap_pow(const RealField2D& f, double power)
{
    SpectralField2D c = forward_transform(f);
    const Grid2D& g = f.grid();
    for (int k1 = 0; k1 < g.n1(); ++k1) {
        const double a = g.xi1(k1) * g.xi1(k1);
        for (int k2 = 0; k2 < g.nk2(); ++k2) {
            const double b = g.xi2(k2) * g.xi2(k2);
            c.at(k1, k2) *= std::pow(1.0 + a + b, power);
        }
    }
    return inverse_transform(c);
}

void small_sym_eig(std::vector<double>& a, int n, std::vector<double>& w)
{
    w.resize(n);
    int info = LAPACKE_dsyev(LAPACK_ROW_MAJOR, 'V', 'U', n, a.data(), n, w.data());
    if (info != 0) throw std::runtime_error("small_sym_eig: dsyev failed");
}

double field_dot(const RealField2D& a, const RealField2D& b) { return inner(a, b); }

// Modified Gram-Schmidt with one reorthogonalization pass; drops vectors
// whose norm collapses.  Returns the kept count.
int orthonormalize(std::vector<RealField2D>& v, double drop_tol = 1e-10)
{
    int kept = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        RealField2D w = v[i];
        for (int pass = 0; pass < 2; ++pass)
            for (int j = 0; j < kept; ++j) {
                const double c = field_dot(w, v[j]);
                kern::axpy(w.data(), v[j].data(), w.size(), -c);
            }
        const double nrm = l2_norm(w);
        if (nrm > drop_tol) {
            kern::scale(w.data(), w.size(), 1.0 / nrm);
            v[kept++] = w;
        }
    }
    v.resize(kept);
    return kept;
}

void project_out(RealField2D& f, const std::vector<RealField2D>& basis)
{
    for (const auto& b : basis) {
        const double c = field_dot(f, b);
        kern::axpy(f.data(), b.data(), f.size(), -c);
    }
}

} // namespace

LinearizedOperator make_L(const GroundState& gs)
{
    LinearizedOperator op;
    op.kind = LinearizedOperator::Kind::L;
    op.gs = &gs;
    op.potential = RealField2D(gs.Q.grid());
    kern::mul(op.potential.data(), gs.Q.data(), gs.Q.data(), gs.Q.size());
    kern::scale(op.potential.data(), op.potential.size(), 3.0);
    return op;
}

LinearizedOperator make_H(const GroundState& gs)
{
    LinearizedOperator op;
    op.kind = LinearizedOperator::Kind::H;
    op.gs = &gs;
    const Grid2D& g = gs.Q.grid();
    RealField2D d1Q = derivative(gs.Q, 1);
    op.potential = RealField2D(g);
    op.y1Q = RealField2D(g);
    op.Q2d1Q = RealField2D(g);
    for (int i = 0; i < g.n1(); ++i) {
        const double y1 = g.y1(i);
        for (int j = 0; j < g.n2(); ++j) {
            const double q = gs.Q.at(i, j);
            const double dq = d1Q.at(i, j);
            op.potential.at(i, j) = 1.5 * (q * q + 2.0 * y1 * q * dq);
            op.y1Q.at(i, j) = y1 * q;
            op.Q2d1Q.at(i, j) = q * q * dq;
        }
    }
    op.qq = inner(gs.Q, gs.Q);
    return op;
}

RealField2D apply_operator(const LinearizedOperator& op, const RealField2D& f)
{
    if (f.grid() != op.gs->Q.grid()) throw std::invalid_argument("apply_operator: grid mismatch");
    SpectralField2D c = forward_transform(f);
    const Grid2D& g = f.grid();
    const bool isL = op.kind == LinearizedOperator::Kind::L;
    for (int k1 = 0; k1 < g.n1(); ++k1) {
        const double a = g.xi1(k1) * g.xi1(k1);
        for (int k2 = 0; k2 < g.nk2(); ++k2) {
            const double b = g.xi2(k2) * g.xi2(k2);
            const double sym = isL ? (1.0 + a + b) : (0.5 * (a + b) + a + 0.5);
            c.at(k1, k2) *= sym;
        }
    }
    RealField2D out = inverse_transform(c);
    kern::mul_add(out.data(), op.potential.data(), f.data(), out.size(), -1.0);
    if (!isL) {
        const double c1 = inner(f, op.Q2d1Q);
        const double c2 = inner(f, op.y1Q);
        kern::axpy(out.data(), op.y1Q.data(), out.size(), 3.0 * c1 / op.qq);
        kern::axpy(out.data(), op.Q2d1Q.data(), out.size(), 3.0 * c2 / op.qq);
    }
    return out;
}

RealField2D random_localized_field(const Grid2D& g, unsigned seed, bool even_in_y2)
{
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    RealField2D spec(g);
    // random coefficients with a spectral Gaussian envelope, then a spatial
    // envelope to localize
    SpectralField2D c(g);
    for (int k1 = 0; k1 < g.n1(); ++k1) {
        for (int k2 = 0; k2 < g.nk2(); ++k2) {
            const double x1 = g.xi1(k1), x2 = g.xi2(k2);
            const double env = std::exp(-(x1 * x1 + x2 * x2) / 4.0);
            c.at(k1, k2) = Complex(gauss(rng), gauss(rng)) * env;
        }
    }
    RealField2D f = inverse_transform(c);
    for (int i = 0; i < g.n1(); ++i)
        for (int j = 0; j < g.n2(); ++j) {
            const double r2 = g.y1(i) * g.y1(i) + g.y2(j) * g.y2(j);
            f.at(i, j) *= std::exp(-r2 / 50.0);
        }
    if (even_in_y2) {
        RealField2D fr = reflect_axis2(f);
        kern::axpy(f.data(), fr.data(), f.size(), 1.0);
        kern::scale(f.data(), f.size(), 0.5);
    }
    const double nrm = l2_norm(f);
    kern::scale(f.data(), f.size(), 1.0 / nrm);
    return f;
}

namespace {

// Projected, preconditioned block Rayleigh-Ritz iteration for the smallest
// eigenpairs of a symmetric operator.
std::vector<std::pair<double, RealField2D>> lobpcg(
    const std::function<RealField2D(const RealField2D&)>& A,
    const std::function<RealField2D(const RealField2D&)>& T,
    const std::vector<RealField2D>& constraints_in,
    const Grid2D& grid, int k, const EigOptions& opt)
{
    std::vector<RealField2D> constraints = constraints_in;
    orthonormalize(constraints);

    const int m = k + opt.guard;
    std::vector<RealField2D> X;
    for (int i = 0; i < m; ++i) {
        RealField2D f = random_localized_field(grid, opt.seed + 7919u * i);
        project_out(f, constraints);
        X.push_back(f);
    }
    orthonormalize(X);

    std::vector<RealField2D> P; // previous search directions
    std::vector<double> lam(m, 0.0);
    std::vector<RealField2D> AX;

    auto rayleigh_ritz = [&](std::vector<RealField2D>& Z) {
        orthonormalize(Z);
        const int nz = (int)Z.size();
        std::vector<RealField2D> AZ;
        AZ.reserve(nz);
        for (auto& z : Z) AZ.push_back(A(z));
        std::vector<double> G((std::size_t)nz * nz);
        for (int i = 0; i < nz; ++i)
            for (int j = i; j < nz; ++j) {
                const double v = field_dot(Z[i], AZ[j]);
                G[(std::size_t)i * nz + j] = v;
                G[(std::size_t)j * nz + i] = v;
            }
        std::vector<double> w;
        small_sym_eig(G, nz, w);
        // columns of G are now eigenvectors (row-major: G[i*nz+j] = component i of vector j)
        std::vector<RealField2D> Xn, AXn;
        const int take = std::min(m, nz);
        for (int col = 0; col < take; ++col) {
            RealField2D x(grid), ax(grid);
            for (int i = 0; i < nz; ++i) {
                const double cij = G[(std::size_t)i * nz + col];
                kern::axpy(x.data(), Z[i].data(), x.size(), cij);
                kern::axpy(ax.data(), AZ[i].data(), ax.size(), cij);
            }
            Xn.push_back(x);
            AXn.push_back(ax);
            if (col < (int)lam.size()) lam[col] = w[col];
        }
        X = Xn;
        AX = AXn;
    };

    std::vector<RealField2D> Z = X;
    rayleigh_ritz(Z);

    double res_max = 1.0;
    for (int it = 0; it < opt.max_iterations; ++it) {
        std::vector<RealField2D> R;
        res_max = 0.0;
        for (int i = 0; i < (int)X.size(); ++i) {
            RealField2D r = AX[i];
            kern::axpy(r.data(), X[i].data(), r.size(), -lam[i]);
            const double rn = l2_norm(r) / std::max(1.0, std::fabs(lam[i]));
            if (i < k) res_max = std::max(res_max, rn);
            R.push_back(r);
        }
        if (res_max < opt.tol) break;

        std::vector<RealField2D> W;
        for (auto& r : R) {
            RealField2D w = T(r);
            project_out(w, constraints);
            W.push_back(w);
        }
        std::vector<RealField2D> basis;
        basis.reserve(X.size() + W.size() + P.size());
        std::vector<RealField2D> Xold = X;
        for (auto& x : X) basis.push_back(x);
        for (auto& w : W) basis.push_back(w);
        for (auto& p : P) basis.push_back(p);
        rayleigh_ritz(basis);
        // new directions: components of the fresh X outside the old X span
        P.clear();
        for (int i = 0; i < (int)X.size() && i < k; ++i) {
            RealField2D p = X[i];
            for (auto& xo : Xold) {
                const double c = field_dot(p, xo);
                kern::axpy(p.data(), xo.data(), p.size(), -c);
            }
            const double nrm = l2_norm(p);
            if (nrm > 1e-8) {
                kern::scale(p.data(), p.size(), 1.0 / nrm);
                P.push_back(p);
            }
        }
    }
    if (res_max >= opt.tol * 100.0)
        throw std::runtime_error("lobpcg: eigensolver did not converge");

    std::vector<std::pair<double, RealField2D>> out;
    for (int i = 0; i < k; ++i) out.emplace_back(lam[i], X[i]);
    return out;
}

} // namespace

std::vector<std::pair<double, RealField2D>> lowest_eigenpairs_raw(
    const LinearizedOperator& op, int k, const EigOptions& opt)
{
    const Grid2D& g = op.gs->Q.grid();
    auto A = [&](const RealField2D& f) { return apply_operator(op, f); };
    auto T = [&](const RealField2D& f) { return apply_inv_one_minus_lap_pow(f, -1.0); };
    return lobpcg(A, T, {}, g, k, opt);
}

SpectralReport lowest_eigenpairs(const LinearizedOperator& op, int k, const EigOptions& opt)
{
    auto pairs = lowest_eigenpairs_raw(op, k, opt);
    SpectralReport rep;
    for (auto& [lam, v] : pairs) rep.eigenvalues.push_back(lam);
    rep.mu0 = -pairs[0].first;
    rep.Y = pairs[0].second;
    // orient the ground eigenvector positive at its extremum
    const Grid2D& g = rep.Y.grid();
    double best = 0.0;
    for (std::size_t i = 0; i < rep.Y.size(); ++i)
        if (std::fabs(rep.Y[i]) > std::fabs(best)) best = rep.Y[i];
    if (best < 0.0) kern::scale(rep.Y.data(), rep.Y.size(), -1.0);
    (void)g;

    RealField2D d1Q = derivative(op.gs->Q, 1);
    RealField2D d2Q = derivative(op.gs->Q, 2);
    for (const RealField2D* d : {&d1Q, &d2Q}) {
        RealField2D r = apply_operator(op, *d);
        rep.kernel_residuals.push_back(l2_norm(r) / l2_norm(*d));
    }
    return rep;
}

double coercivity_constant(const LinearizedOperator& op,
                           const std::vector<RealField2D>& constraints,
                           const EigOptions& opt)
{
    const Grid2D& g = op.gs->Q.grid();
    // transformed constraints d_i = M^{-1/2} c_i
    std::vector<RealField2D> d;
    for (const auto& c : constraints) {
        if (l2_norm(c) == 0.0) throw std::invalid_argument("coercivity_constant: zero constraint");
        d.push_back(apply_inv_one_minus_lap_pow(c, -0.5));
    }
    auto A = [&](const RealField2D& f) {
        RealField2D u = apply_inv_one_minus_lap_pow(f, -0.5);
        RealField2D v = apply_operator(op, u);
        return apply_inv_one_minus_lap_pow(v, -0.5);
    };
    auto T = [&](const RealField2D& f) { return f; };
    auto pairs = lobpcg(A, T, d, g, 1, opt);
    return pairs[0].first;
}

LInverter make_L_inverter(const GroundState& gs, const EigOptions& opt)
{
    LInverter inv;
    inv.gs = &gs;
    LinearizedOperator L = make_L(gs);
    auto rep = lowest_eigenpairs(L, 1, opt);
    inv.Y = rep.Y;
    inv.mu0 = rep.mu0;
    inv.e1 = derivative(gs.Q, 1);
    kern::scale(inv.e1.data(), inv.e1.size(), 1.0 / l2_norm(inv.e1));
    inv.e2 = derivative(gs.Q, 2);
    kern::scale(inv.e2.data(), inv.e2.size(), 1.0 / l2_norm(inv.e2));
    return inv;
}

RealField2D invert_L(const LInverter& inv, const RealField2D& g,
                     double tol, int max_iterations, SolveStats* stats)
{
    const GroundState& gs = *inv.gs;
    LinearizedOperator L = make_L(gs);
    const double g_e1 = inner(g, inv.e1);
    const double g_e2 = inner(g, inv.e2);
    const double gn = l2_norm(g);
    if (gn == 0.0) return RealField2D(g.grid(), 0.0);
    if (std::fabs(g_e1) > 1e-6 * gn || std::fabs(g_e2) > 1e-6 * gn)
        throw std::invalid_argument("invert_L: right-hand side has a kernel component");

    auto project = [&](RealField2D& f) {
        const double a = inner(f, inv.Y);
        kern::axpy(f.data(), inv.Y.data(), f.size(), -a);
        const double b1 = inner(f, inv.e1);
        kern::axpy(f.data(), inv.e1.data(), f.size(), -b1);
        const double b2 = inner(f, inv.e2);
        kern::axpy(f.data(), inv.e2.data(), f.size(), -b2);
    };

    // split off the Y component, which L scales by -mu0
    const double a = inner(g, inv.Y);
    RealField2D g1 = g;
    kern::axpy(g1.data(), inv.Y.data(), g1.size(), -a);
    project(g1);

    // preconditioned CG on the positive definite restriction
    RealField2D x(g.grid(), 0.0);
    RealField2D r = g1;
    RealField2D z = apply_inv_one_minus_lap_pow(r, -1.0);
    project(z);
    RealField2D p = z;
    double rz = inner(r, z);
    const double r0 = l2_norm(r);
    int it = 0;
    for (; it < max_iterations; ++it) {
        RealField2D Ap = apply_operator(L, p);
        project(Ap);
        const double alpha = rz / inner(p, Ap);
        kern::axpy(x.data(), p.data(), x.size(), alpha);
        kern::axpy(r.data(), Ap.data(), r.size(), -alpha);
        const double rn = l2_norm(r);
        if (rn < tol * std::max(1.0, r0)) break;
        z = apply_inv_one_minus_lap_pow(r, -1.0);
        project(z);
        const double rz_new = inner(r, z);
        const double beta = rz_new / rz;
        rz = rz_new;
        kern::axpby(p.data(), z.data(), p.size(), 1.0, beta); // p = z + beta p
    }
    if (stats) {
        stats->iterations = it;
        stats->relative_residual = l2_norm(r) / std::max(1.0, r0);
    }

    RealField2D f = x;
    kern::axpy(f.data(), inv.Y.data(), f.size(), -a / inv.mu0);
    // remove any kernel component so (f, grad Q) = 0
    const double b1 = inner(f, inv.e1);
    kern::axpy(f.data(), inv.e1.data(), f.size(), -b1);
    const double b2 = inner(f, inv.e2);
    kern::axpy(f.data(), inv.e2.data(), f.size(), -b2);
    return f;
}

} // namespace zk
