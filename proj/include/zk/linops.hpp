#pragma once

#include <functional>
#include <vector>

#include "zk/field.hpp"
#include "zk/ground_state.hpp"

namespace zk {

// Linearized operator L = -Lap + 1 - 3Q^2 and the virial-side Schroedinger
// operator H = -1/2 Lap - d_{y1}^2 + 1/2 - 3/2 (Q^2 + 2 y1 Q d_{y1}Q)
//             + 3/(Q,Q) [ (f, Q^2 d_{y1}Q) y1 Q + (f, y1 Q) Q^2 d_{y1}Q ].
struct LinearizedOperator {
    enum class Kind { L, H };
    Kind kind;
    const GroundState* gs;
    RealField2D potential; // multiplies f pointwise, subtracted
    RealField2D y1Q, Q2d1Q; // rank-2 correction vectors (kind H)
    double qq = 0.0;
};

LinearizedOperator make_L(const GroundState& gs);
LinearizedOperator make_H(const GroundState& gs);

RealField2D apply_operator(const LinearizedOperator& op, const RealField2D& f);

struct SpectralReport {
    double mu0 = 0.0;        // magnitude of the single negative eigenvalue
    RealField2D Y;           // normalized eigenvector of -mu0
    std::vector<double> eigenvalues;       // ascending
    std::vector<double> kernel_residuals;  // ||L d_{yj} Q|| / ||d_{yj} Q||
    double mu1 = 0.0;
    double mu2 = 0.0;
};

struct EigOptions {
    int max_iterations = 800;
    double tol = 5e-11;
    int guard = 3;
    unsigned seed = 20240901u;
};

// Smallest-k eigenpairs by preconditioned block Rayleigh-Ritz (LOBPCG-style)
// with (1 - Lap)^{-1} as preconditioner.
std::vector<std::pair<double, RealField2D>> lowest_eigenpairs_raw(
    const LinearizedOperator& op, int k, const EigOptions& opt = {});

// Full report for kind L: eigenvalues, Y, kernel residuals.
SpectralReport lowest_eigenpairs(const LinearizedOperator& op, int k, const EigOptions& opt = {});

// min of (A f, f) / ||f||_{H1}^2 over f orthogonal (L2) to the constraints.
// Solved as a projected eigenproblem for M^{-1/2} A M^{-1/2}, M = 1 - Lap.
double coercivity_constant(const LinearizedOperator& op,
                           const std::vector<RealField2D>& constraints,
                           const EigOptions& opt = {});

// Inversion context: L restricted to the complement of span{Y, grad Q} is
// positive definite; the Y component is handled by its eigenvalue.
struct LInverter {
    const GroundState* gs;
    RealField2D Y;
    double mu0;
    RealField2D e1, e2; // normalized kernel directions d_{y1}Q, d_{y2}Q
};

LInverter make_L_inverter(const GroundState& gs, const EigOptions& opt = {});

struct SolveStats {
    int iterations = 0;
    double relative_residual = 0.0;
};

// Solve L f = g for g orthogonal to grad Q; result orthogonal to grad Q.
RealField2D invert_L(const LInverter& inv, const RealField2D& g,
                     double tol = 1e-11, int max_iterations = 4000,
                     SolveStats* stats = nullptr);

// Smooth localized pseudo-random field (spectral Gaussian envelope times a
// spatial Gaussian), deterministic in the seed; used to sample quadratic
// forms.
RealField2D random_localized_field(const Grid2D& g, unsigned seed, bool even_in_y2 = false);

} // namespace zk
