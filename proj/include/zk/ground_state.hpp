#pragma once

#include <vector>

#include "zk/field.hpp"

namespace zk {

double mass(const RealField2D& f);
// E(f) = 1/2 int |grad f|^2 - 1/4 int f^4
double energy(const RealField2D& f);

struct GroundState {
    RealField2D Q;
    double residual_sup = 0.0;
    double mass = 0.0;
    double energy = 0.0;
    int iterations = 0;
};

struct GroundStateOptions {
    double tol = 1e-11;
    int max_iterations = 2000;
};

// Petviashvili fixed point for -Lap Q + Q - Q^3 = 0 with stabilizing
// exponent 3/2 and seed 3 exp(-|y|^2).  Stops when both the sup-norm
// residual and the successive-iterate difference fall below tol.
GroundState solve_ground_state(const Grid2D& grid, double tol = 1e-11, int max_iterations = 2000);

// int f^4 * ||Q||_2^2 / (2 ||grad f||_2^2 ||f||_2^2); equals 1 at f = Q.
double gagliardo_nirenberg_ratio(const RealField2D& f, const GroundState& gs);

struct IdentityReport {
    double lambdaQ_Q;        // |(Lambda Q, Q)| / ||Q||_2^2
    double L_lambdaQ_plus2Q; // ||L Lambda Q + 2Q||_2 / ||Q||_2
    double L_dy1Q;           // ||L d_{y1} Q||_2 / ||d_{y1} Q||_2
    double L_dy2Q;           // ||L d_{y2} Q||_2 / ||d_{y2} Q||_2
};

IdentityReport verify_identities(const GroundState& gs);

// Radial sample consistency: max spread of Q over grid points at nearly
// equal radius, normalized by max Q.
double radial_deviation(const RealField2D& Q);

} // namespace zk
