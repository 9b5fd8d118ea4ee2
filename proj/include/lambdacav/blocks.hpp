// blocks.hpp — exact dynamics on one invariant Fock block: Kerr potentials,
// cubic quasi-frequencies by the trigonometric Cardano method, initial-state
// weights, and the time-dependent amplitudes A, B, C.

#pragma once

#include <array>
#include <complex>

#include "lambdacav/model.hpp"

namespace lambdacav::blocks {

using model::EffectiveModel;

// Photon numbers of the rotated modes labelling the invariant subspace
// {|1,n1,n2>, |2,n1,n2+1>, |3,n1,n2+1>}.
struct FockBlock {
    int n1 = 0;
    int n2 = 0;
};

struct BlockPotentials {
    double v1;  // Kerr shift of the |1,n1,n2> component
    double v2;  // Kerr shift of the |2>/|3> components (one extra mode-2 photon)
    double f1;  // |1>-|2> coupling, mu sqrt(n2+1)
    double f2;  // |1>-|3> coupling, gamma f1
};

struct CubicRoots {
    std::array<double, 3> theta;  // paper order m = 1, 2, 3 (no sorting)
    double phi;                   // Cardano angle; 0 when the spectral route built the block
};

BlockPotentials block_potentials(const EffectiveModel& eff, FockBlock blk);

// Coefficients of theta^3 + x1 theta^2 + x2 theta + x3, the characteristic
// polynomial of the block.
std::array<double, 3> cubic_coefficients(const BlockPotentials& p, double delta2, double delta3);

// Trigonometric Cardano roots. Throws std::domain_error on a near-triple root
// (x1^2 - 3 x2 <= 1e-14 max(1, x1^2)); callers fall back to solve_block's
// spectral route, which has no such restriction.
CubicRoots solve_cubic(double x1, double x2, double x3);

// Initial-condition weights for A(0) = 1, B(0) = C(0) = 0. Requires well
// separated roots; solve_block guards the separation before calling.
std::array<double, 3> upsilon(const CubicRoots& roots, const BlockPotentials& p, double delta2);

struct BlockSolution {
    FockBlock block;
    BlockPotentials potentials;
    CubicRoots roots;
    std::array<double, 3> upsilon;
    double delta2 = 0.0;
    double delta3 = 0.0;
    // Phase-sum weights: A = sum a_m e^{i(theta_m - d2)t}, B = sum b_m e^{i theta_m t},
    // C = sum c_m e^{i(theta_m + d3 - d2)t}.
    std::array<double, 3> coef_a{};
    std::array<double, 3> coef_b{};
    std::array<double, 3> coef_c{};
    bool spectral = false;  // built by direct diagonalization instead of Cardano weights
};

// Per-block solve. Uses the Cardano + upsilon route; switches to the spectral
// decomposition of the 3x3 Hermitian block matrix when roots nearly coincide
// or the |1>-|3> coupling is too small to divide by.
BlockSolution solve_block(const EffectiveModel& eff, FockBlock blk);

// Phase-sum weights reconstructed from given upsilon values (used to inject
// corrupted weights in verification canaries).
struct Coefficients {
    std::array<double, 3> a, b, c;
};
Coefficients coefficients_from_upsilon(const CubicRoots& roots, const BlockPotentials& p,
                                       double delta2, const std::array<double, 3>& ups);

struct Amplitudes {
    std::complex<double> a, b, c;
};

Amplitudes amplitudes_at(const BlockSolution& sol, double t);

}  // namespace lambdacav::blocks
