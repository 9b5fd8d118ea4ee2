// oracle.hpp — independent verification of the closed-form block dynamics by
// fixed-step Runge-Kutta integration, plus structural checks of the truncated
// interaction matrix.

#pragma once

#include <complex>
#include <span>
#include <vector>

#include "lambdacav/blocks.hpp"
#include "lambdacav/state.hpp"

namespace lambdacav::oracle {

struct BlockODE {
    double v1, v2, f1, f2;
    double delta2, delta3;

    static BlockODE from(const model::EffectiveModel& eff, blocks::FockBlock blk);
};

struct AmplitudeSeries {
    std::vector<std::complex<double>> a, b, c;
};

// Integrates i dA/dt = V1 A + f1 e^{-i d2 t} B + f2 e^{-i d3 t} C,
//            i dB/dt = V2 B + f1 e^{+i d2 t} A,
//            i dC/dt = V2 C + f2 e^{+i d3 t} A,  A(0)=1, B(0)=C(0)=0,
// with classic RK4. The stiff diagonal is removed by the exact phase change of
// variables to the constant-coefficient frame, and the fixed step honors both
// the rate cap h <= min(1e-3, 1e-2/max rate) and a phase-accuracy bound, so
// the result is trustworthy to ~1e-11 before it judges the closed form.
// step_scale shrinks the step for step-doubling self-checks. Throws on rates
// beyond 1e6.
AmplitudeSeries integrate_block(const BlockODE& ode, std::span<const double> t_grid,
                                double step_scale = 1.0);

struct VerifyReport {
    double max_abs_error;
    bool pass;
};

// Max abs difference between closed-form and integrated amplitudes over the grid.
VerifyReport verify_block(const model::EffectiveModel& eff, blocks::FockBlock blk,
                          std::span<const double> t_grid, double tol);

// Same comparison against a caller-supplied solution (verification canaries
// inject corrupted weights through this entry).
VerifyReport verify_solution(const blocks::BlockSolution& sol, std::span<const double> t_grid,
                             double tol);

struct StructureReport {
    int dim;
    int off_block_nonzeros;
    double max_off_block;
    bool pass;  // no couplings outside the {|1,n1,n2>, |2,n1,n2+1>, |3,n1,n2+1>} triples
};

// Assembles the time-frozen coupling pattern of the interaction operator over
// the truncated basis and scans for entries leaving the invariant triples.
StructureReport interaction_matrix_blocks(const model::EffectiveModel& eff,
                                          const state::Truncation& trunc);

}  // namespace lambdacav::oracle
