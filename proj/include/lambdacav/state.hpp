// state.hpp — coherent-state weights, Fock-grid truncation, full-state
// assembly from per-block amplitudes, and the reduced atomic density matrix.

#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "lambdacav/blocks.hpp"

namespace lambdacav::state {

using model::EffectiveModel;

// Coherent amplitudes of the two rotated modes; |alpha|^2 is the mean photon number.
struct CoherentSpec {
    std::complex<double> alpha1{0.0, 0.0};
    std::complex<double> alpha2{0.0, 0.0};
};

struct Truncation {
    int n1_max = 0;
    int n2_max = 0;
    double tail_mass = 0.0;  // worst per-mode discarded Poisson probability
};

// q_n = e^{-|alpha|^2/2} alpha^n / sqrt(n!), by the stable recurrence from q_0.
Eigen::VectorXcd coherent_weights(std::complex<double> alpha, int n_max);

// Per mode, smallest cutoff whose Poisson tail is below eps.
Truncation auto_truncation(const CoherentSpec& spec, double eps = 1e-10);

// Truncation at explicit cutoffs, with the actual discarded tails recorded.
Truncation truncation_at(const CoherentSpec& spec, int n1_max, int n2_max);

// Weighted amplitude tensors on the truncated grid. amp1(n1, n2) multiplies
// the field state |n1, n2>; amp2 and amp3 at storage index (n1, n2) multiply
// |n1, n2+1> (levels 2 and 3 carry one extra mode-2 photon).
struct SystemState {
    double time = 0.0;
    Truncation trunc;
    Eigen::MatrixXcd amp1, amp2, amp3;  // (n1_max+1) x (n2_max+1)
};

double norm(const SystemState& s);

// Caches per-block solutions and the coherent weights; `at` is const and safe
// to call concurrently.
class Evolution {
public:
    Evolution(const EffectiveModel& eff, const CoherentSpec& spec, const Truncation& trunc);

    SystemState at(double t) const;

    const EffectiveModel& effective() const { return eff_; }
    const Truncation& truncation() const { return trunc_; }
    const blocks::BlockSolution& block(int n1, int n2) const;

private:
    EffectiveModel eff_;
    Truncation trunc_;
    Eigen::VectorXcd q1_, q2_;
    std::vector<blocks::BlockSolution> sols_;  // row-major over (n1, n2)
};

SystemState evolve(const EffectiveModel& eff, const CoherentSpec& spec, const Truncation& trunc,
                   double t);

struct AtomicDensity {
    Eigen::Matrix3cd rho;

    double trace() const { return rho.trace().real(); }
    AtomicDensity normalized() const;
};

// rho_ij = sum over field states of <i,field|psi><psi|j,field>; couples only
// amplitudes whose mode occupancies match, so levels 2/3 pair with level 1
// through the one-photon index shift.
AtomicDensity atomic_density(const SystemState& s);

}  // namespace lambdacav::state
