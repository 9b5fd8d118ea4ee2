#include "lambdacav/state.hpp"

#include <cmath>
#include <stdexcept>

#include "lambdacav/numeric.hpp"

namespace lambdacav::state {

Eigen::VectorXcd coherent_weights(std::complex<double> alpha, int n_max) {
    if (n_max < 0) throw std::domain_error("coherent_weights: negative cutoff");
    Eigen::VectorXcd q(n_max + 1);
    q[0] = std::exp(-0.5 * std::norm(alpha));
    for (int n = 1; n <= n_max; ++n) q[n] = q[n - 1] * alpha / std::sqrt(static_cast<double>(n));
    return q;
}

Truncation auto_truncation(const CoherentSpec& spec, double eps) {
    const auto c1 = numeric::poisson_cutoff(std::norm(spec.alpha1), eps);
    const auto c2 = numeric::poisson_cutoff(std::norm(spec.alpha2), eps);
    return {c1.n_max, c2.n_max, std::max(c1.tail, c2.tail)};
}

Truncation truncation_at(const CoherentSpec& spec, int n1_max, int n2_max) {
    if (n1_max < 0 || n2_max < 0) throw std::domain_error("truncation_at: negative cutoff");
    const double t1 = numeric::poisson_tail(std::norm(spec.alpha1), n1_max);
    const double t2 = numeric::poisson_tail(std::norm(spec.alpha2), n2_max);
    return {n1_max, n2_max, std::max(t1, t2)};
}

Evolution::Evolution(const EffectiveModel& eff, const CoherentSpec& spec, const Truncation& trunc)
    : eff_(eff), trunc_(trunc) {
    eff_.validate();
    q1_ = coherent_weights(spec.alpha1, trunc.n1_max);
    q2_ = coherent_weights(spec.alpha2, trunc.n2_max);
    sols_.reserve(static_cast<std::size_t>(trunc.n1_max + 1) * (trunc.n2_max + 1));
    for (int n1 = 0; n1 <= trunc.n1_max; ++n1) {
        for (int n2 = 0; n2 <= trunc.n2_max; ++n2) {
            sols_.push_back(blocks::solve_block(eff_, {n1, n2}));
        }
    }
}

const blocks::BlockSolution& Evolution::block(int n1, int n2) const {
    return sols_[static_cast<std::size_t>(n1) * (trunc_.n2_max + 1) + n2];
}

SystemState Evolution::at(double t) const {
    if (!(t >= 0.0)) throw std::domain_error("Evolution::at: time must be nonnegative");
    SystemState s;
    s.time = t;
    s.trunc = trunc_;
    const int r = trunc_.n1_max + 1, c = trunc_.n2_max + 1;
    s.amp1.resize(r, c);
    s.amp2.resize(r, c);
    s.amp3.resize(r, c);
    for (int n1 = 0; n1 < r; ++n1) {
        for (int n2 = 0; n2 < c; ++n2) {
            const auto amp = blocks::amplitudes_at(block(n1, n2), t);
            const std::complex<double> w = q1_[n1] * q2_[n2];
            s.amp1(n1, n2) = w * amp.a;
            s.amp2(n1, n2) = w * amp.b;
            s.amp3(n1, n2) = w * amp.c;
        }
    }
    return s;
}

SystemState evolve(const EffectiveModel& eff, const CoherentSpec& spec, const Truncation& trunc,
                   double t) {
    return Evolution(eff, spec, trunc).at(t);
}

double norm(const SystemState& s) {
    return s.amp1.squaredNorm() + s.amp2.squaredNorm() + s.amp3.squaredNorm();
}

AtomicDensity AtomicDensity::normalized() const {
    const double tr = trace();
    if (!(tr > 0.0)) throw std::domain_error("AtomicDensity: nonpositive trace");
    return {rho / tr};
}

AtomicDensity atomic_density(const SystemState& s) {
    const int c = static_cast<int>(s.amp1.cols());
    AtomicDensity d;
    d.rho(0, 0) = s.amp1.squaredNorm();
    d.rho(1, 1) = s.amp2.squaredNorm();
    d.rho(2, 2) = s.amp3.squaredNorm();
    d.rho(1, 2) = s.amp2.cwiseProduct(s.amp3.conjugate()).sum();
    // amp1 at occupancy n2 pairs with amp2/amp3 stored at n2-1; the n2 = 0
    // column of amp1 has no partner.
    d.rho(0, 1) = s.amp1.rightCols(c - 1).cwiseProduct(s.amp2.leftCols(c - 1).conjugate()).sum();
    d.rho(0, 2) = s.amp1.rightCols(c - 1).cwiseProduct(s.amp3.leftCols(c - 1).conjugate()).sum();
    d.rho(1, 0) = std::conj(d.rho(0, 1));
    d.rho(2, 0) = std::conj(d.rho(0, 2));
    d.rho(2, 1) = std::conj(d.rho(1, 2));
    return d;
}

}  // namespace lambdacav::state
