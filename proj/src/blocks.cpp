#include "lambdacav/blocks.hpp"

#include <cmath>
#include <stdexcept>

#include "lambdacav/numeric.hpp"

namespace lambdacav::blocks {

namespace {

// Relative root-separation floor below which the upsilon denominators lose too
// many digits and the spectral route takes over.
constexpr double kGapFloor = 1e-4;
// Relative floor for f2 in the 1/f2 factor of the C amplitude.
constexpr double kF2Floor = 1e-6;

struct CubicLd {
    long double x1, x2, x3;
};

CubicLd coefficients_ld(const BlockPotentials& p, double delta2, double delta3) {
    const long double v1 = p.v1, v2 = p.v2, f1 = p.f1, f2 = p.f2, d2 = delta2, d3 = delta3;
    CubicLd c{};
    c.x1 = v1 + 2.0L * v2 + d3 - 2.0L * d2;
    c.x2 = (v1 + v2 - d2) * (v2 + d3 - d2) + v2 * (v1 - d2) - f1 * f1 - f2 * f2;
    c.x3 = v2 * ((v1 - d2) * (v2 + d3 - d2) - f1 * f1 - f2 * f2) - f1 * f1 * (d3 - d2);
    return c;
}

struct RootsLd {
    std::array<long double, 3> r;
    double phi;
};

RootsLd roots_ld(const CubicLd& c) {
    const auto sol = numeric::solve_trig_cubic(static_cast<double>(c.x1), static_cast<double>(c.x2),
                                               static_cast<double>(c.x3));
    RootsLd out{};
    out.phi = sol.phi;
    for (int m = 0; m < 3; ++m) {
        long double r = sol.roots[m];
        for (int it = 0; it < 2; ++it) {  // re-polish against the long double coefficients
            const long double p = ((r + c.x1) * r + c.x2) * r + c.x3;
            const long double dp = (3.0L * r + 2.0L * c.x1) * r + c.x2;
            if (dp == 0.0L) break;
            const long double step = p / dp;
            if (std::abs(step) > 0.5L * (1.0L + std::abs(r))) break;
            r -= step;
        }
        out.r[m] = r;
    }
    return out;
}

std::array<long double, 3> upsilon_ld(const RootsLd& rt, const BlockPotentials& p, double delta2) {
    const long double vsum = static_cast<long double>(p.v1) + p.v2 - delta2;
    std::array<long double, 3> ups{};
    for (int m = 0; m < 3; ++m) {
        const int k = (m + 1) % 3, l = (m + 2) % 3;
        ups[m] = (rt.r[k] + rt.r[l] + vsum) / ((rt.r[m] - rt.r[k]) * (rt.r[m] - rt.r[l]));
    }
    return ups;
}

}  // namespace

BlockPotentials block_potentials(const EffectiveModel& eff, FockBlock blk) {
    if (blk.n1 < 0 || blk.n2 < 0) throw std::domain_error("block_potentials: negative photon number");
    const double n1 = blk.n1, n2 = blk.n2;
    BlockPotentials p{};
    p.v1 = eff.chi * (n1 * (n1 - 1.0) + n2 * (n2 - 1.0) + 2.0 * n1 * n2);
    p.v2 = eff.chi * (n1 * (n1 - 1.0) + n2 * (n2 + 1.0) + 2.0 * n1 * (n2 + 1.0));
    p.f1 = eff.mu * std::sqrt(n2 + 1.0);
    p.f2 = eff.gamma * p.f1;
    return p;
}

std::array<double, 3> cubic_coefficients(const BlockPotentials& p, double delta2, double delta3) {
    const CubicLd c = coefficients_ld(p, delta2, delta3);
    return {static_cast<double>(c.x1), static_cast<double>(c.x2), static_cast<double>(c.x3)};
}

CubicRoots solve_cubic(double x1, double x2, double x3) {
    const auto sol = numeric::solve_trig_cubic(x1, x2, x3);
    return {sol.roots, sol.phi};
}

std::array<double, 3> upsilon(const CubicRoots& roots, const BlockPotentials& p, double delta2) {
    RootsLd rt{};
    rt.phi = roots.phi;
    for (int m = 0; m < 3; ++m) rt.r[m] = roots.theta[m];
    const auto u = upsilon_ld(rt, p, delta2);
    return {static_cast<double>(u[0]), static_cast<double>(u[1]), static_cast<double>(u[2])};
}

Coefficients coefficients_from_upsilon(const CubicRoots& roots, const BlockPotentials& p,
                                       double delta2, const std::array<double, 3>& ups) {
    Coefficients out{};
    for (int m = 0; m < 3; ++m) {
        const long double th = roots.theta[m];
        const long double u = ups[m];
        out.a[m] = static_cast<double>(-(th + p.v2) * u);
        out.b[m] = static_cast<double>(p.f1 * u);
        out.c[m] = static_cast<double>(((th + p.v2) * (th + p.v1 - delta2) - static_cast<long double>(p.f1) * p.f1) *
                                       u / p.f2);
    }
    return out;
}

BlockSolution solve_block(const EffectiveModel& eff, FockBlock blk) {
    eff.validate();
    BlockSolution sol{};
    sol.block = blk;
    sol.potentials = block_potentials(eff, blk);
    sol.delta2 = eff.delta2;
    sol.delta3 = eff.delta3;
    const BlockPotentials& p = sol.potentials;

    const CubicLd c = coefficients_ld(p, eff.delta2, eff.delta3);
    bool cardano = !numeric::cubic_near_triple(static_cast<double>(c.x1), static_cast<double>(c.x2));
    RootsLd rt{};
    if (cardano) {
        rt = roots_ld(c);
        const long double scale =
            std::max({1.0L, std::abs(rt.r[0]), std::abs(rt.r[1]), std::abs(rt.r[2])});
        const long double gap = std::min({std::abs(rt.r[0] - rt.r[1]), std::abs(rt.r[0] - rt.r[2]),
                                          std::abs(rt.r[1] - rt.r[2])});
        if (gap < kGapFloor * scale || p.f2 < kF2Floor * static_cast<double>(scale)) cardano = false;
    }

    if (cardano) {
        for (int m = 0; m < 3; ++m) sol.roots.theta[m] = static_cast<double>(rt.r[m]);
        sol.roots.phi = rt.phi;
        const auto ups = upsilon_ld(rt, p, eff.delta2);
        const long double f1 = p.f1, f2 = p.f2, v1 = p.v1, v2 = p.v2, d2 = eff.delta2;
        for (int m = 0; m < 3; ++m) {
            sol.upsilon[m] = static_cast<double>(ups[m]);
            sol.coef_a[m] = static_cast<double>(-(rt.r[m] + v2) * ups[m]);
            sol.coef_b[m] = static_cast<double>(f1 * ups[m]);
            sol.coef_c[m] =
                static_cast<double>(((rt.r[m] + v2) * (rt.r[m] + v1 - d2) - f1 * f1) * ups[m] / f2);
        }
        return sol;
    }

    // Spectral route: quasi-frequencies are minus the eigenvalues of the real
    // symmetric block matrix of the detuning-rotated frame.
    const std::array<numeric::cplx, 9> m = {
        p.v1 - eff.delta2, p.f1, p.f2,
        p.f1,              p.v2, 0.0,
        p.f2,              0.0,  p.v2 + eff.delta3 - eff.delta2};
    const auto eig = numeric::jacobi_hermitian3(m);
    sol.spectral = true;
    sol.roots.phi = 0.0;
    for (int k = 0; k < 3; ++k) {
        sol.roots.theta[k] = -eig.values[k];
        const double v0 = std::real(eig.vectors[k][0]);
        const double v1c = std::real(eig.vectors[k][1]);
        const double v2c = std::real(eig.vectors[k][2]);
        sol.coef_a[k] = v0 * v0;
        sol.coef_b[k] = v1c * v0;
        sol.coef_c[k] = v2c * v0;
        sol.upsilon[k] = sol.coef_b[k] / p.f1;
    }
    return sol;
}

Amplitudes amplitudes_at(const BlockSolution& sol, double t) {
    Amplitudes amp{};
    for (int m = 0; m < 3; ++m) {
        const double th = sol.roots.theta[m];
        amp.a += sol.coef_a[m] * numeric::phase_exp(th - sol.delta2, t);
        amp.b += sol.coef_b[m] * numeric::phase_exp(th, t);
        amp.c += sol.coef_c[m] * numeric::phase_exp(th + sol.delta3 - sol.delta2, t);
    }
    return amp;
}

}  // namespace lambdacav::blocks
