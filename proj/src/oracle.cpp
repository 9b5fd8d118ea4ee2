#include "lambdacav/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lambdacav/numeric.hpp"

namespace lambdacav::oracle {

namespace {

using numeric::cplx;
using Vec3 = std::array<cplx, 3>;

struct Frame {
    double m[3][3];   // traceless real symmetric generator
    double shift;     // removed mean diagonal rate
};

Frame build_frame(const BlockODE& o) {
    const double d0 = o.v1 - o.delta2;
    const double d1 = o.v2;
    const double d2 = o.v2 + o.delta3 - o.delta2;
    Frame f{};
    f.shift = (d0 + d1 + d2) / 3.0;
    f.m[0][0] = d0 - f.shift; f.m[0][1] = o.f1;        f.m[0][2] = o.f2;
    f.m[1][0] = o.f1;         f.m[1][1] = d1 - f.shift; f.m[1][2] = 0.0;
    f.m[2][0] = o.f2;         f.m[2][1] = 0.0;          f.m[2][2] = d2 - f.shift;
    return f;
}

inline Vec3 derivative(const Frame& f, const Vec3& w) {
    // dw/dt = -i M w
    const cplx mi(0.0, -1.0);
    return {mi * (f.m[0][0] * w[0] + f.m[0][1] * w[1] + f.m[0][2] * w[2]),
            mi * (f.m[1][0] * w[0] + f.m[1][1] * w[1] + f.m[1][2] * w[2]),
            mi * (f.m[2][0] * w[0] + f.m[2][1] * w[1] + f.m[2][2] * w[2])};
}

inline void rk4_step(const Frame& f, Vec3& w, double h) {
    const Vec3 k1 = derivative(f, w);
    Vec3 tmp{w[0] + 0.5 * h * k1[0], w[1] + 0.5 * h * k1[1], w[2] + 0.5 * h * k1[2]};
    const Vec3 k2 = derivative(f, tmp);
    tmp = {w[0] + 0.5 * h * k2[0], w[1] + 0.5 * h * k2[1], w[2] + 0.5 * h * k2[2]};
    const Vec3 k3 = derivative(f, tmp);
    tmp = {w[0] + h * k3[0], w[1] + h * k3[1], w[2] + h * k3[2]};
    const Vec3 k4 = derivative(f, tmp);
    for (int i = 0; i < 3; ++i) {
        w[i] += (h / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
}

double pick_step(const BlockODE& o, const Frame& f, double t_end) {
    const double rate = std::max({o.f1, o.f2, std::abs(o.v2), std::abs(o.delta2),
                                  std::abs(o.delta3), 1.0});
    if (rate > 1e6) throw std::domain_error("integrate_block: step-size underflow, rates beyond 1e6");
    // Gershgorin bound on the traceless generator's spectral radius.
    const double r = std::max({std::abs(f.m[0][0]) + o.f1 + o.f2, std::abs(f.m[1][1]) + o.f1,
                               std::abs(f.m[2][2]) + o.f2, 1e-3});
    // Global RK4 phase error ~ T r^5 h^4 / 120; aim below 5e-12.
    const double h_acc = std::pow(5e-12 * 120.0 / (std::max(t_end, 1.0) * std::pow(r, 5.0)), 0.25);
    return std::min({1e-3, 1e-2 / rate, h_acc});
}

}  // namespace

BlockODE BlockODE::from(const model::EffectiveModel& eff, blocks::FockBlock blk) {
    const auto p = blocks::block_potentials(eff, blk);
    return {p.v1, p.v2, p.f1, p.f2, eff.delta2, eff.delta3};
}

AmplitudeSeries integrate_block(const BlockODE& ode, std::span<const double> t_grid,
                                double step_scale) {
    if (t_grid.empty()) return {};
    if (!(t_grid.front() >= 0.0)) throw std::domain_error("integrate_block: grid must start at t >= 0");
    if (!(step_scale > 0.0)) throw std::domain_error("integrate_block: bad step scale");

    const Frame f = build_frame(ode);
    const double h_target = pick_step(ode, f, t_grid.back()) * step_scale;

    AmplitudeSeries out;
    out.a.reserve(t_grid.size());
    out.b.reserve(t_grid.size());
    out.c.reserve(t_grid.size());

    Vec3 w{1.0, 0.0, 0.0};
    double t_cur = 0.0;
    for (double tg : t_grid) {
        if (tg < t_cur - 1e-15) throw std::domain_error("integrate_block: grid must ascend");
        const double span = tg - t_cur;
        if (span > 0.0) {
            const int n = std::max(1, static_cast<int>(std::ceil(span / h_target - 1e-12)));
            const double h = span / n;
            for (int i = 0; i < n; ++i) rk4_step(f, w, h);
            t_cur = tg;
        }
        out.a.push_back(w[0] * numeric::phase_exp(-(f.shift + ode.delta2), tg));
        out.b.push_back(w[1] * numeric::phase_exp(-f.shift, tg));
        out.c.push_back(w[2] * numeric::phase_exp(ode.delta3 - ode.delta2 - f.shift, tg));
    }
    return out;
}

VerifyReport verify_solution(const blocks::BlockSolution& sol, std::span<const double> t_grid,
                             double tol) {
    const BlockODE ode{sol.potentials.v1, sol.potentials.v2, sol.potentials.f1, sol.potentials.f2,
                       sol.delta2, sol.delta3};
    const AmplitudeSeries ref = integrate_block(ode, t_grid);
    double worst = 0.0;
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        const auto amp = blocks::amplitudes_at(sol, t_grid[i]);
        worst = std::max({worst, std::abs(amp.a - ref.a[i]), std::abs(amp.b - ref.b[i]),
                          std::abs(amp.c - ref.c[i])});
    }
    return {worst, worst <= tol};
}

VerifyReport verify_block(const model::EffectiveModel& eff, blocks::FockBlock blk,
                          std::span<const double> t_grid, double tol) {
    return verify_solution(blocks::solve_block(eff, blk), t_grid, tol);
}

StructureReport interaction_matrix_blocks(const model::EffectiveModel& eff,
                                          const state::Truncation& trunc) {
    if (trunc.n1_max > 8 || trunc.n2_max > 8) {
        throw std::domain_error("interaction_matrix_blocks: use cutoffs <= 8");
    }
    const int c1 = trunc.n1_max + 1, c2 = trunc.n2_max + 1;
    const int dim = 3 * c1 * c2;
    const auto idx = [&](int level, int n1, int n2) { return (level * c1 + n1) * c2 + n2; };

    Eigen::MatrixXd v = Eigen::MatrixXd::Zero(dim, dim);
    for (int level = 0; level < 3; ++level) {
        for (int n1 = 0; n1 < c1; ++n1) {
            for (int n2 = 0; n2 < c2; ++n2) {
                const int i = idx(level, n1, n2);
                v(i, i) = eff.chi * (n1 * (n1 - 1.0) + n2 * (n2 - 1.0) + 2.0 * n1 * n2);
                if (level == 0 && n2 + 1 < c2) {
                    const double f1 = eff.mu * std::sqrt(n2 + 1.0);
                    const int j2 = idx(1, n1, n2 + 1);
                    const int j3 = idx(2, n1, n2 + 1);
                    v(i, j2) = v(j2, i) = f1;
                    v(i, j3) = v(j3, i) = eff.gamma * f1;
                }
            }
        }
    }

    // Triple label of a basis state: the (n1, n2) of its level-1 partner.
    const auto triple = [&](int flat) {
        const int level = flat / (c1 * c2);
        const int n1 = (flat / c2) % c1;
        const int n2 = flat % c2;
        return std::pair<int, int>{n1, level == 0 ? n2 : n2 - 1};
    };

    StructureReport rep{dim, 0, 0.0, true};
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            if (i == j || v(i, j) == 0.0) continue;
            if (triple(i) != triple(j)) {
                ++rep.off_block_nonzeros;
                rep.max_off_block = std::max(rep.max_off_block, std::abs(v(i, j)));
            }
        }
    }
    rep.pass = rep.off_block_nonzeros == 0;
    return rep;
}

}  // namespace lambdacav::oracle
