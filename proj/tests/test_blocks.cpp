#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <random>

#include "lambdacav/blocks.hpp"
#include "lambdacav/model.hpp"

using namespace lambdacav;
using blocks::FockBlock;
using model::EffectiveModel;

namespace {

EffectiveModel eff_of(double mu, double gamma, double d2, double d3, double chi) {
    EffectiveModel e;
    e.mu = mu;
    e.gamma = gamma;
    e.delta2 = d2;
    e.delta3 = d3;
    e.chi = chi;
    return e;
}

// Roots of x^3 + x1 x^2 + x2 x + x3 as companion-matrix eigenvalues.
std::array<double, 3> companion_roots(double x1, double x2, double x3) {
    Eigen::Matrix3d c = Eigen::Matrix3d::Zero();
    c(1, 0) = 1.0;
    c(2, 1) = 1.0;
    c(0, 2) = -x3;
    c(1, 2) = -x2;
    c(2, 2) = -x1;
    const Eigen::EigenSolver<Eigen::Matrix3d> es(c);
    std::array<double, 3> out{};
    for (int i = 0; i < 3; ++i) {
        REQUIRE(std::abs(es.eigenvalues()[i].imag()) < 1e-8);
        out[i] = es.eigenvalues()[i].real();
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::array<double, 3> sorted(std::array<double, 3> v) {
    std::sort(v.begin(), v.end());
    return v;
}

double unitarity_defect(const blocks::BlockSolution& sol, double t) {
    const auto amp = blocks::amplitudes_at(sol, t);
    return std::abs(std::norm(amp.a) + std::norm(amp.b) + std::norm(amp.c) - 1.0);
}

}  // namespace

TEST_CASE("block_potentials") {
    const auto p0 = blocks::block_potentials(eff_of(1.0, 1.0, 0.0, 0.0, 0.0), {5, 7});
    CHECK(p0.v1 == 0.0);
    CHECK(p0.v2 == 0.0);

    const auto p = blocks::block_potentials(eff_of(1.0, 2.0, 0.0, 0.0, 0.4), {1, 2});
    CHECK(p.v1 == doctest::Approx(2.4).epsilon(1e-14));
    CHECK(p.v2 == doctest::Approx(4.8).epsilon(1e-14));
    CHECK(p.f1 == doctest::Approx(std::sqrt(3.0)).epsilon(1e-14));
    CHECK(p.f2 == doctest::Approx(2.0 * std::sqrt(3.0)).epsilon(1e-14));
}

TEST_CASE("cubic_coefficients against the block characteristic polynomial") {
    // no Kerr, no detuning: theta (theta^2 - f1^2 - f2^2)
    const auto p0 = blocks::block_potentials(eff_of(1.3, 0.7, 0.0, 0.0, 0.0), {2, 3});
    const auto x0 = blocks::cubic_coefficients(p0, 0.0, 0.0);
    CHECK(x0[0] == 0.0);
    CHECK(x0[1] == doctest::Approx(-(p0.f1 * p0.f1 + p0.f2 * p0.f2)).epsilon(1e-14));
    CHECK(x0[2] == 0.0);

    // x3 loses every term when the Kerr shifts vanish at equal detunings
    const auto peq = blocks::block_potentials(eff_of(1.1, 0.4, 5.0, 5.0, 0.0), {3, 1});
    CHECK(blocks::cubic_coefficients(peq, 5.0, 5.0)[2] == 0.0);

    // the named Kerr + detuning point, against the companion-matrix oracle
    {
        const auto eff = eff_of(1.0, 2.0, 7.0, 15.0, 0.4);
        const auto p = blocks::block_potentials(eff, {1, 2});
        const auto x = blocks::cubic_coefficients(p, eff.delta2, eff.delta3);
        const auto mine = sorted(blocks::solve_cubic(x[0], x[1], x[2]).theta);
        const auto ref = companion_roots(x[0], x[1], x[2]);
        for (int k = 0; k < 3; ++k) CHECK(mine[k] == doctest::Approx(ref[k]).epsilon(1e-10));
    }

    // generic case: coefficients must match det(theta I + M) of the Hermitian
    // block matrix M = [[V1-d2, f1, f2], [f1, V2, 0], [f2, 0, V2+d3-d2]]
    std::mt19937 rng(29);
    std::uniform_real_distribution<double> um(0.5, 2.0), ug(0.0, 3.0), uc(0.0, 1.0), ud(-20.0, 20.0);
    std::uniform_int_distribution<int> un(0, 12);
    for (int i = 0; i < 200; ++i) {
        const auto eff = eff_of(um(rng), ug(rng), ud(rng), ud(rng), uc(rng));
        const auto p = blocks::block_potentials(eff, {un(rng), un(rng)});
        const auto x = blocks::cubic_coefficients(p, eff.delta2, eff.delta3);
        const double a = p.v2 + eff.delta3 - eff.delta2;
        const double b = p.v2;
        const double c = p.v1 - eff.delta2;
        const double scale = std::max({1.0, std::abs(x[0]), std::abs(x[1]), std::abs(x[2])});
        CHECK(std::abs(x[0] - (a + b + c)) <= 1e-12 * scale);
        CHECK(std::abs(x[1] - (a * b + b * c + c * a - p.f1 * p.f1 - p.f2 * p.f2)) <= 1e-12 * scale);
        CHECK(std::abs(x[2] - (a * b * c - p.f1 * p.f1 * a - p.f2 * p.f2 * b)) <= 1e-12 * scale);
    }
}

TEST_CASE("solve_cubic") {
    SUBCASE("resonant no-Kerr factorization") {
        const double omega2 = 7.3;
        const auto roots = blocks::solve_cubic(0.0, -omega2, 0.0);
        const auto s = sorted(roots.theta);
        CHECK(s[0] == doctest::Approx(-std::sqrt(omega2)).epsilon(1e-12));
        CHECK(std::abs(s[1]) < 1e-12);
        CHECK(s[2] == doctest::Approx(std::sqrt(omega2)).epsilon(1e-12));
    }

    SUBCASE("degenerate discriminant signals") {
        CHECK_THROWS_AS(blocks::solve_cubic(0.0, 0.0, 0.0), std::domain_error);
        CHECK_THROWS_AS(blocks::solve_cubic(3.0, 3.0, 1.0), std::domain_error);  // (x+1)^3
    }

    SUBCASE("random physical cubics match the companion matrix and Vieta") {
        std::mt19937 rng(31);
        std::uniform_real_distribution<double> um(0.5, 2.0), ug(0.0, 3.0), uc(0.0, 1.0),
            ud(-20.0, 20.0);
        std::uniform_int_distribution<int> un(0, 12);
        for (int i = 0; i < 100; ++i) {
            const auto eff = eff_of(um(rng), ug(rng), ud(rng), ud(rng), uc(rng));
            const auto p = blocks::block_potentials(eff, {un(rng), un(rng)});
            const auto x = blocks::cubic_coefficients(p, eff.delta2, eff.delta3);
            const auto roots = blocks::solve_cubic(x[0], x[1], x[2]);

            const auto mine = sorted(roots.theta);
            const auto ref = companion_roots(x[0], x[1], x[2]);
            const double scale = std::max({1.0, std::abs(mine[0]), std::abs(mine[2])});
            for (int k = 0; k < 3; ++k) CHECK(std::abs(mine[k] - ref[k]) <= 1e-9 * scale);

            const double s1 = mine[0] + mine[1] + mine[2];
            const double s2 = mine[0] * mine[1] + mine[0] * mine[2] + mine[1] * mine[2];
            const double s3 = mine[0] * mine[1] * mine[2];
            CHECK(std::abs(s1 + x[0]) <= 1e-9 * std::max(1.0, std::abs(x[0])));
            CHECK(std::abs(s2 - x[1]) <= 1e-9 * std::max(1.0, std::abs(x[1])));
            CHECK(std::abs(s3 + x[2]) <= 1e-9 * std::max(1.0, std::abs(x[2])));

            for (double r : roots.theta) {
                const double res = ((r + x[0]) * r + x[1]) * r + x[2];
                const double mag = std::abs(r * r * r) + std::abs(x[0] * r * r) +
                                   std::abs(x[1] * r) + std::abs(x[2]);
                CHECK(std::abs(res) <= 1e-9 * std::max(1.0, mag));
            }
        }
    }
}

TEST_CASE("upsilon reconstructs the initial conditions") {
    std::mt19937 rng(37);
    std::uniform_real_distribution<double> um(0.5, 2.0), ug(0.1, 3.0), uc(0.0, 1.0), ud(-20.0, 20.0);
    std::uniform_int_distribution<int> un(0, 12);
    for (int i = 0; i < 100; ++i) {
        const auto eff = eff_of(um(rng), ug(rng), ud(rng), ud(rng), uc(rng));
        const auto sol = blocks::solve_block(eff, {un(rng), un(rng)});

        double a0 = 0.0, b0 = 0.0;
        for (int m = 0; m < 3; ++m) {
            a0 += -(sol.roots.theta[m] + sol.potentials.v2) * sol.upsilon[m];
            b0 += sol.upsilon[m];
        }
        CHECK(std::abs(a0 - 1.0) <= 1e-10);
        CHECK(std::abs(sol.potentials.f1 * b0) <= 1e-10);

        const auto amp = blocks::amplitudes_at(sol, 0.0);
        CHECK(std::abs(amp.a - 1.0) <= 1e-10);
        CHECK(std::abs(amp.b) <= 1e-10);
        CHECK(std::abs(amp.c) <= 1e-10);
    }
}

TEST_CASE("amplitudes_at") {
    SUBCASE("resonant no-Kerr Rabi cosine") {
        for (double gamma : {0.0, 1.0, 2.0}) {
            for (int n2 : {0, 3, 10}) {
                const auto eff = eff_of(1.0, gamma, 0.0, 0.0, 0.0);
                const auto sol = blocks::solve_block(eff, {4, n2});
                const double omega = std::sqrt((n2 + 1.0) * (1.0 + gamma * gamma));
                for (double t : {0.0, 0.37, 2.0, 9.5, 25.0}) {
                    const auto amp = blocks::amplitudes_at(sol, t);
                    const double expected = std::cos(omega * t) * std::cos(omega * t);
                    CHECK(std::abs(std::norm(amp.a) - expected) <= 1e-10);
                }
            }
        }
    }

    SUBCASE("lower levels fill in the coupling ratio at resonance") {
        const auto eff = eff_of(1.0, 2.0, 0.0, 0.0, 0.0);
        const auto sol = blocks::solve_block(eff, {2, 5});
        for (double t : {0.3, 1.1, 4.0}) {
            const auto amp = blocks::amplitudes_at(sol, t);
            if (std::abs(amp.b) > 1e-6) {
                CHECK(std::norm(amp.c) / std::norm(amp.b) == doctest::Approx(4.0).epsilon(1e-8));
            }
        }
    }

    SUBCASE("unitarity across random blocks and times") {
        std::mt19937 rng(41);
        std::uniform_real_distribution<double> um(0.5, 2.0), ug(0.0, 3.0), uc(0.0, 1.0),
            ud(-20.0, 20.0), ut(0.0, 50.0);
        std::uniform_int_distribution<int> un(0, 12);
        for (int i = 0; i < 500; ++i) {
            const auto eff = eff_of(um(rng), ug(rng), ud(rng), ud(rng), uc(rng));
            const auto sol = blocks::solve_block(eff, {un(rng), un(rng)});
            CHECK(unitarity_defect(sol, ut(rng)) <= 1e-10);
        }
    }

    SUBCASE("gamma = 0 leaves level 3 empty") {
        const auto eff = eff_of(1.2, 0.0, 3.0, -2.0, 0.2);
        const auto sol = blocks::solve_block(eff, {1, 2});
        CHECK(sol.spectral);
        for (double t : {0.5, 5.0, 20.0}) {
            const auto amp = blocks::amplitudes_at(sol, t);
            CHECK(std::abs(amp.c) <= 1e-12);
            CHECK(unitarity_defect(sol, t) <= 1e-10);
        }
    }
}
