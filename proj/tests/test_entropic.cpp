#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>

#include "lambdacav/entropic.hpp"
#include "lambdacav/numeric.hpp"
#include "lambdacav/state.hpp"

using namespace lambdacav;
using entropic::Axis;
using entropic::PhaseGrid;
using entropic::QuadratureGrid;
using std::complex;

namespace {

constexpr double kPi = numeric::pi;

state::Evolution make_evolution(const model::EffectiveModel& eff, complex<double> a1,
                                complex<double> a2) {
    const state::CoherentSpec spec{a1, a2};
    return state::Evolution(eff, spec, state::auto_truncation(spec));
}

model::EffectiveModel fig_a(double gamma = 1.0) {
    model::EffectiveModel e;
    e.gamma = gamma;
    return e;
}

double phase_mass(const Eigen::MatrixXd& p, const PhaseGrid& g) {
    return p.sum() * g.step() * g.step();
}

double quad_mass(const Eigen::VectorXd& p, const QuadratureGrid& g) {
    return (p.sum() - 0.5 * (p[0] + p[p.size() - 1])) * g.step();
}

}  // namespace

TEST_CASE("number_distribution") {
    SUBCASE("vacuum point mass") {
        const auto evo = make_evolution(fig_a(), 0.0, 0.0);
        const auto p = entropic::number_distribution(evo.at(0.0));
        CHECK(p(0, 0) == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(p.sum() == doctest::Approx(1.0).epsilon(1e-14));
    }

    SUBCASE("initial product of Poisson distributions") {
        const auto evo = make_evolution(fig_a(), std::sqrt(2.0), std::sqrt(3.0));
        const auto s = evo.at(0.0);
        const auto p = entropic::number_distribution(s);
        for (int i = 0; i < p.rows(); ++i) {
            for (int j = 0; j + 1 < p.cols(); ++j) {
                const double expect = std::norm(state::coherent_weights(std::sqrt(2.0), i)[i]) *
                                      std::norm(state::coherent_weights(std::sqrt(3.0), j)[j]);
                CHECK(p(i, j) == doctest::Approx(expect).epsilon(1e-10));
            }
        }
    }

    SUBCASE("sums to the state norm at any time") {
        const auto evo = make_evolution(fig_a(), std::sqrt(10.0), std::sqrt(10.0));
        for (double t : {0.0, 1.3, 6.4}) {
            const auto s = evo.at(t);
            CHECK(std::abs(entropic::number_distribution(s).sum() - state::norm(s)) <= 1e-12);
        }
    }
}

TEST_CASE("phase_distribution") {
    SUBCASE("vacuum is flat at 1/(4 pi^2)") {
        const auto evo = make_evolution(fig_a(), 0.0, 0.0);
        const auto p = entropic::phase_distribution(evo.at(0.0), PhaseGrid{});
        const double flat = 1.0 / (4.0 * kPi * kPi);
        CHECK((p.array() - flat).abs().maxCoeff() <= 1e-12);
    }

    SUBCASE("integrates to the state norm") {
        const auto evo = make_evolution(fig_a(), std::sqrt(10.0), std::sqrt(10.0));
        const PhaseGrid g{};
        for (double t : {0.0, 2.2, 9.0}) {
            const auto s = evo.at(t);
            const auto p = entropic::phase_distribution(s, g);
            CHECK(std::abs(phase_mass(p, g) - state::norm(s)) <= 1e-6);
            CHECK(p.minCoeff() >= 0.0);
        }
    }

    SUBCASE("matches direct summation and peaks at the coherent phase") {
        const auto evo = make_evolution(fig_a(), std::sqrt(2.0), std::sqrt(3.0));
        const auto s = evo.at(0.0);
        const PhaseGrid g{-kPi, 64};
        const auto p = entropic::phase_distribution(s, g);

        // direct two-sided sums at a handful of nodes
        for (int gi : {0, 9, 21, 32, 40, 55}) {
            for (int gj : {3, 17, 32, 51}) {
                complex<double> f1 = 0.0, f2 = 0.0, f3 = 0.0;
                for (int a = 0; a < s.amp1.rows(); ++a) {
                    for (int b = 0; b < s.amp1.cols(); ++b) {
                        const auto w = std::polar(1.0, -(a * g.node(gi) + b * g.node(gj)));
                        f1 += s.amp1(a, b) * w;
                        f2 += s.amp2(a, b) * w;
                        f3 += s.amp3(a, b) * w;
                    }
                }
                const double direct =
                    (std::norm(f1) + std::norm(f2) + std::norm(f3)) / (4.0 * kPi * kPi);
                CHECK(p(gi, gj) == doctest::Approx(direct).epsilon(1e-10));
            }
        }

        // marginal over theta2 peaks at theta2 = 0 for real positive alpha2
        Eigen::VectorXd marginal = p.colwise().sum();
        int peak = 0;
        marginal.maxCoeff(&peak);
        CHECK(std::abs(g.node(peak)) <= 2.0 * kPi / g.points + 1e-12);
    }

    SUBCASE("theta0 shift plus equal coherent-phase rotation leaves the entropy alone") {
        const double shift = kPi / 3.0;
        const auto evo1 = make_evolution(fig_a(), std::sqrt(10.0), std::sqrt(10.0));
        const auto evo2 = make_evolution(fig_a(), std::polar(std::sqrt(10.0), shift),
                                         std::polar(std::sqrt(10.0), shift));
        const auto s1 = evo1.at(4.0);
        const auto s2 = evo2.at(4.0);
        const PhaseGrid g1{-kPi, 128};
        const PhaseGrid g2{-kPi + shift, 128};
        auto p1 = entropic::phase_distribution(s1, g1);
        auto p2 = entropic::phase_distribution(s2, g2);
        p1 /= phase_mass(p1, g1);
        p2 /= phase_mass(p2, g2);
        CHECK(std::abs(entropic::phase_entropy(p1, g1) - entropic::phase_entropy(p2, g2)) <= 1e-8);
    }
}

TEST_CASE("number and phase entropies with squeezing indicators") {
    const auto evo = make_evolution(fig_a(), 0.0, 0.0);
    const auto s = evo.at(0.0);

    auto pn = entropic::number_distribution(s);
    pn /= pn.sum();
    const double rn = entropic::number_entropy(pn);
    CHECK(std::abs(rn) <= 1e-12);

    const PhaseGrid g{};
    auto pphi = entropic::phase_distribution(s, g);
    pphi /= phase_mass(pphi, g);
    const double rphi = entropic::phase_entropy(pphi, g);
    CHECK(rphi == doctest::Approx(std::log(4.0 * kPi * kPi)).epsilon(1e-10));

    const auto [en, ephi] = entropic::number_phase_squeezing(rn, rphi);
    CHECK(en == doctest::Approx(1.0 / std::sqrt(2.0 * kPi) - 1.0).epsilon(1e-10));
    CHECK(en == doctest::Approx(-0.60110).epsilon(1e-4));
    CHECK(ephi == doctest::Approx(4.0 * kPi * kPi / std::sqrt(2.0 * kPi) - 1.0).epsilon(1e-9));
    CHECK(ephi == doctest::Approx(14.7496).epsilon(1e-4));

    // the number-phase entropic lower bound, exponentiated
    CHECK((en + 1.0) * (ephi + 1.0) >= 1.0 - 1e-6);
    CHECK(rn + rphi >= std::log(2.0 * kPi) - 1e-6);
}

TEST_CASE("hermite_fock_function") {
    CHECK(entropic::hermite_fock_function(0, 0.0) == doctest::Approx(0.751126).epsilon(1e-6));
    CHECK(entropic::hermite_fock_function(0, 0.0) ==
          doctest::Approx(std::pow(kPi, -0.25)).epsilon(1e-14));
    CHECK(std::abs(entropic::hermite_fock_function(1, 0.0)) == 0.0);
    CHECK(std::isfinite(entropic::hermite_fock_function(500, 40.0)));
    CHECK(std::isfinite(entropic::hermite_fock_function(500, -40.0)));

    SUBCASE("orthonormal on the default grid") {
        const QuadratureGrid g{entropic::auto_extent(51, 0.0), 2048, Axis::position};
        std::vector<Eigen::VectorXd> psi(51);
        for (int m = 0; m <= 50; ++m) {
            psi[m].resize(g.points);
            for (int k = 0; k < g.points; ++k) psi[m][k] = entropic::hermite_fock_function(m, g.node(k));
        }
        for (int m = 0; m <= 50; m += 7) {
            for (int k = m; k <= 50; k += 5) {
                const Eigen::VectorXd prod = psi[m].cwiseProduct(psi[k]);
                const double I = (prod.sum() - 0.5 * (prod[0] + prod[prod.size() - 1])) * g.step();
                CHECK(std::abs(I - (m == k ? 1.0 : 0.0)) <= 1e-8);
            }
        }
    }
}

TEST_CASE("quadrature_distribution") {
    SUBCASE("vacuum Gaussian on both axes") {
        const auto evo = make_evolution(fig_a(), 0.0, 0.0);
        const auto s = evo.at(0.0);
        const auto gx = entropic::auto_quadrature_grid(s, 0.0, Axis::position);
        const auto gp = entropic::auto_quadrature_grid(s, 0.0, Axis::momentum);
        const auto px = entropic::quadrature_distribution(s, gx);
        const auto pp = entropic::quadrature_distribution(s, gp);
        for (int k = 0; k < gx.points; k += 97) {
            const double u = gx.node(k);
            CHECK(std::abs(px[k] - std::exp(-u * u) / std::sqrt(kPi)) <= 1e-12);
        }
        CHECK((px - pp).cwiseAbs().maxCoeff() <= 1e-12);
    }

    SUBCASE("coherent Gaussian: displaced mean, coherent-state width") {
        const complex<double> a2 = std::sqrt(10.0);
        const auto evo = make_evolution(fig_a(), std::sqrt(10.0), a2);
        const auto s = evo.at(0.0);
        const auto g = entropic::auto_quadrature_grid(s, a2, Axis::position);
        auto p = entropic::quadrature_distribution(s, g);
        p /= quad_mass(p, g);
        double mean = 0.0, var = 0.0;
        for (int k = 0; k < g.points; ++k) mean += g.node(k) * p[k] * g.step();
        for (int k = 0; k < g.points; ++k) {
            var += (g.node(k) - mean) * (g.node(k) - mean) * p[k] * g.step();
        }
        CHECK(mean == doctest::Approx(std::sqrt(2.0) * std::sqrt(10.0)).epsilon(1e-6));
        CHECK(var == doctest::Approx(0.5).epsilon(1e-6));
    }

    SUBCASE("integrates to the state norm") {
        const auto evo = make_evolution(fig_a(), std::sqrt(10.0), std::sqrt(10.0));
        for (double t : {0.0, 1.9, 8.0}) {
            const auto s = evo.at(t);
            for (Axis ax : {Axis::position, Axis::momentum}) {
                const auto g = entropic::auto_quadrature_grid(s, std::sqrt(10.0), ax);
                const auto p = entropic::quadrature_distribution(s, g);
                CHECK(std::abs(quad_mass(p, g) - state::norm(s)) <= 1e-8);
            }
        }
    }
}

TEST_CASE("entropy_exponential and quadrature squeezing") {
    const QuadratureGrid g{12.0, 4096, Axis::position};

    SUBCASE("unit-variance-1/2 Gaussian gives sqrt(pi e)") {
        Eigen::VectorXd p(g.points);
        for (int k = 0; k < g.points; ++k) {
            const double u = g.node(k);
            p[k] = std::exp(-u * u) / std::sqrt(kPi);
        }
        const double d = entropic::entropy_exponential(p, g);
        CHECK(d == doctest::Approx(std::sqrt(kPi * std::exp(1.0))).epsilon(1e-10));
        CHECK(d == doctest::Approx(2.9222824).epsilon(1e-6));
        const auto [ex, ep] = entropic::quadrature_squeezing(d, d);
        CHECK(std::abs(ex) <= 1e-10);
        CHECK(std::abs(ep) <= 1e-10);
    }

    SUBCASE("flat density of width w gives w") {
        const double w = 7.0;
        Eigen::VectorXd p(g.points);
        for (int k = 0; k < g.points; ++k) p[k] = std::abs(g.node(k)) <= w / 2.0 ? 1.0 / w : 0.0;
        // renormalize on the grid; the hard edges limit the quadrature here
        Eigen::VectorXd pn = p / quad_mass(p, g);
        CHECK(entropic::entropy_exponential(pn, g) == doctest::Approx(w).epsilon(1e-2));
    }
}

TEST_CASE("uncertainty products along an evolution") {
    const auto evo = make_evolution(fig_a(2.0), std::sqrt(10.0), std::sqrt(10.0));
    const PhaseGrid pg{};
    for (double t : {0.0, 0.7, 3.0, 11.0}) {
        const auto s = evo.at(t);

        auto pn = entropic::number_distribution(s);
        pn /= pn.sum();
        auto pphi = entropic::phase_distribution(s, pg);
        pphi /= phase_mass(pphi, pg);
        const double rn = entropic::number_entropy(pn);
        const double rphi = entropic::phase_entropy(pphi, pg);
        CHECK(rn + rphi >= std::log(2.0 * kPi) - 1e-6);

        const auto gx = entropic::auto_quadrature_grid(s, std::sqrt(10.0), Axis::position);
        const auto gp = entropic::auto_quadrature_grid(s, std::sqrt(10.0), Axis::momentum);
        auto px = entropic::quadrature_distribution(s, gx);
        auto pp = entropic::quadrature_distribution(s, gp);
        px /= quad_mass(px, gx);
        pp /= quad_mass(pp, gp);
        const double dx = entropic::entropy_exponential(px, gx);
        const double dp = entropic::entropy_exponential(pp, gp);
        CHECK(dx * dp >= kPi * std::exp(1.0) * (1.0 - 1e-6));
    }
}

TEST_CASE("grid refinement changes nothing at the reported digits") {
    const auto evo = make_evolution(fig_a(), std::sqrt(10.0), std::sqrt(10.0));
    const auto s = evo.at(2.5);

    const PhaseGrid g256{-kPi, 256};
    const PhaseGrid g512{-kPi, 512};
    auto p1 = entropic::phase_distribution(s, g256);
    auto p2 = entropic::phase_distribution(s, g512);
    p1 /= phase_mass(p1, g256);
    p2 /= phase_mass(p2, g512);
    CHECK(std::abs(entropic::phase_entropy(p1, g256) - entropic::phase_entropy(p2, g512)) < 1e-6);

    const double extent = entropic::auto_extent(s.trunc.n2_max + 1, std::sqrt(10.0));
    const QuadratureGrid q2048{extent, 2048, Axis::position};
    const QuadratureGrid q4096{extent, 4096, Axis::position};
    auto d1 = entropic::quadrature_distribution(s, q2048);
    auto d2 = entropic::quadrature_distribution(s, q4096);
    d1 /= quad_mass(d1, q2048);
    d2 /= quad_mass(d2, q4096);
    CHECK(std::abs(entropic::entropy_exponential(d1, q2048) -
                   entropic::entropy_exponential(d2, q4096)) < 1e-8);
}
