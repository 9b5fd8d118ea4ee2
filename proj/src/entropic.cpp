#include "lambdacav/entropic.hpp"

#include <cmath>
#include <stdexcept>

namespace lambdacav::entropic {

namespace {

using numeric::cplx;

// W(g, n) = e^{-i n theta_g}, built by phase recurrence along each row.
Eigen::MatrixXcd twiddle_table(const PhaseGrid& g, int n_count) {
    Eigen::MatrixXcd w(g.points, n_count);
    for (int k = 0; k < g.points; ++k) {
        const cplx step = std::polar(1.0, -g.node(k));
        cplx cur = 1.0;
        for (int n = 0; n < n_count; ++n) {
            w(k, n) = cur;
            cur *= step;
        }
    }
    return w;
}

// psi(x, m) for m = 0..m_max on the grid nodes.
Eigen::MatrixXd hermite_table(const QuadratureGrid& g, int m_max) {
    Eigen::MatrixXd psi(g.points, m_max + 1);
    constexpr double quarter_root_pi = 0.7511255444649424828587030047762276930510;
    for (int k = 0; k < g.points; ++k) {
        const double u = g.node(k);
        psi(k, 0) = quarter_root_pi * std::exp(-0.5 * u * u);
        if (m_max >= 1) psi(k, 1) = std::sqrt(2.0) * u * psi(k, 0);
        for (int m = 1; m < m_max; ++m) {
            psi(k, m + 1) = std::sqrt(2.0 / (m + 1)) * u * psi(k, m) -
                            std::sqrt(m / (m + 1.0)) * psi(k, m - 1);
        }
    }
    return psi;
}

// Mode-2 reduced density in the storage basis: rho(n2, n2') = sum_n1 amp(n1,n2) conj(amp(n1,n2')).
Eigen::MatrixXcd mode2_reduced(const Eigen::MatrixXcd& amp) {
    return amp.transpose() * amp.conjugate();
}

double trapezoid(const Eigen::VectorXd& f, double h) {
    double s = f.sum() - 0.5 * (f[0] + f[f.size() - 1]);
    return s * h;
}

}  // namespace

double auto_extent(int max_occupancy, std::complex<double> alpha2) {
    return std::sqrt(2.0 * max_occupancy + 1.0) + 5.0 + std::sqrt(2.0) * std::abs(alpha2);
}

QuadratureGrid auto_quadrature_grid(const SystemState& s, std::complex<double> alpha2, Axis axis,
                                    int points) {
    return {auto_extent(s.trunc.n2_max + 1, alpha2), points, axis};
}

Eigen::MatrixXd number_distribution(const SystemState& s) {
    const int r = static_cast<int>(s.amp1.rows());
    const int c = static_cast<int>(s.amp1.cols());
    Eigen::MatrixXd p = Eigen::MatrixXd::Zero(r, c + 1);
    p.leftCols(c) = s.amp1.cwiseAbs2();
    p.rightCols(c) += s.amp2.cwiseAbs2() + s.amp3.cwiseAbs2();
    return p;
}

Eigen::MatrixXd phase_distribution(const SystemState& s, const PhaseGrid& g) {
    if (g.points < 2) throw std::domain_error("phase_distribution: grid too small");
    const Eigen::MatrixXcd w1 = twiddle_table(g, static_cast<int>(s.amp1.rows()));
    const Eigen::MatrixXcd w2 = twiddle_table(g, static_cast<int>(s.amp1.cols()));
    Eigen::MatrixXd p = Eigen::MatrixXd::Zero(g.points, g.points);
    const double scale = 1.0 / (4.0 * numeric::pi * numeric::pi);
    for (const Eigen::MatrixXcd* amp : {&s.amp1, &s.amp2, &s.amp3}) {
        const Eigen::MatrixXcd t = w1 * (*amp);
        p.noalias() += scale * (t * w2.transpose()).cwiseAbs2();
    }
    return p;
}

double number_entropy(const Eigen::MatrixXd& pn) {
    double r = 0.0;
    for (Eigen::Index j = 0; j < pn.cols(); ++j) {
        for (Eigen::Index i = 0; i < pn.rows(); ++i) {
            const double v = pn(i, j);
            if (v > 0.0) r -= v * std::log(v);
        }
    }
    return r;
}

double phase_entropy(const Eigen::MatrixXd& p, const PhaseGrid& g) {
    double r = 0.0;
    for (Eigen::Index j = 0; j < p.cols(); ++j) {
        for (Eigen::Index i = 0; i < p.rows(); ++i) {
            const double v = p(i, j);
            if (v > 0.0) r -= v * std::log(v);
        }
    }
    return r * g.step() * g.step();
}

std::pair<double, double> number_phase_squeezing(double r_n, double r_phi) {
    const double inv = 1.0 / std::sqrt(2.0 * numeric::pi);
    return {inv * std::exp(r_n) - 1.0, inv * std::exp(r_phi) - 1.0};
}

double hermite_fock_function(int m, double u) {
    if (m < 0) throw std::domain_error("hermite_fock_function: negative index");
    constexpr double quarter_root_pi = 0.7511255444649424828587030047762276930510;
    double prev = quarter_root_pi * std::exp(-0.5 * u * u);
    if (m == 0) return prev;
    double cur = std::sqrt(2.0) * u * prev;
    for (int k = 1; k < m; ++k) {
        const double next = std::sqrt(2.0 / (k + 1)) * u * cur - std::sqrt(k / (k + 1.0)) * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

Eigen::VectorXd quadrature_distribution(const SystemState& s, const QuadratureGrid& g) {
    if (g.points < 2) throw std::domain_error("quadrature_distribution: grid too small");
    const int c = static_cast<int>(s.amp1.cols());
    const int m_count = c + 1;  // occupancies 0..n2_max+1

    // Occupancy-basis mode-2 density, the three level sectors summed after the
    // mode-1 trace; levels 2/3 sit one photon higher.
    Eigen::MatrixXcd r = Eigen::MatrixXcd::Zero(m_count, m_count);
    r.topLeftCorner(c, c) = mode2_reduced(s.amp1);
    r.bottomRightCorner(c, c) += mode2_reduced(s.amp2) + mode2_reduced(s.amp3);

    if (g.axis == Axis::momentum) {
        // <p|m> = (-i)^m psi_m(p): conjugate the density by diag((-i)^m).
        static const cplx cycle[4] = {{1.0, 0.0}, {0.0, -1.0}, {-1.0, 0.0}, {0.0, 1.0}};
        for (int a = 0; a < m_count; ++a) {
            for (int b = 0; b < m_count; ++b) {
                r(a, b) *= cycle[a % 4] * std::conj(cycle[b % 4]);
            }
        }
    }

    const Eigen::MatrixXd rr = r.real();
    const Eigen::MatrixXd psi = hermite_table(g, m_count - 1);
    return ((psi * rr).cwiseProduct(psi)).rowwise().sum();
}

double entropy_exponential(const Eigen::VectorXd& p, const QuadratureGrid& g) {
    Eigen::VectorXd plogp(p.size());
    for (Eigen::Index i = 0; i < p.size(); ++i) {
        const double v = p[i];
        plogp[i] = v > 0.0 ? v * std::log(v) : 0.0;
    }
    return std::exp(-trapezoid(plogp, g.step()));
}

std::pair<double, double> quadrature_squeezing(double dx, double dp) {
    const double inv = 1.0 / std::sqrt(numeric::pi * std::exp(1.0));
    return {inv * dx - 1.0, inv * dp - 1.0};
}

}  // namespace lambdacav::entropic
