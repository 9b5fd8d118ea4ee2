// entropic.hpp — number/phase entropies on the two-mode Pegg-Barnett
// distribution and position/momentum entropic squeezing of field mode 2.

#pragma once

#include <complex>
#include <utility>

#include <Eigen/Dense>

#include "lambdacav/numeric.hpp"
#include "lambdacav/state.hpp"

namespace lambdacav::entropic {

using state::SystemState;

// Uniform periodic grid on [theta0, theta0 + 2*pi); the rectangle rule on it
// integrates trigonometric polynomials below the Nyquist order exactly.
struct PhaseGrid {
    double theta0 = -numeric::pi;
    int points = 256;

    double step() const { return 2.0 * numeric::pi / points; }
    double node(int k) const { return theta0 + step() * k; }
};

enum class Axis { position, momentum };

struct QuadratureGrid {
    double extent;       // nodes span [-extent, extent] inclusive
    int points = 2048;
    Axis axis = Axis::position;

    double step() const { return 2.0 * extent / (points - 1); }
    double node(int k) const { return -extent + step() * k; }
};

// Extent covering the highest occupied Fock state's classical turning point
// plus tails and the coherent displacement.
double auto_extent(int max_occupancy, std::complex<double> alpha2);

QuadratureGrid auto_quadrature_grid(const SystemState& s, std::complex<double> alpha2, Axis axis,
                                    int points = 2048);

// Joint photon-number distribution over occupancies (n1, n2); returns an
// (n1_max+1) x (n2_max+2) table summing to the state norm.
Eigen::MatrixXd number_distribution(const SystemState& s);

// Two-mode Pegg-Barnett phase distribution on the grid, one row per theta1
// node; integrates (rectangle rule) to the state norm.
Eigen::MatrixXd phase_distribution(const SystemState& s, const PhaseGrid& g);

// Shannon entropies; both expect distributions normalized to unit mass.
double number_entropy(const Eigen::MatrixXd& pn);
double phase_entropy(const Eigen::MatrixXd& p, const PhaseGrid& g);

// E = exp(R)/sqrt(2 pi) - 1 for each entropy; a component is squeezed when
// the indicator lies in (-1, 0).
std::pair<double, double> number_phase_squeezing(double r_n, double r_phi);

// Harmonic-oscillator eigenfunction <u|m>, by the normalized recurrence from
// psi_0 = pi^{-1/4} e^{-u^2/2}; stays finite for m <= 500, |u| <= 40.
double hermite_fock_function(int m, double u);

// Marginal distribution of mode 2 along the grid axis; the momentum axis
// applies the (-i)^m Fourier phase of each Fock component. Integrates
// (trapezoid rule) to the state norm.
Eigen::VectorXd quadrature_distribution(const SystemState& s, const QuadratureGrid& g);

// delta = exp(-integral P ln P) by the trapezoid rule; expects P normalized.
double entropy_exponential(const Eigen::VectorXd& p, const QuadratureGrid& g);

// E = delta/sqrt(pi e) - 1 for each axis; squeezed when in (-1, 0).
std::pair<double, double> quadrature_squeezing(double dx, double dp);

}  // namespace lambdacav::entropic
