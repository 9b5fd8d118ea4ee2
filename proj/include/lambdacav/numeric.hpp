// numeric.hpp — small numeric kernels: reduced-argument phases, trigonometric
// cubic roots, 3x3 Hermitian Jacobi diagonalization, Poisson tails.

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <functional>

namespace lambdacav::numeric {

using cplx = std::complex<double>;

inline constexpr double pi = 3.141592653589793238462643383279502884;

// e^{i w t} with the product w*t reduced mod 2*pi in extended precision, so
// long evolutions (t up to 1e4 at rates of hundreds) keep full phase accuracy.
cplx phase_exp(double w, double t);

// Near-triple-root test for x^3 + x1 x^2 + x2 x + x3: q = x1^2 - 3 x2 ~ 0.
bool cubic_near_triple(double x1, double x2);

struct TrigCubicRoots {
    std::array<double, 3> roots;  // cosine-phase order m = 1, 2, 3
    double phi;                   // Cardano angle
};

// All-real-roots cubic by the trigonometric method, polished by Newton steps
// in long double. The arccos argument may sit up to 1e-12 outside [-1, 1]
// (clamped); beyond that, or at a near-triple root, throws std::domain_error.
TrigCubicRoots solve_trig_cubic(double x1, double x2, double x3);

struct Herm3Eigen {
    std::array<double, 3> values;                     // ascending
    std::array<std::array<cplx, 3>, 3> vectors;       // vectors[k][i]: component i of eigenvector k
};

// Cyclic Jacobi sweeps on a 3x3 Hermitian matrix, row-major input.
Herm3Eigen jacobi_hermitian3(const std::array<cplx, 9>& a);

struct PoissonCut {
    int n_max;
    double tail;  // P(N > n_max)
};

// Smallest n_max with Poisson(lambda) tail P(N > n_max) < eps.
PoissonCut poisson_cutoff(double lambda, double eps);

// P(N > n) for Poisson(lambda).
double poisson_tail(double lambda, int n);

// Index-parallel map over [0, n); threads == 1 runs inline. The callee must
// write only to its own index so results cannot depend on scheduling.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn);

}  // namespace lambdacav::numeric
