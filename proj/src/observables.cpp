#include "lambdacav/observables.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lambdacav/numeric.hpp"

namespace lambdacav::observables {

namespace {

std::array<double, 3> clamp_and_sort(std::array<double, 3> z) {
    for (double& v : z) {
        if (v < 0.0) {
            if (v < -1e-12) throw std::domain_error("atomic_eigenvalues: density not positive semidefinite");
            v = 0.0;
        }
    }
    std::sort(z.begin(), z.end(), std::greater<>());
    return z;
}

}  // namespace

double inversion(const AtomicDensity& d) {
    return std::real(d.rho(0, 0) - d.rho(1, 1) - d.rho(2, 2));
}

std::array<double, 3> atomic_eigenvalues(const AtomicDensity& rho) {
    const Eigen::Matrix3cd r = rho.normalized().rho;
    const double r00 = std::real(r(0, 0)), r11 = std::real(r(1, 1)), r22 = std::real(r(2, 2));
    const double m01 = std::norm(r(0, 1)), m02 = std::norm(r(0, 2)), m12 = std::norm(r(1, 2));
    const double xi1 = -(r00 + r11 + r22);
    const double xi2 = r00 * r11 + r11 * r22 + r22 * r00 - m01 - m12 - m02;
    const double xi3 = -r00 * r11 * r22 - 2.0 * std::real(r(0, 1) * r(1, 2) * r(2, 0)) +
                       r00 * m12 + r11 * m02 + r22 * m01;
    if (numeric::cubic_near_triple(xi1, xi2)) {
        return {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
    }
    const auto sol = numeric::solve_trig_cubic(xi1, xi2, xi3);
    return clamp_and_sort({sol.roots[0], sol.roots[1], sol.roots[2]});
}

std::array<double, 3> jacobi_eigenvalues(const AtomicDensity& rho) {
    const Eigen::Matrix3cd r = rho.normalized().rho;
    std::array<numeric::cplx, 9> m{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[3 * i + j] = r(i, j);
    const auto eig = numeric::jacobi_hermitian3(m);
    return clamp_and_sort({eig.values[0], eig.values[1], eig.values[2]});
}

double von_neumann_entropy(const std::array<double, 3>& zeta) {
    double s = 0.0;
    for (double z : zeta) {
        if (z > 0.0) s -= z * std::log(z);
    }
    return s;
}

double linear_entropy(const AtomicDensity& rho) {
    const Eigen::Matrix3cd r = rho.normalized().rho;
    return 1.0 - std::real((r * r).trace());
}

}  // namespace lambdacav::observables
