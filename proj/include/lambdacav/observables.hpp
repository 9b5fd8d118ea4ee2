// observables.hpp — atomic population inversion, von Neumann entanglement
// entropy through Cardano eigenvalues, and the linear entropy.

#pragma once

#include <array>

#include "lambdacav/state.hpp"

namespace lambdacav::observables {

using state::AtomicDensity;

// W = rho11 - (rho22 + rho33).
double inversion(const AtomicDensity& rho);

// Eigenvalues of the trace-normalized density by the trigonometric Cardano
// formula, descending. Falls back to 1/3,1/3,1/3 at the isotropic point; tiny
// negatives (>= -1e-12) clamp to zero, anything below that throws.
std::array<double, 3> atomic_eigenvalues(const AtomicDensity& rho);

// Same spectrum through Jacobi sweeps; the independent route used for
// cross-checks and available as a degenerate fallback.
std::array<double, 3> jacobi_eigenvalues(const AtomicDensity& rho);

// -sum zeta ln zeta with 0 ln 0 = 0; range [0, ln 3] for a three-level atom.
double von_neumann_entropy(const std::array<double, 3>& zeta);

// Idempotency defect 1 - Tr rho^2 of the trace-normalized density; zero for
// pure states, at most 2/3 for a qutrit.
double linear_entropy(const AtomicDensity& rho);

}  // namespace lambdacav::observables
