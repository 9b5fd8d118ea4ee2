// model.hpp — lab-frame parameters and the canonical mode rotation that
// reduces the Hamiltonian to generalized Jaynes-Cummings form.

#pragma once

#include <array>
#include <complex>
#include <utility>

namespace lambdacav::model {

// Lab-frame rates (hbar = c = 1). The four atom-field couplings are
// reconstructed from the base coupling and the two ratios:
//   g1(2) = g,  g2(2) = gamma g,  g1(1) = delta g,  g2(1) = delta gamma g,
// so g(1)/g(2) = delta holds for both transitions by construction. Kerr
// susceptibilities are tied to a single rate: chi1 = chi2 = chi, chi12 = 2 chi;
// only then does the mode rotation leave the Kerr part form-invariant.
struct RawModel {
    std::array<double, 3> omega_atom{0.0, 0.0, 0.0};  // level energies, |1> the upper level
    std::array<double, 2> omega_field{0.0, 0.0};      // bare cavity mode frequencies
    double g = 1.0;                                   // base atom-field coupling, > 0
    double gamma_ratio = 1.0;                         // g2(j) / g1(j)
    double delta_ratio = 0.0;                         // g(1) / g(2), |delta| != 1
    double chi = 0.0;                                 // Kerr rate, >= 0

    void validate() const;  // throws std::domain_error
};

// Interaction-picture parameters that fully determine the dynamics, in units
// of the base coupling g.
struct EffectiveModel {
    double mu = 1.0;      // coupling of the surviving (atom-facing) mode
    double gamma = 1.0;   // ratio of the |1>-|3> to |1>-|2> couplings
    double delta2 = 0.0;  // detuning of the |1> <-> |2> transition
    double delta3 = 0.0;  // detuning of the |1> <-> |3> transition
    double chi = 0.0;     // Kerr rate

    void validate() const;  // throws std::domain_error
};

// Mode-mode exchange rate g12 = delta (Omega2 - Omega1) / (1 - delta^2).
double field_field_coupling(const RawModel& raw);

// Rotation removing the mode-mode coupling. Branch chosen so tan(theta) =
// delta_ratio always; for |delta| < 1 this is (1/2) atan(2 g12 / (Omega2 - Omega1)).
double rotation_angle(const RawModel& raw);

// Rotated-mode frequencies (bold Omega1, bold Omega2); their sum equals
// Omega1 + Omega2 and the pair is the spectrum of [[Omega1, g12], [g12, Omega2]].
std::pair<double, double> transformed_frequencies(const RawModel& raw, double theta);

// mu[k][j]: rotated-frame coupling of transition k (0: |1>-|2>, 1: |1>-|3>)
// to mode j. At theta = rotation_angle, column j = 0 vanishes: mode b1 decouples.
using CouplingTable = std::array<std::array<double, 2>, 2>;
CouplingTable effective_couplings(const RawModel& raw, double theta);

EffectiveModel derive_effective(const RawModel& raw);

// Coherent amplitudes of the rotated modes equivalent to lab-mode amplitudes
// (alpha1, alpha2); preserves |alpha1|^2 + |alpha2|^2.
std::pair<std::complex<double>, std::complex<double>>
rotate_coherent_amplitudes(std::complex<double> alpha1, std::complex<double> alpha2, double theta);

}  // namespace lambdacav::model
