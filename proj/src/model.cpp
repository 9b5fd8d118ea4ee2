#include "lambdacav/model.hpp"

#include <cmath>
#include <stdexcept>

namespace lambdacav::model {

void RawModel::validate() const {
    if (!(g > 0.0)) throw std::domain_error("RawModel: base coupling g must be positive");
    if (!(chi >= 0.0)) throw std::domain_error("RawModel: Kerr rate chi must be nonnegative");
    const double d2 = delta_ratio * delta_ratio;
    if (std::abs(d2 - 1.0) < 1e-12) {
        throw std::domain_error("RawModel: coupling ratio delta is singular at delta^2 = 1");
    }
}

void EffectiveModel::validate() const {
    if (!(mu > 0.0)) throw std::domain_error("EffectiveModel: mu must be positive");
    if (!(chi >= 0.0)) throw std::domain_error("EffectiveModel: chi must be nonnegative");
}

double field_field_coupling(const RawModel& raw) {
    raw.validate();
    const double d = raw.delta_ratio;
    return d * (raw.omega_field[1] - raw.omega_field[0]) / (1.0 - d * d);
}

double rotation_angle(const RawModel& raw) {
    raw.validate();
    return std::atan(raw.delta_ratio);
}

std::pair<double, double> transformed_frequencies(const RawModel& raw, double theta) {
    const double g12 = field_field_coupling(raw);
    const double c = std::cos(theta), s = std::sin(theta);
    const double w1 = raw.omega_field[0], w2 = raw.omega_field[1];
    const double sin2t = 2.0 * s * c;
    return {w1 * c * c + w2 * s * s - g12 * sin2t,
            w1 * s * s + w2 * c * c + g12 * sin2t};
}

CouplingTable effective_couplings(const RawModel& raw, double theta) {
    raw.validate();
    const double c = std::cos(theta), s = std::sin(theta);
    const std::array<double, 2> g1 = {raw.delta_ratio * raw.g, raw.g};                      // transition |1>-|2>
    const std::array<double, 2> g2 = {raw.delta_ratio * raw.gamma_ratio * raw.g,
                                      raw.gamma_ratio * raw.g};                             // transition |1>-|3>
    CouplingTable mu{};
    mu[0][0] = g1[0] * c - g1[1] * s;
    mu[0][1] = g1[0] * s + g1[1] * c;
    mu[1][0] = g2[0] * c - g2[1] * s;
    mu[1][1] = g2[0] * s + g2[1] * c;
    return mu;
}

EffectiveModel derive_effective(const RawModel& raw) {
    const double theta = rotation_angle(raw);
    const auto [bo1, bo2] = transformed_frequencies(raw, theta);
    (void)bo1;
    EffectiveModel eff;
    eff.mu = raw.g * std::sqrt(1.0 + raw.delta_ratio * raw.delta_ratio);
    eff.gamma = raw.gamma_ratio;
    eff.delta2 = bo2 - (raw.omega_atom[0] - raw.omega_atom[1]);
    eff.delta3 = bo2 - (raw.omega_atom[0] - raw.omega_atom[2]);
    eff.chi = raw.chi;
    return eff;
}

std::pair<std::complex<double>, std::complex<double>>
rotate_coherent_amplitudes(std::complex<double> alpha1, std::complex<double> alpha2, double theta) {
    const double c = std::cos(theta), s = std::sin(theta);
    return {alpha1 * c - alpha2 * s, alpha1 * s + alpha2 * c};
}

}  // namespace lambdacav::model
