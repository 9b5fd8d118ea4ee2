// cli.hpp — run configuration, figure presets, measure sweeps, distribution
// snapshots, and oracle verification runs behind the command-line tool.

#pragma once

#include <iosfwd>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "lambdacav/entropic.hpp"
#include "lambdacav/model.hpp"
#include "lambdacav/state.hpp"

namespace lambdacav::cli {

struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Measure { inversion, vn_entropy, linear_entropy, number_phase, quadrature };

std::set<Measure> all_measures();

struct RunConfig {
    double alpha1_sq = 10.0;      // mean photon number of mode 1
    double alpha2_sq = 10.0;      // mean photon number of mode 2
    double alpha1_phase = 0.0;    // coherent amplitude phases (radians)
    double alpha2_phase = 0.0;
    double gamma = 1.0;           // coupling ratio
    double delta = 0.0;           // g(1)/g(2) ratio; mu/g = sqrt(1 + delta^2)
    double chi_over_g = 0.0;
    double delta2_over_g = 0.0;
    double delta3_over_g = 0.0;
    int n_max = 0;                // Fock cutoff per mode; 0 selects the automatic tail rule
    double tau_max = 25.0;        // sweep end, in units of 1/g
    int tau_steps = 501;
    int phase_points = 256;
    int quad_points = 2048;
    std::set<Measure> measures = all_measures();

    void validate() const;  // throws config_error naming the offending field

    model::EffectiveModel effective() const;
    state::CoherentSpec coherent() const;
    state::Truncation truncation() const;
};

// Line-based `key = value` text with `#` comments; unknown keys are rejected
// with their line number, missing keys keep the defaults above.
RunConfig load_config(const std::string& path);
RunConfig parse_config(std::istream& in, const std::string& source_name);

// Round-trips through parse_config.
std::string format_config(const RunConfig& cfg);

// fig-a: resonant, no Kerr. fig-b: detunings 7, 15. fig-c: Kerr 0.4.
// fig-d: both. All at |alpha|^2 = 10 per mode.
RunConfig preset(const std::string& name, double gamma);

struct SweepTable {
    std::vector<std::string> header;            // "tau" then the selected measure columns
    std::vector<std::vector<double>> rows;      // sorted by tau
};

SweepTable simulate_table(const RunConfig& cfg, unsigned threads = 0);

// CSV with 9-significant-digit values and LF line endings; byte-stable for a
// fixed config regardless of thread count.
void write_csv(const SweepTable& table, std::ostream& out);
void simulate(const RunConfig& cfg, std::ostream& out, unsigned threads = 0);

enum class SnapshotKind { phase, position, momentum };

// Distribution snapshot at one time; verifies the distribution's mass against
// the state norm before emitting and throws numeric_error on a mismatch.
void snapshot(const RunConfig& cfg, double tau, SnapshotKind kind, std::ostream& out);

struct VerifyOutcome {
    bool pass;
    std::string report;  // one line per checked block
};

// Oracle sweep at the config's parameters: canonical plus seeded-random blocks
// over tau in [0, 50] at tolerance 1e-8. corrupt_upsilon flips the sign of one
// weight per block first; a healthy build must then fail.
VerifyOutcome verify(const RunConfig& cfg, bool corrupt_upsilon = false);

}  // namespace lambdacav::cli
