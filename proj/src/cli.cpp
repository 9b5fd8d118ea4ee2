#include "lambdacav/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "lambdacav/numeric.hpp"
#include "lambdacav/observables.hpp"
#include "lambdacav/oracle.hpp"

namespace lambdacav::cli {

namespace {

const std::map<std::string, Measure> kMeasureNames = {
    {"inversion", Measure::inversion},
    {"vn_entropy", Measure::vn_entropy},
    {"linear_entropy", Measure::linear_entropy},
    {"number_phase", Measure::number_phase},
    {"quadrature", Measure::quadrature},
};

std::string measure_name(Measure m) {
    for (const auto& [name, val] : kMeasureNames) {
        if (val == m) return name;
    }
    return "?";
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_real(const std::string& key, const std::string& value, int line) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(value, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != value.size() || value.empty()) {
        throw config_error("line " + std::to_string(line) + ": bad numeric value for '" + key + "'");
    }
    return v;
}

int parse_int(const std::string& key, const std::string& value, int line) {
    const double v = parse_real(key, value, line);
    const int i = static_cast<int>(std::lround(v));
    if (v != static_cast<double>(i)) {
        throw config_error("line " + std::to_string(line) + ": '" + key + "' must be an integer");
    }
    return i;
}

std::set<Measure> parse_measures(const std::string& value, int line) {
    std::set<Measure> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        const auto it = kMeasureNames.find(item);
        if (it == kMeasureNames.end()) {
            throw config_error("line " + std::to_string(line) + ": unknown measure '" + item + "'");
        }
        out.insert(it->second);
    }
    if (out.empty()) throw config_error("line " + std::to_string(line) + ": empty measure list");
    return out;
}

std::string format_value(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

constexpr double kAutoTailEps = 1e-10;
constexpr double kVerifyTol = 1e-8;

}  // namespace

std::set<Measure> all_measures() {
    return {Measure::inversion, Measure::vn_entropy, Measure::linear_entropy, Measure::number_phase,
            Measure::quadrature};
}

void RunConfig::validate() const {
    if (!(alpha1_sq >= 0.0)) throw config_error("alpha1_sq must be nonnegative");
    if (!(alpha2_sq >= 0.0)) throw config_error("alpha2_sq must be nonnegative");
    if (!(chi_over_g >= 0.0)) throw config_error("chi_over_g must be nonnegative");
    if (!(tau_max > 0.0)) throw config_error("tau_max must be positive");
    if (tau_steps < 2) throw config_error("tau_steps must be at least 2");
    if (n_max < 0) throw config_error("n_max must be nonnegative");
    if (phase_points < 8) throw config_error("phase_points must be at least 8");
    if (quad_points < 8) throw config_error("quad_points must be at least 8");
    if (measures.empty()) throw config_error("measures must not be empty");
}

model::EffectiveModel RunConfig::effective() const {
    model::EffectiveModel eff;
    eff.mu = std::sqrt(1.0 + delta * delta);
    eff.gamma = gamma;
    eff.delta2 = delta2_over_g;
    eff.delta3 = delta3_over_g;
    eff.chi = chi_over_g;
    return eff;
}

state::CoherentSpec RunConfig::coherent() const {
    return {std::polar(std::sqrt(alpha1_sq), alpha1_phase),
            std::polar(std::sqrt(alpha2_sq), alpha2_phase)};
}

state::Truncation RunConfig::truncation() const {
    if (n_max > 0) return state::truncation_at(coherent(), n_max, n_max);
    return state::auto_truncation(coherent(), kAutoTailEps);
}

RunConfig parse_config(std::istream& in, const std::string& source_name) {
    RunConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw config_error(source_name + ": line " + std::to_string(lineno) +
                               ": expected 'key = value'");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key == "alpha1_sq") cfg.alpha1_sq = parse_real(key, value, lineno);
        else if (key == "alpha2_sq") cfg.alpha2_sq = parse_real(key, value, lineno);
        else if (key == "alpha1_phase") cfg.alpha1_phase = parse_real(key, value, lineno);
        else if (key == "alpha2_phase") cfg.alpha2_phase = parse_real(key, value, lineno);
        else if (key == "gamma") cfg.gamma = parse_real(key, value, lineno);
        else if (key == "delta") cfg.delta = parse_real(key, value, lineno);
        else if (key == "chi_over_g") cfg.chi_over_g = parse_real(key, value, lineno);
        else if (key == "delta2_over_g") cfg.delta2_over_g = parse_real(key, value, lineno);
        else if (key == "delta3_over_g") cfg.delta3_over_g = parse_real(key, value, lineno);
        else if (key == "n_max") cfg.n_max = parse_int(key, value, lineno);
        else if (key == "tau_max") cfg.tau_max = parse_real(key, value, lineno);
        else if (key == "tau_steps") cfg.tau_steps = parse_int(key, value, lineno);
        else if (key == "phase_points") cfg.phase_points = parse_int(key, value, lineno);
        else if (key == "quad_points") cfg.quad_points = parse_int(key, value, lineno);
        else if (key == "measures") cfg.measures = parse_measures(value, lineno);
        else {
            throw config_error(source_name + ": line " + std::to_string(lineno) +
                               ": unknown key '" + key + "'");
        }
    }
    cfg.validate();
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open config file '" + path + "'");
    return parse_config(in, path);
}

std::string format_config(const RunConfig& cfg) {
    std::ostringstream out;
    out << "alpha1_sq = " << format_value(cfg.alpha1_sq) << "\n";
    out << "alpha2_sq = " << format_value(cfg.alpha2_sq) << "\n";
    out << "alpha1_phase = " << format_value(cfg.alpha1_phase) << "\n";
    out << "alpha2_phase = " << format_value(cfg.alpha2_phase) << "\n";
    out << "gamma = " << format_value(cfg.gamma) << "\n";
    out << "delta = " << format_value(cfg.delta) << "\n";
    out << "chi_over_g = " << format_value(cfg.chi_over_g) << "\n";
    out << "delta2_over_g = " << format_value(cfg.delta2_over_g) << "\n";
    out << "delta3_over_g = " << format_value(cfg.delta3_over_g) << "\n";
    out << "n_max = " << cfg.n_max << "\n";
    out << "tau_max = " << format_value(cfg.tau_max) << "\n";
    out << "tau_steps = " << cfg.tau_steps << "\n";
    out << "phase_points = " << cfg.phase_points << "\n";
    out << "quad_points = " << cfg.quad_points << "\n";
    out << "measures = ";
    bool first = true;
    for (Measure m : cfg.measures) {
        if (!first) out << ",";
        out << measure_name(m);
        first = false;
    }
    out << "\n";
    return out.str();
}

RunConfig preset(const std::string& name, double gamma) {
    RunConfig cfg;
    cfg.gamma = gamma;
    if (name == "fig-a") {
        // resonant, no Kerr
    } else if (name == "fig-b") {
        cfg.delta2_over_g = 7.0;
        cfg.delta3_over_g = 15.0;
    } else if (name == "fig-c") {
        cfg.chi_over_g = 0.4;
    } else if (name == "fig-d") {
        cfg.delta2_over_g = 7.0;
        cfg.delta3_over_g = 15.0;
        cfg.chi_over_g = 0.4;
    } else {
        throw config_error("unknown preset '" + name + "' (expected fig-a..fig-d)");
    }
    return cfg;
}

namespace {

struct MeasureContext {
    const RunConfig* cfg;
    const state::Evolution* evo;
    entropic::PhaseGrid phase_grid;
    entropic::QuadratureGrid xgrid, pgrid;
};

std::vector<double> measure_row(const MeasureContext& ctx, double tau) {
    const state::SystemState st = ctx.evo->at(tau);
    std::vector<double> row{tau};
    const bool need_rho = ctx.cfg->measures.count(Measure::inversion) ||
                          ctx.cfg->measures.count(Measure::vn_entropy) ||
                          ctx.cfg->measures.count(Measure::linear_entropy);
    state::AtomicDensity rho;
    if (need_rho) rho = state::atomic_density(st).normalized();
    if (ctx.cfg->measures.count(Measure::inversion)) {
        row.push_back(observables::inversion(rho));
    }
    if (ctx.cfg->measures.count(Measure::vn_entropy)) {
        row.push_back(observables::von_neumann_entropy(observables::atomic_eigenvalues(rho)));
    }
    if (ctx.cfg->measures.count(Measure::linear_entropy)) {
        row.push_back(observables::linear_entropy(rho));
    }
    if (ctx.cfg->measures.count(Measure::number_phase)) {
        Eigen::MatrixXd pn = entropic::number_distribution(st);
        pn /= pn.sum();
        const double rn = entropic::number_entropy(pn);
        Eigen::MatrixXd pphi = entropic::phase_distribution(st, ctx.phase_grid);
        const double mass = pphi.sum() * ctx.phase_grid.step() * ctx.phase_grid.step();
        pphi /= mass;
        const double rphi = entropic::phase_entropy(pphi, ctx.phase_grid);
        const auto [en, ephi] = entropic::number_phase_squeezing(rn, rphi);
        row.push_back(en);
        row.push_back(ephi);
    }
    if (ctx.cfg->measures.count(Measure::quadrature)) {
        Eigen::VectorXd px = entropic::quadrature_distribution(st, ctx.xgrid);
        Eigen::VectorXd pp = entropic::quadrature_distribution(st, ctx.pgrid);
        const auto mass = [](const Eigen::VectorXd& p, double h) {
            return (p.sum() - 0.5 * (p[0] + p[p.size() - 1])) * h;
        };
        px /= mass(px, ctx.xgrid.step());
        pp /= mass(pp, ctx.pgrid.step());
        const double dx = entropic::entropy_exponential(px, ctx.xgrid);
        const double dp = entropic::entropy_exponential(pp, ctx.pgrid);
        const auto [ex, ep] = entropic::quadrature_squeezing(dx, dp);
        row.push_back(ex);
        row.push_back(ep);
    }
    return row;
}

}  // namespace

SweepTable simulate_table(const RunConfig& cfg, unsigned threads) {
    cfg.validate();
    const state::Evolution evo(cfg.effective(), cfg.coherent(), cfg.truncation());

    MeasureContext ctx;
    ctx.cfg = &cfg;
    ctx.evo = &evo;
    ctx.phase_grid = entropic::PhaseGrid{-numeric::pi, cfg.phase_points};
    const auto alpha2 = cfg.coherent().alpha2;
    const double extent = entropic::auto_extent(evo.truncation().n2_max + 1, alpha2);
    ctx.xgrid = {extent, cfg.quad_points, entropic::Axis::position};
    ctx.pgrid = {extent, cfg.quad_points, entropic::Axis::momentum};

    SweepTable table;
    table.header = {"tau"};
    if (cfg.measures.count(Measure::inversion)) table.header.push_back("W");
    if (cfg.measures.count(Measure::vn_entropy)) table.header.push_back("S_vn");
    if (cfg.measures.count(Measure::linear_entropy)) table.header.push_back("S_lin");
    if (cfg.measures.count(Measure::number_phase)) {
        table.header.push_back("E_n");
        table.header.push_back("E_phi");
    }
    if (cfg.measures.count(Measure::quadrature)) {
        table.header.push_back("E_x");
        table.header.push_back("E_p");
    }

    table.rows.resize(cfg.tau_steps);
    numeric::parallel_for(cfg.tau_steps, threads, [&](std::size_t i) {
        const double tau = cfg.tau_max * static_cast<double>(i) / (cfg.tau_steps - 1);
        table.rows[i] = measure_row(ctx, tau);
    });
    return table;
}

void write_csv(const SweepTable& table, std::ostream& out) {
    for (std::size_t i = 0; i < table.header.size(); ++i) {
        if (i) out << ",";
        out << table.header[i];
    }
    out << "\n";
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ",";
            out << format_value(row[i]);
        }
        out << "\n";
    }
}

void simulate(const RunConfig& cfg, std::ostream& out, unsigned threads) {
    write_csv(simulate_table(cfg, threads), out);
}

void snapshot(const RunConfig& cfg, double tau, SnapshotKind kind, std::ostream& out) {
    cfg.validate();
    if (!(tau >= 0.0)) throw config_error("snapshot: tau must be nonnegative");
    const state::Evolution evo(cfg.effective(), cfg.coherent(), cfg.truncation());
    const state::SystemState st = evo.at(tau);
    const double nrm = state::norm(st);

    if (kind == SnapshotKind::phase) {
        const entropic::PhaseGrid grid{-numeric::pi, cfg.phase_points};
        const Eigen::MatrixXd p = entropic::phase_distribution(st, grid);
        const double mass = p.sum() * grid.step() * grid.step();
        if (std::abs(mass - nrm) > 1e-6) {
            throw numeric_error("phase snapshot normalization drifted: mass " +
                                std::to_string(mass));
        }
        out << "theta1,theta2,P\n";
        for (int i = 0; i < grid.points; ++i) {
            for (int j = 0; j < grid.points; ++j) {
                out << format_value(grid.node(i)) << "," << format_value(grid.node(j)) << ","
                    << format_value(p(i, j)) << "\n";
            }
        }
        return;
    }

    const auto axis = kind == SnapshotKind::position ? entropic::Axis::position
                                                     : entropic::Axis::momentum;
    const auto grid =
        entropic::auto_quadrature_grid(st, cfg.coherent().alpha2, axis, cfg.quad_points);
    const Eigen::VectorXd p = entropic::quadrature_distribution(st, grid);
    const double mass = (p.sum() - 0.5 * (p[0] + p[p.size() - 1])) * grid.step();
    if (std::abs(mass - nrm) > 1e-8) {
        throw numeric_error("quadrature snapshot normalization drifted: mass " +
                            std::to_string(mass));
    }
    out << "u,P\n";
    for (int k = 0; k < grid.points; ++k) {
        out << format_value(grid.node(k)) << "," << format_value(p[k]) << "\n";
    }
}

VerifyOutcome verify(const RunConfig& cfg, bool corrupt_upsilon) {
    cfg.validate();
    const model::EffectiveModel eff = cfg.effective();

    std::vector<blocks::FockBlock> blks = {{0, 0}, {3, 4}, {9, 9}, {10, 10}, {12, 8}};
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> pick(0, 12);
    for (int i = 0; i < 5; ++i) blks.push_back({pick(rng), pick(rng)});

    std::vector<double> grid(501);
    for (int i = 0; i < 501; ++i) grid[i] = 50.0 * i / 500.0;

    VerifyOutcome out{true, ""};
    std::ostringstream rep;
    for (const auto& blk : blks) {
        blocks::BlockSolution sol = blocks::solve_block(eff, blk);
        if (corrupt_upsilon) {
            auto ups = sol.upsilon;
            ups[0] = -ups[0];
            const auto coef =
                blocks::coefficients_from_upsilon(sol.roots, sol.potentials, sol.delta2, ups);
            sol.upsilon = ups;
            sol.coef_a = coef.a;
            sol.coef_b = coef.b;
            sol.coef_c = coef.c;
        }
        const auto report = oracle::verify_solution(sol, grid, kVerifyTol);
        rep << "block (" << blk.n1 << "," << blk.n2 << "): max_abs_error = "
            << format_value(report.max_abs_error) << (report.pass ? " pass" : " FAIL") << "\n";
        out.pass = out.pass && report.pass;
    }
    out.report = rep.str();
    return out;
}

}  // namespace lambdacav::cli
