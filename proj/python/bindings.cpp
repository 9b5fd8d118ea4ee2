// bindings.cpp — pybind11 module exposing the simulator's main operations.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "lambdacav/cli.hpp"
#include "lambdacav/entropic.hpp"
#include "lambdacav/model.hpp"
#include "lambdacav/observables.hpp"
#include "lambdacav/oracle.hpp"
#include "lambdacav/state.hpp"

namespace py = pybind11;
using namespace lambdacav;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact dynamics and nonclassicality measures of a three-level atom "
              "coupled to two cavity modes in a Kerr medium";

    // model
    py::class_<model::RawModel>(m, "RawModel")
        .def(py::init<>())
        .def_readwrite("omega_atom", &model::RawModel::omega_atom)
        .def_readwrite("omega_field", &model::RawModel::omega_field)
        .def_readwrite("g", &model::RawModel::g)
        .def_readwrite("gamma_ratio", &model::RawModel::gamma_ratio)
        .def_readwrite("delta_ratio", &model::RawModel::delta_ratio)
        .def_readwrite("chi", &model::RawModel::chi);

    py::class_<model::EffectiveModel>(m, "EffectiveModel")
        .def(py::init<>())
        .def(py::init([](double mu, double gamma, double delta2, double delta3, double chi) {
                 return model::EffectiveModel{mu, gamma, delta2, delta3, chi};
             }),
             py::arg("mu") = 1.0, py::arg("gamma") = 1.0, py::arg("delta2") = 0.0,
             py::arg("delta3") = 0.0, py::arg("chi") = 0.0)
        .def_readwrite("mu", &model::EffectiveModel::mu)
        .def_readwrite("gamma", &model::EffectiveModel::gamma)
        .def_readwrite("delta2", &model::EffectiveModel::delta2)
        .def_readwrite("delta3", &model::EffectiveModel::delta3)
        .def_readwrite("chi", &model::EffectiveModel::chi);

    m.def("field_field_coupling", &model::field_field_coupling);
    m.def("rotation_angle", &model::rotation_angle);
    m.def("transformed_frequencies", &model::transformed_frequencies);
    m.def("effective_couplings", &model::effective_couplings);
    m.def("derive_effective", &model::derive_effective);
    m.def("rotate_coherent_amplitudes", &model::rotate_coherent_amplitudes);

    // blocks
    py::class_<blocks::FockBlock>(m, "FockBlock")
        .def(py::init<int, int>(), py::arg("n1"), py::arg("n2"))
        .def_readwrite("n1", &blocks::FockBlock::n1)
        .def_readwrite("n2", &blocks::FockBlock::n2);

    py::class_<blocks::BlockPotentials>(m, "BlockPotentials")
        .def_readonly("v1", &blocks::BlockPotentials::v1)
        .def_readonly("v2", &blocks::BlockPotentials::v2)
        .def_readonly("f1", &blocks::BlockPotentials::f1)
        .def_readonly("f2", &blocks::BlockPotentials::f2);

    py::class_<blocks::CubicRoots>(m, "CubicRoots")
        .def_readonly("theta", &blocks::CubicRoots::theta)
        .def_readonly("phi", &blocks::CubicRoots::phi);

    py::class_<blocks::BlockSolution>(m, "BlockSolution")
        .def_readonly("block", &blocks::BlockSolution::block)
        .def_readonly("potentials", &blocks::BlockSolution::potentials)
        .def_readonly("roots", &blocks::BlockSolution::roots)
        .def_readonly("upsilon", &blocks::BlockSolution::upsilon)
        .def_readonly("spectral", &blocks::BlockSolution::spectral);

    m.def("block_potentials", &blocks::block_potentials);
    m.def("cubic_coefficients", &blocks::cubic_coefficients);
    m.def("solve_cubic", &blocks::solve_cubic);
    m.def("solve_block", &blocks::solve_block);
    m.def("amplitudes_at", [](const blocks::BlockSolution& sol, double t) {
        const auto amp = blocks::amplitudes_at(sol, t);
        return py::make_tuple(amp.a, amp.b, amp.c);
    });

    // state
    py::class_<state::CoherentSpec>(m, "CoherentSpec")
        .def(py::init<std::complex<double>, std::complex<double>>(), py::arg("alpha1"),
             py::arg("alpha2"))
        .def_readwrite("alpha1", &state::CoherentSpec::alpha1)
        .def_readwrite("alpha2", &state::CoherentSpec::alpha2);

    py::class_<state::Truncation>(m, "Truncation")
        .def(py::init<int, int, double>(), py::arg("n1_max"), py::arg("n2_max"),
             py::arg("tail_mass") = 0.0)
        .def_readwrite("n1_max", &state::Truncation::n1_max)
        .def_readwrite("n2_max", &state::Truncation::n2_max)
        .def_readwrite("tail_mass", &state::Truncation::tail_mass);

    py::class_<state::SystemState>(m, "SystemState")
        .def_readonly("time", &state::SystemState::time)
        .def_readonly("trunc", &state::SystemState::trunc)
        .def_readonly("amp1", &state::SystemState::amp1)
        .def_readonly("amp2", &state::SystemState::amp2)
        .def_readonly("amp3", &state::SystemState::amp3)
        .def("norm", [](const state::SystemState& s) { return state::norm(s); });

    py::class_<state::Evolution>(m, "Evolution")
        .def(py::init<const model::EffectiveModel&, const state::CoherentSpec&,
                      const state::Truncation&>(),
             py::arg("effective"), py::arg("coherent"), py::arg("truncation"))
        .def("at", &state::Evolution::at, py::arg("t"))
        .def_property_readonly("truncation", &state::Evolution::truncation);

    py::class_<state::AtomicDensity>(m, "AtomicDensity")
        .def_readonly("rho", &state::AtomicDensity::rho)
        .def("trace", &state::AtomicDensity::trace)
        .def("normalized", &state::AtomicDensity::normalized);

    m.def("coherent_weights", &state::coherent_weights);
    m.def("auto_truncation", &state::auto_truncation, py::arg("spec"), py::arg("eps") = 1e-10);
    m.def("truncation_at", &state::truncation_at);
    m.def("evolve", &state::evolve);
    m.def("atomic_density", &state::atomic_density);

    // observables
    m.def("inversion", &observables::inversion);
    m.def("atomic_eigenvalues", &observables::atomic_eigenvalues);
    m.def("jacobi_eigenvalues", &observables::jacobi_eigenvalues);
    m.def("von_neumann_entropy", &observables::von_neumann_entropy);
    m.def("linear_entropy", &observables::linear_entropy);

    // entropic
    py::class_<entropic::PhaseGrid>(m, "PhaseGrid")
        .def(py::init([](double theta0, int points) {
                 return entropic::PhaseGrid{theta0, points};
             }),
             py::arg("theta0") = -numeric::pi, py::arg("points") = 256)
        .def_readwrite("theta0", &entropic::PhaseGrid::theta0)
        .def_readwrite("points", &entropic::PhaseGrid::points)
        .def("node", &entropic::PhaseGrid::node)
        .def("step", &entropic::PhaseGrid::step);

    py::enum_<entropic::Axis>(m, "Axis")
        .value("position", entropic::Axis::position)
        .value("momentum", entropic::Axis::momentum);

    py::class_<entropic::QuadratureGrid>(m, "QuadratureGrid")
        .def(py::init([](double extent, int points, entropic::Axis axis) {
                 return entropic::QuadratureGrid{extent, points, axis};
             }),
             py::arg("extent"), py::arg("points") = 2048,
             py::arg("axis") = entropic::Axis::position)
        .def_readwrite("extent", &entropic::QuadratureGrid::extent)
        .def_readwrite("points", &entropic::QuadratureGrid::points)
        .def_readwrite("axis", &entropic::QuadratureGrid::axis)
        .def("node", &entropic::QuadratureGrid::node)
        .def("step", &entropic::QuadratureGrid::step);

    m.def("auto_extent", &entropic::auto_extent);
    m.def("auto_quadrature_grid", &entropic::auto_quadrature_grid, py::arg("state"),
          py::arg("alpha2"), py::arg("axis"), py::arg("points") = 2048);
    m.def("number_distribution", &entropic::number_distribution);
    m.def("phase_distribution", &entropic::phase_distribution);
    m.def("number_entropy", &entropic::number_entropy);
    m.def("phase_entropy", &entropic::phase_entropy);
    m.def("number_phase_squeezing", &entropic::number_phase_squeezing);
    m.def("hermite_fock_function", &entropic::hermite_fock_function);
    m.def("quadrature_distribution", &entropic::quadrature_distribution);
    m.def("entropy_exponential", &entropic::entropy_exponential);
    m.def("quadrature_squeezing", &entropic::quadrature_squeezing);

    // oracle
    py::class_<oracle::BlockODE>(m, "BlockODE")
        .def(py::init([](double v1, double v2, double f1, double f2, double d2, double d3) {
                 return oracle::BlockODE{v1, v2, f1, f2, d2, d3};
             }),
             py::arg("v1"), py::arg("v2"), py::arg("f1"), py::arg("f2"), py::arg("delta2"),
             py::arg("delta3"))
        .def_static("from_model", &oracle::BlockODE::from);

    py::class_<oracle::VerifyReport>(m, "VerifyReport")
        .def_readonly("max_abs_error", &oracle::VerifyReport::max_abs_error)
        .def_readonly("pass_", &oracle::VerifyReport::pass);

    m.def("integrate_block",
          [](const oracle::BlockODE& ode, const std::vector<double>& grid, double step_scale) {
              const auto ser = oracle::integrate_block(ode, grid, step_scale);
              return py::make_tuple(ser.a, ser.b, ser.c);
          },
          py::arg("ode"), py::arg("t_grid"), py::arg("step_scale") = 1.0);
    m.def("verify_block",
          [](const model::EffectiveModel& eff, const blocks::FockBlock& blk,
             const std::vector<double>& grid, double tol) {
              return oracle::verify_block(eff, blk, grid, tol);
          },
          py::arg("effective"), py::arg("block"), py::arg("t_grid"), py::arg("tol") = 1e-8);

    // run layer
    py::enum_<cli::Measure>(m, "Measure")
        .value("inversion", cli::Measure::inversion)
        .value("vn_entropy", cli::Measure::vn_entropy)
        .value("linear_entropy", cli::Measure::linear_entropy)
        .value("number_phase", cli::Measure::number_phase)
        .value("quadrature", cli::Measure::quadrature);

    py::class_<cli::RunConfig>(m, "RunConfig")
        .def(py::init<>())
        .def_readwrite("alpha1_sq", &cli::RunConfig::alpha1_sq)
        .def_readwrite("alpha2_sq", &cli::RunConfig::alpha2_sq)
        .def_readwrite("alpha1_phase", &cli::RunConfig::alpha1_phase)
        .def_readwrite("alpha2_phase", &cli::RunConfig::alpha2_phase)
        .def_readwrite("gamma", &cli::RunConfig::gamma)
        .def_readwrite("delta", &cli::RunConfig::delta)
        .def_readwrite("chi_over_g", &cli::RunConfig::chi_over_g)
        .def_readwrite("delta2_over_g", &cli::RunConfig::delta2_over_g)
        .def_readwrite("delta3_over_g", &cli::RunConfig::delta3_over_g)
        .def_readwrite("n_max", &cli::RunConfig::n_max)
        .def_readwrite("tau_max", &cli::RunConfig::tau_max)
        .def_readwrite("tau_steps", &cli::RunConfig::tau_steps)
        .def_readwrite("phase_points", &cli::RunConfig::phase_points)
        .def_readwrite("quad_points", &cli::RunConfig::quad_points)
        .def_readwrite("measures", &cli::RunConfig::measures)
        .def("effective", &cli::RunConfig::effective)
        .def("coherent", &cli::RunConfig::coherent)
        .def("truncation", &cli::RunConfig::truncation);

    m.def("preset", &cli::preset, py::arg("name"), py::arg("gamma") = 1.0);
    m.def("simulate",
          [](const cli::RunConfig& cfg, unsigned threads) {
              const auto table = cli::simulate_table(cfg, threads);
              py::dict out;
              for (std::size_t c = 0; c < table.header.size(); ++c) {
                  py::list col;
                  for (const auto& row : table.rows) col.append(row[c]);
                  out[py::str(table.header[c])] = col;
              }
              return out;
          },
          py::arg("config"), py::arg("threads") = 0);
    m.def("simulate_csv", [](const cli::RunConfig& cfg, unsigned threads) {
              std::ostringstream out;
              cli::simulate(cfg, out, threads);
              return out.str();
          },
          py::arg("config"), py::arg("threads") = 0);
    m.def("verify",
          [](const cli::RunConfig& cfg, bool corrupt) {
              const auto outcome = cli::verify(cfg, corrupt);
              return py::make_tuple(outcome.pass, outcome.report);
          },
          py::arg("config"), py::arg("corrupt_upsilon") = false);

    py::register_exception<cli::config_error>(m, "ConfigError");
    py::register_exception<cli::numeric_error>(m, "NumericError");
}
