#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "singosc/errors.hpp"
#include "singosc/model.hpp"
#include "singosc/profile.hpp"
#include "singosc/propagation.hpp"
#include "singosc/reflection.hpp"
#include "singosc/settings.hpp"
#include "singosc/su11.hpp"
#include "singosc/transitions.hpp"

namespace py = pybind11;
using namespace singosc;

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Singular oscillator with time-dependent frequency: su(1,1) closed "
      "forms, classical reflection parameter, and a truncated-basis "
      "propagation oracle.";

  // Exception hierarchy; register the base first so derived translators
  // take precedence.
  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<CollapseError>(m, "CollapseError", base);
  py::register_exception<RangeError>(m, "RangeError", base);
  py::register_exception<PoleError>(m, "PoleError", base);
  py::register_exception<AsymptoteError>(m, "AsymptoteError", base);
  py::register_exception<WronskianError>(m, "WronskianError", base);
  py::register_exception<TruncationError>(m, "TruncationError", base);
  py::register_exception<NormDriftError>(m, "NormDriftError", base);
  py::register_exception<LeakageError>(m, "LeakageError", base);
  py::register_exception<ParseError>(m, "ParseError", base);

  py::class_<OscillatorModel>(m, "OscillatorModel")
      .def_readonly("coupling", &OscillatorModel::coupling)
      .def_readonly("weight", &OscillatorModel::weight)
      .def_readonly("origin_exponent", &OscillatorModel::origin_exponent)
      .def("minus_two_j", &OscillatorModel::minus_two_j)
      .def("__repr__", [](const OscillatorModel& model) {
        return "OscillatorModel(g=" + std::to_string(model.coupling) +
               ", j=" + std::to_string(model.weight) + ")";
      });

  m.def("make_model", &make_model, py::arg("g"),
        py::arg("allow_boundary") = false,
        "Validated model for coupling g > -1 (= -1 with allow_boundary).");

  py::class_<SolverSettings>(m, "SolverSettings")
      .def(py::init<>())
      .def_static("classical", &SolverSettings::classical)
      .def_static("schrodinger", &SolverSettings::schrodinger)
      .def_readwrite("rel_tol", &SolverSettings::rel_tol)
      .def_readwrite("abs_tol", &SolverSettings::abs_tol)
      .def_readwrite("max_step", &SolverSettings::max_step)
      .def_readwrite("fixed_step", &SolverSettings::fixed_step)
      .def_readwrite("asymptote_tol", &SolverSettings::asymptote_tol)
      .def_readwrite("wronskian_tol", &SolverSettings::wronskian_tol)
      .def_readwrite("max_refinements", &SolverSettings::max_refinements)
      .def_readwrite("basis_size", &SolverSettings::basis_size)
      .def_readwrite("norm_tol", &SolverSettings::norm_tol)
      .def_readwrite("leakage_tol", &SolverSettings::leakage_tol)
      .def_readwrite("krylov_max", &SolverSettings::krylov_max);

  py::enum_<ProfileKind>(m, "ProfileKind")
      .value("Constant", ProfileKind::Constant)
      .value("SuddenJump", ProfileKind::SuddenJump)
      .value("TanhStep", ProfileKind::TanhStep)
      .value("Table", ProfileKind::Table)
      .value("PiecewiseLinear", ProfileKind::PiecewiseLinear);

  py::class_<FrequencyProfile>(m, "FrequencyProfile")
      .def_static("constant", &FrequencyProfile::constant, py::arg("omega"),
                  py::arg("t_start") = 0.0, py::arg("t_end") = 1.0)
      .def_static("sudden_jump", &FrequencyProfile::sudden_jump,
                  py::arg("omega_minus"), py::arg("omega_plus"),
                  py::arg("t0") = 0.0, py::arg("width") = 1e-4)
      .def_static("tanh_step", &FrequencyProfile::tanh_step,
                  py::arg("omega_minus"), py::arg("omega_plus"),
                  py::arg("tau"), py::arg("t0") = 0.0)
      .def_static("table", &FrequencyProfile::table, py::arg("samples"))
      .def_static("piecewise_linear", &FrequencyProfile::piecewise_linear,
                  py::arg("samples"))
      .def_static("load_table", &FrequencyProfile::load_table,
                  py::arg("path"))
      .def("kind", &FrequencyProfile::kind)
      .def("omega", &FrequencyProfile::omega, py::arg("t"))
      .def("omega_squared", &FrequencyProfile::omega_squared, py::arg("t"))
      .def("omega_minus", &FrequencyProfile::omega_minus)
      .def("omega_plus", &FrequencyProfile::omega_plus)
      .def("t_start", &FrequencyProfile::t_start)
      .def("t_end", &FrequencyProfile::t_end)
      .def("validate", &FrequencyProfile::validate, py::arg("tol") = 1e-8);

  py::class_<GeneratorMatrices>(m, "GeneratorMatrices")
      .def_readonly("dimension", &GeneratorMatrices::dimension)
      .def_readonly("j0_diagonal", &GeneratorMatrices::j0_diagonal)
      .def_readonly("ladder_offdiag", &GeneratorMatrices::ladder_offdiag)
      .def_readonly("weight", &GeneratorMatrices::weight)
      .def("j0", &GeneratorMatrices::j0)
      .def("j1", &GeneratorMatrices::j1)
      .def("j2", &GeneratorMatrices::j2);

  py::class_<AlgebraReport>(m, "AlgebraReport")
      .def_readonly("commutator_defect", &AlgebraReport::commutator_defect)
      .def_readonly("casimir_defect", &AlgebraReport::casimir_defect);

  m.def("build_generators", &build_generators, py::arg("model"),
        py::arg("dimension"));
  m.def("hamiltonian_matrix", &hamiltonian_matrix, py::arg("generators"),
        py::arg("omega"));
  m.def("check_algebra", &check_algebra, py::arg("generators"));

  py::class_<ReflectionResult>(m, "ReflectionResult")
      .def_readonly("transmitted", &ReflectionResult::transmitted)
      .def_readonly("reflected", &ReflectionResult::reflected)
      .def_readonly("rho", &ReflectionResult::rho)
      .def_readonly("wronskian_defect", &ReflectionResult::wronskian_defect)
      .def_readonly("solver_steps", &ReflectionResult::solver_steps);

  m.def("compute_rho", &compute_rho, py::arg("profile"),
        py::arg("settings") = SolverSettings::classical());
  m.def("rho_sudden", &rho_sudden, py::arg("omega_minus"),
        py::arg("omega_plus"));

  m.def("energy_level", &energy_level, py::arg("model"), py::arg("n"),
        py::arg("omega"));
  m.def("transition_probability", &transition_probability, py::arg("model"),
        py::arg("m"), py::arg("n"), py::arg("rho"));
  m.def("transition_probability_hypergeometric",
        &transition_probability_hypergeometric, py::arg("model"),
        py::arg("m"), py::arg("n"), py::arg("rho"));
  m.def("vacuum_probability", &vacuum_probability, py::arg("model"),
        py::arg("n"), py::arg("rho"));
  m.def("row_probabilities", &row_probabilities, py::arg("model"),
        py::arg("m"), py::arg("rho"), py::arg("tail_target") = 1e-12);
  m.def("generating_g0", &generating_g0, py::arg("model"), py::arg("rho"),
        py::arg("z"));
  m.def("generating_g1", &generating_g1, py::arg("model"), py::arg("rho"),
        py::arg("z"));
  m.def("adiabatic_invariant_ratio", &adiabatic_invariant_ratio,
        py::arg("model"), py::arg("m"), py::arg("rho"));
  m.def("mean_excitation_diagnostic", &mean_excitation_diagnostic,
        py::arg("model"), py::arg("m"), py::arg("rho"),
        py::arg("tail_target") = 1e-12);

  py::class_<TransitionTable>(m, "TransitionTable")
      .def_readonly("model", &TransitionTable::model)
      .def_readonly("rho", &TransitionTable::rho)
      .def_readonly("max_m", &TransitionTable::max_m)
      .def_readonly("max_n", &TransitionTable::max_n)
      .def_readonly("w", &TransitionTable::w)
      .def_readonly("row_tail_mass", &TransitionTable::row_tail_mass);

  m.def("build_table", &build_table, py::arg("model"), py::arg("rho"),
        py::arg("max_m"), py::arg("max_n"));

  py::class_<InvariantDiagnostic>(m, "InvariantDiagnostic")
      .def_readonly("summed_ratio", &InvariantDiagnostic::summed_ratio)
      .def_readonly("residual", &InvariantDiagnostic::residual)
      .def_readonly("terms", &InvariantDiagnostic::terms);

  py::enum_<StepMethod>(m, "StepMethod")
      .value("ExponentialMidpoint", StepMethod::ExponentialMidpoint)
      .value("CrankNicolson", StepMethod::CrankNicolson);

  py::class_<FockVector>(m, "FockVector")
      .def_readonly("amplitudes", &FockVector::amplitudes)
      .def_readonly("norm_defect", &FockVector::norm_defect);

  m.def("initial_state", &initial_state, py::arg("generators"),
        py::arg("omega_minus"), py::arg("m"));
  m.def("propagate", &propagate, py::arg("generators"), py::arg("profile"),
        py::arg("psi0"), py::arg("settings") = SolverSettings::schrodinger(),
        py::arg("method") = StepMethod::ExponentialMidpoint);
  m.def("extract_probabilities", &extract_probabilities,
        py::arg("generators"), py::arg("omega_plus"), py::arg("psi_final"),
        py::arg("n_max"));

  py::class_<OracleReport>(m, "OracleReport")
      .def_readonly("w_numeric", &OracleReport::w_numeric)
      .def_readonly("w_closed", &OracleReport::w_closed)
      .def_readonly("max_abs_diff", &OracleReport::max_abs_diff)
      .def_readonly("truncation", &OracleReport::truncation)
      .def_readonly("leakage", &OracleReport::leakage)
      .def_readonly("rho", &OracleReport::rho)
      .def_readonly("solver_steps", &OracleReport::solver_steps);

  m.def("compare", &compare, py::arg("model"), py::arg("profile"),
        py::arg("m_max"), py::arg("n_max"),
        py::arg("settings") = SolverSettings::schrodinger());

  m.attr("__version__") = "1.0.0";
}
