#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pwtime/embedding.hpp"
#include "pwtime/indicators.hpp"
#include "pwtime/sampling.hpp"

namespace py = pybind11;

using namespace pwtime;

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Clock-conditioned evolution, time-averaged reduced states, and the "
      "linear-entropy entanglement indicator for finite-dimensional systems";

  py::class_<ValidationReport>(m, "ValidationReport")
      .def_readonly("valid", &ValidationReport::valid)
      .def_readonly("hermiticity_residual",
                    &ValidationReport::hermiticity_residual)
      .def_readonly("trace_residual", &ValidationReport::trace_residual)
      .def_readonly("min_eigenvalue", &ValidationReport::min_eigenvalue)
      .def_readonly("tol", &ValidationReport::tol);

  py::class_<DensityMatrix>(m, "DensityMatrix")
      .def(py::init<ComplexMatrix, double>(), py::arg("matrix"),
           py::arg("tol") = kDefaultValidationTol)
      .def_property_readonly("matrix", &DensityMatrix::matrix)
      .def_property_readonly("dim", &DensityMatrix::dim)
      .def_property_readonly("validation_tol", &DensityMatrix::validation_tol);

  py::class_<PureState>(m, "PureState")
      .def(py::init<ComplexVector, double>(), py::arg("amplitudes"),
           py::arg("norm_tol") = kDefaultValidationTol)
      .def_property_readonly("amplitudes", &PureState::amplitudes)
      .def_property_readonly("dim", &PureState::dim)
      .def_property_readonly("norm_tol", &PureState::norm_tol);

  py::class_<LevelGroup>(m, "LevelGroup")
      .def_readonly("energy", &LevelGroup::energy)
      .def_readonly("members", &LevelGroup::members);

  py::class_<LevelGroups>(m, "LevelGroups")
      .def_readonly("groups", &LevelGroups::groups)
      .def_readonly("group_tol", &LevelGroups::group_tol)
      .def_readonly("dim", &LevelGroups::dim)
      .def("find", &LevelGroups::find, py::arg("energy"));

  py::class_<EnergySpectrum>(m, "EnergySpectrum")
      .def(py::init<RealVector, double, double>(), py::arg("levels"),
           py::arg("hbar") = 1.0, py::arg("group_tol") = kDefaultGroupTol)
      .def_property_readonly("levels", &EnergySpectrum::levels)
      .def_property_readonly("dim", &EnergySpectrum::dim)
      .def_property_readonly("hbar", &EnergySpectrum::hbar)
      .def_property_readonly("group_tol", &EnergySpectrum::group_tol)
      .def_property_readonly("level_groups", &EnergySpectrum::level_groups)
      .def("level", &EnergySpectrum::level)
      .def("effective_level", &EnergySpectrum::effective_level)
      .def("same_group", &EnergySpectrum::same_group)
      .def("gap", &EnergySpectrum::gap)
      .def("omega", &EnergySpectrum::omega);

  py::class_<EnergyDistribution::Entry>(m, "EnergyEntry")
      .def_readonly("energy", &EnergyDistribution::Entry::energy)
      .def_readonly("probability", &EnergyDistribution::Entry::probability);

  py::class_<EnergyDistribution>(m, "EnergyDistribution")
      .def_readonly("entries", &EnergyDistribution::entries);

  py::class_<EvolutionWindow>(m, "EvolutionWindow")
      .def(py::init<double, double>(), py::arg("T"), py::arg("hbar") = 1.0)
      .def_readonly("T", &EvolutionWindow::T)
      .def_readonly("hbar", &EvolutionWindow::hbar);

  py::class_<CollapsedState>(m, "CollapsedState")
      .def_readonly("state", &CollapsedState::state)
      .def_readonly("probability", &CollapsedState::probability);

  py::class_<EntropyDecomposition>(m, "EntropyDecomposition")
      .def_readonly("total", &EntropyDecomposition::total)
      .def_readonly("spread", &EntropyDecomposition::spread)
      .def_readonly("conditional", &EntropyDecomposition::conditional);

  py::class_<EigenDecomposition>(m, "EigenDecomposition")
      .def_readonly("eigenvalues", &EigenDecomposition::eigenvalues)
      .def_readonly("eigenvectors", &EigenDecomposition::eigenvectors);

  py::class_<WhiteNoisePredictions>(m, "WhiteNoisePredictions")
      .def_readonly("delta_s_max", &WhiteNoisePredictions::delta_s_max)
      .def_readonly("quantum_dispersion",
                    &WhiteNoisePredictions::quantum_dispersion);

  py::class_<IndicatorReport>(m, "IndicatorReport")
      .def_readonly("delta_s", &IndicatorReport::delta_s)
      .def_readonly("delta_s_max", &IndicatorReport::delta_s_max)
      .def_readonly("short_time_estimate", &IndicatorReport::short_time_estimate)
      .def_readonly("s_global", &IndicatorReport::s_global)
      .def_readonly("s_reduced", &IndicatorReport::s_reduced)
      .def_readonly("path_discrepancy", &IndicatorReport::path_discrepancy)
      .def_readonly("entangled_witness", &IndicatorReport::entangled_witness)
      .def_readonly("witness_tol", &IndicatorReport::witness_tol);

  py::class_<DiscreteClock>(m, "DiscreteClock")
      .def(py::init<int, double>(), py::arg("ticks"), py::arg("T"))
      .def_readonly("ticks", &DiscreteClock::ticks)
      .def_readonly("T", &DiscreteClock::T)
      .def("tick_time", &DiscreteClock::tick_time);

  py::class_<CompositeScenario>(m, "CompositeScenario")
      .def(py::init<std::vector<double>, std::vector<PureState>,
                    EnergySpectrum, DiscreteClock>(),
           py::arg("weights"), py::arg("initial_states"), py::arg("spec"),
           py::arg("clock"))
      .def_readonly("weights", &CompositeScenario::weights)
      .def_readonly("initial_states", &CompositeScenario::initial_states)
      .def_readonly("spec", &CompositeScenario::spec)
      .def_readonly("clock", &CompositeScenario::clock);

  m.def("validate_density", &validate_density, py::arg("matrix"),
        py::arg("tol") = kDefaultValidationTol);
  m.def("linear_entropy",
        py::overload_cast<const DensityMatrix&>(&linear_entropy),
        py::arg("rho"));
  m.def("distribution_linear_entropy",
        py::overload_cast<const EnergyDistribution&>(&linear_entropy),
        py::arg("dist"));
  m.def("pure_density", &pure_density, py::arg("psi"));
  m.def("mix_states", &mix_states, py::arg("states"), py::arg("weights"),
        py::arg("weight_tol") = kDefaultValidationTol);
  m.def("partial_trace_over_clock", &partial_trace_over_clock,
        py::arg("rho_u"), py::arg("sys_dim"), py::arg("clock_dim"));

  m.def("group_levels", &group_levels, py::arg("spec"));
  m.def("projector", &projector, py::arg("groups"), py::arg("energy"));
  m.def("energy_distribution", &energy_distribution, py::arg("sigma"),
        py::arg("spec"));
  m.def("dephase", &dephase, py::arg("sigma"), py::arg("spec"));
  m.def("collapsed_state", &collapsed_state, py::arg("sigma"), py::arg("spec"),
        py::arg("energy"));
  m.def("measurement_entropy_decomposition", &measurement_entropy_decomposition,
        py::arg("sigma"), py::arg("spec"));
  m.def("energy_dispersion", &energy_dispersion, py::arg("sigma"),
        py::arg("spec"));
  m.def("quantum_dispersion", &quantum_dispersion, py::arg("sigma"),
        py::arg("spec"));
  m.def("jacobi_diagonalize", &jacobi_diagonalize, py::arg("h"),
        py::arg("off_tol_rel") = 1e-12, py::arg("max_sweeps") = 50);

  m.def("sinc", &sinc, py::arg("x"));
  m.def("dimensionless_phase", &dimensionless_phase, py::arg("spec"),
        py::arg("window"));
  m.def("evolve", &evolve, py::arg("sigma0"), py::arg("spec"), py::arg("t"));
  m.def("time_average", &time_average, py::arg("sigma0"), py::arg("spec"),
        py::arg("window"));
  m.def("von_neumann_rhs", &von_neumann_rhs, py::arg("sigma"), py::arg("spec"));
  m.def("von_neumann_residual", &von_neumann_residual, py::arg("sigma0"),
        py::arg("spec"), py::arg("t"), py::arg("dt"));

  m.def("delta_s", &delta_s, py::arg("sigma0"), py::arg("spec"),
        py::arg("window"));
  m.def("delta_s_max", &delta_s_max, py::arg("sigma0"), py::arg("spec"));
  m.def("short_time_delta_s", &short_time_delta_s, py::arg("sigma0"),
        py::arg("spec"), py::arg("window"));
  m.def("witness", &witness, py::arg("delta_s_value"),
        py::arg("witness_tol") = kDefaultWitnessTol);
  m.def("white_noise_state", &white_noise_state, py::arg("psi"),
        py::arg("alpha"));
  m.def("white_noise_predictions", &white_noise_predictions, py::arg("psi"),
        py::arg("alpha"), py::arg("spec"));
  m.def("indicator_report", &indicator_report, py::arg("sigma0"),
        py::arg("spec"), py::arg("window"),
        py::arg("witness_tol") = kDefaultWitnessTol);

  m.def("build_history_vector", &build_history_vector, py::arg("phi0"),
        py::arg("spec"), py::arg("clock"));
  m.def("build_universe_density", &build_universe_density, py::arg("scenario"),
        py::arg("max_dim") = kMaxCompositeDim);
  m.def("relative_state_at_tick", &relative_state_at_tick, py::arg("rho_u"),
        py::arg("k"), py::arg("d"), py::arg("n_ticks"));
  m.def("discrete_reduced_state", &discrete_reduced_state, py::arg("rho_u"),
        py::arg("d"), py::arg("n_ticks"));
  m.def("discrete_delta_s", &discrete_delta_s, py::arg("rho_u"), py::arg("d"),
        py::arg("n_ticks"));

  m.attr("DEFAULT_VALIDATION_TOL") = kDefaultValidationTol;
  m.attr("DEFAULT_GROUP_TOL") = kDefaultGroupTol;
  m.attr("DEFAULT_WITNESS_TOL") = kDefaultWitnessTol;
  m.attr("MAX_COMPOSITE_DIM") = kMaxCompositeDim;
}
