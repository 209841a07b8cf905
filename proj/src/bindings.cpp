#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "dirq/estimation.hpp"
#include "dirq/flip.hpp"
#include "dirq/io.hpp"
#include "dirq/measurement.hpp"
#include "dirq/optimizer.hpp"
#include "dirq/statespace.hpp"
#include "dirq/transpose.hpp"
#include "dirq/verify.hpp"

namespace py = pybind11;
using namespace dirq;

namespace {

template <int N>
std::vector<std::vector<cplx>> matrix_to_list(const Matrix<N>& m) {
  std::vector<std::vector<cplx>> out(N, std::vector<cplx>(N));
  for (int r = 0; r < N; ++r)
    for (int c = 0; c < N; ++c) out[r][c] = m(r, c);
  return out;
}

template <int N>
Matrix<N> matrix_from_list(const std::vector<std::vector<cplx>>& rows) {
  if (rows.size() != N) throw std::invalid_argument("expected a square matrix");
  Matrix<N> m;
  for (int r = 0; r < N; ++r) {
    if (rows[r].size() != N) throw std::invalid_argument("expected a square matrix");
    for (int c = 0; c < N; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

template <int N>
void bind_matrix(py::module_& m, const char* name) {
  py::class_<Matrix<N>>(m, name)
      .def(py::init(&matrix_from_list<N>))
      .def_static("identity", &Matrix<N>::identity)
      .def("to_list", &matrix_to_list<N>)
      .def("trace", [](const Matrix<N>& a) { return a.trace(); })
      .def("__getitem__",
           [](const Matrix<N>& a, std::pair<int, int> rc) {
             if (rc.first < 0 || rc.first >= N || rc.second < 0 || rc.second >= N)
               throw py::index_error();
             return a(rc.first, rc.second);
           })
      .def("__repr__", [name](const Matrix<N>& a) {
        std::ostringstream os;
        os << name << "(trace=" << a.trace().real() << ")";
        return os.str();
      });
}

}  // namespace

PYBIND11_MODULE(_dirq, m) {
  m.doc() = "direction estimation with spin pairs: exact fidelities, measurement "
            "optimization, the universal spin-flip machine, and partial-transpose "
            "diagnostics";
  m.attr("__version__") = kVersion;

  py::class_<Direction>(m, "Direction")
      .def(py::init<double, double, double>(), py::arg("x"), py::arg("y"), py::arg("z"))
      .def_readwrite("x", &Direction::x)
      .def_readwrite("y", &Direction::y)
      .def_readwrite("z", &Direction::z)
      .def("__neg__", [](const Direction& d) { return -d; })
      .def("__repr__", [](const Direction& d) {
        std::ostringstream os;
        os << "Direction(" << d.x << ", " << d.y << ", " << d.z << ")";
        return os.str();
      });
  m.def("dot", &dot);

  py::class_<Spinor>(m, "Spinor")
      .def(py::init<cplx, cplx>(), py::arg("a0"), py::arg("a1"))
      .def_readwrite("a0", &Spinor::a0)
      .def_readwrite("a1", &Spinor::a1)
      .def("__repr__", [](const Spinor& s) {
        std::ostringstream os;
        os << "Spinor(" << s.a0 << ", " << s.a1 << ")";
        return os.str();
      });

  py::class_<TwoQubitState>(m, "TwoQubitState")
      .def(py::init([](const std::array<cplx, 4>& amps) {
             return TwoQubitState{amps};
           }),
           py::arg("amplitudes"))
      .def_property_readonly("amplitudes",
                             [](const TwoQubitState& s) { return s.c; });

  bind_matrix<2>(m, "Matrix2");
  bind_matrix<4>(m, "Matrix4");

  m.def("bloch_to_spinor", &bloch_to_spinor, py::arg("n"), py::arg("phase") = 0.0);
  m.def("spinor_to_bloch", &spinor_to_bloch);
  m.def("tensor", &tensor);
  m.def("singlet", &singlet);
  m.def("schmidt_values", &schmidt_values);
  m.def("pure_density", py::overload_cast<const Spinor&>(&pure_density));
  m.def("pure_density2",
        py::overload_cast<const TwoQubitState&>(&pure_density));
  m.def("hermitian_eigenvalues", [](const Mat4& a) {
    return hermitian_eigen(a).eigenvalues;
  });

  // measurement construction -------------------------------------------------
  py::class_<Tetrahedron>(m, "Tetrahedron")
      .def_readonly("vertices", &Tetrahedron::vertices);
  m.def("tetrahedron", &tetrahedron);

  py::class_<ProjectiveMeasurement>(m, "ProjectiveMeasurement")
      .def(py::init([](const std::array<TwoQubitState, 4>& basis,
                       const std::array<Direction, 4>& guesses, const std::string& label) {
             return ProjectiveMeasurement{basis, guesses, label};
           }),
           py::arg("basis"), py::arg("guesses"), py::arg("label") = "")
      .def_readwrite("basis", &ProjectiveMeasurement::basis)
      .def_readwrite("guesses", &ProjectiveMeasurement::guesses)
      .def_readwrite("label", &ProjectiveMeasurement::label)
      .def("to_json", [](const ProjectiveMeasurement& pm) {
        return measurement_to_json(pm).dump(2);
      })
      .def_static("from_json", [](const std::string& text) {
        return measurement_from_json(nlohmann::json::parse(text));
      });

  py::class_<MeasurementValidation>(m, "MeasurementValidation")
      .def_readonly("orthonormality_residual",
                    &MeasurementValidation::orthonormality_residual)
      .def_readonly("completeness_residual",
                    &MeasurementValidation::completeness_residual)
      .def_readonly("pass_", &MeasurementValidation::pass);

  m.def("fix_phases_parallel", &fix_phases_parallel);
  m.def("fix_phases_antiparallel", &fix_phases_antiparallel);
  m.def("build_parallel_optimal", &build_parallel_optimal);
  m.def("default_antiparallel_alpha", &default_antiparallel_alpha);
  m.def("default_antiparallel_beta", &default_antiparallel_beta);
  m.def("build_antiparallel", &build_antiparallel,
        py::arg("alpha") = default_antiparallel_alpha(),
        py::arg("beta") = default_antiparallel_beta());
  m.def("validate", &validate);
  m.def("rederive_antiparallel_coefficients", &rederive_antiparallel_coefficients);

  // estimation ----------------------------------------------------------------
  py::enum_<Pairing>(m, "Pairing")
      .value("parallel", Pairing::parallel)
      .value("antiparallel", Pairing::antiparallel);

  py::class_<PriorAtom>(m, "PriorAtom")
      .def(py::init<Direction, double>(), py::arg("direction"), py::arg("weight"))
      .def_readwrite("direction", &PriorAtom::direction)
      .def_readwrite("weight", &PriorAtom::weight);

  py::class_<Prior>(m, "Prior")
      .def_static("uniform_sphere", &Prior::uniform_sphere)
      .def_static("tetrahedron_uniform", &Prior::tetrahedron_uniform)
      .def_static("discrete", &Prior::discrete)
      .def_property_readonly("is_uniform", &Prior::is_uniform);

  py::class_<Scenario>(m, "Scenario")
      .def(py::init([](Pairing p, const Prior& prior) {
             return Scenario{p, prior};
           }),
           py::arg("pairing"), py::arg("prior"))
      .def_readwrite("pairing", &Scenario::pairing)
      .def_readwrite("prior", &Scenario::prior);

  py::enum_<FidelityMethod>(m, "FidelityMethod")
      .value("exact", FidelityMethod::exact)
      .value("monte_carlo", FidelityMethod::monte_carlo);

  py::class_<FidelityReport>(m, "FidelityReport")
      .def_readonly("value", &FidelityReport::value)
      .def_readonly("method", &FidelityReport::method)
      .def_readonly("trials", &FidelityReport::trials)
      .def_readonly("std_error", &FidelityReport::std_error)
      .def("__repr__", [](const FidelityReport& r) {
        std::ostringstream os;
        os << "FidelityReport(value=" << r.value << ")";
        return os.str();
      });

  m.def("source_state", &source_state);
  m.def("outcome_probabilities", &outcome_probabilities);
  m.def("score", &score);
  m.def("fidelity_exact", &fidelity_exact);
  m.def("fidelity_monte_carlo", &fidelity_monte_carlo, py::arg("measurement"),
        py::arg("scenario"), py::arg("trials"), py::arg("seed"));

  py::class_<GuessOptimization>(m, "GuessOptimization")
      .def_readonly("guesses", &GuessOptimization::guesses)
      .def_readonly("degenerate", &GuessOptimization::degenerate)
      .def_readonly("fidelity", &GuessOptimization::fidelity);
  m.def("optimal_guesses", &optimal_guesses);

  // optimizer -------------------------------------------------------------------
  py::class_<OptimizationResult>(m, "OptimizationResult")
      .def_readonly("best_fidelity", &OptimizationResult::best_fidelity)
      .def_readonly("best_measurement", &OptimizationResult::best_measurement)
      .def_readonly("starts", &OptimizationResult::starts)
      .def_readonly("evaluations", &OptimizationResult::evaluations)
      .def_readonly("converged", &OptimizationResult::converged);

  m.def("optimize",
        [](const Scenario& s, int starts, std::uint64_t seed) {
          return optimize(s, starts, seed);
        },
        py::arg("scenario"), py::arg("starts") = 20, py::arg("seed") = 1,
        py::call_guard<py::gil_scoped_release>());
  m.def("optimize_product",
        [](const Scenario& s, int starts, std::uint64_t seed) {
          return optimize_product(s, starts, seed);
        },
        py::arg("scenario"), py::arg("starts") = 20, py::arg("seed") = 1,
        py::call_guard<py::gil_scoped_release>());
  m.def("flip_second_guess_rule", &flip_second_guess_rule);

  // spin flip -------------------------------------------------------------------
  py::class_<FlipTrialRecord>(m, "FlipTrialRecord")
      .def_readonly("true_direction", &FlipTrialRecord::true_direction)
      .def_readonly("axis", &FlipTrialRecord::axis)
      .def_readonly("outcome", &FlipTrialRecord::outcome)
      .def_readonly("prepared", &FlipTrialRecord::prepared)
      .def_readonly("fidelity", &FlipTrialRecord::fidelity);

  py::class_<MonteCarloMean>(m, "MonteCarloMean")
      .def_readonly("mean", &MonteCarloMean::mean)
      .def_readonly("std_error", &MonteCarloMean::std_error)
      .def_readonly("trials", &MonteCarloMean::trials);

  py::class_<MulticopyTrial>(m, "MulticopyTrial")
      .def_readonly("base", &MulticopyTrial::base)
      .def_readonly("copies", &MulticopyTrial::copies)
      .def_readonly("average_fidelity", &MulticopyTrial::average_fidelity);

  py::class_<MulticopySummary>(m, "MulticopySummary")
      .def_readonly("per_copy_mean", &MulticopySummary::per_copy_mean)
      .def_readonly("per_copy_std_error", &MulticopySummary::per_copy_std_error)
      .def_readonly("trials", &MulticopySummary::trials);

  py::class_<UnitaryFlipOptimum>(m, "UnitaryFlipOptimum")
      .def_readonly("fidelity", &UnitaryFlipOptimum::fidelity)
      .def_readonly("unitary", &UnitaryFlipOptimum::unitary)
      .def_readonly("starts", &UnitaryFlipOptimum::starts);

  m.def("antiunitary_flip", &antiunitary_flip);
  m.def("uqsf_trial", &uqsf_trial, py::arg("n"), py::arg("axis") = std::nullopt,
        py::arg("seed") = 1);
  m.def("uqsf_average_fidelity", &uqsf_average_fidelity, py::arg("trials"),
        py::arg("seed"), py::arg("fixed_axis") = std::nullopt,
        py::call_guard<py::gil_scoped_release>());
  m.def("uqsf_multicopy", &uqsf_multicopy, py::arg("n"), py::arg("copies"),
        py::arg("seed"));
  m.def("uqsf_multicopy_summary", &uqsf_multicopy_summary, py::arg("copies"),
        py::arg("trials"), py::arg("seed"), py::arg("fixed_axis") = std::nullopt,
        py::call_guard<py::gil_scoped_release>());
  m.def("uqsf_channel", &uqsf_channel);
  m.def("unitary_flip_fidelity", &unitary_flip_fidelity);
  m.def("unitary2_from_parameters", &unitary2_from_parameters);
  m.def("axis_angle_unitary", &axis_angle_unitary);
  m.def("best_unitary_flip_fidelity", &best_unitary_flip_fidelity, py::arg("starts"),
        py::arg("seed"), py::call_guard<py::gil_scoped_release>());
  m.def("unitary_flip_grid_maximum", &unitary_flip_grid_maximum,
        py::arg("step_degrees"), py::call_guard<py::gil_scoped_release>());

  // partial transpose -------------------------------------------------------------
  py::class_<PauliDecomposition>(m, "PauliDecomposition")
      .def_readonly("scalar", &PauliDecomposition::scalar)
      .def_readonly("alpha", &PauliDecomposition::alpha)
      .def_readonly("beta", &PauliDecomposition::beta)
      .def_readonly("correlation", &PauliDecomposition::correlation);

  py::class_<ReflectionCheck>(m, "ReflectionCheck")
      .def_readonly("residual", &ReflectionCheck::residual)
      .def_readonly("matched_component", &ReflectionCheck::matched_component);

  py::class_<MirrorFlipResult>(m, "MirrorFlipResult")
      .def_readonly("is_state", &MirrorFlipResult::is_state)
      .def_readonly("state", &MirrorFlipResult::state)
      .def_readonly("min_eigenvalue", &MirrorFlipResult::min_eigenvalue)
      .def_readonly("output", &MirrorFlipResult::output);

  py::class_<ProductEquivalenceReport>(m, "ProductEquivalenceReport")
      .def_readonly("fidelity_parallel", &ProductEquivalenceReport::fidelity_parallel)
      .def_readonly("fidelity_antiparallel_flipped",
                    &ProductEquivalenceReport::fidelity_antiparallel_flipped);

  m.def("pauli_decompose", &pauli_decompose);
  m.def("pauli_reconstruct", &pauli_reconstruct);
  m.def("passive_flip", &passive_flip);
  m.def("partial_transpose", &partial_transpose, py::arg("matrix"),
        py::arg("subsystem") = 2);
  m.def("negativity", &negativity);
  m.def("reflection_identity_check", &reflection_identity_check);
  m.def("mirror_plus_rotation_flip", &mirror_plus_rotation_flip);
  m.def("passive_flip_equivalence_product", &passive_flip_equivalence_product);

  // state-space structure ----------------------------------------------------------
  py::class_<GramReport>(m, "GramReport")
      .def_readonly("samples", &GramReport::samples)
      .def_readonly("singular_values", &GramReport::singular_values)
      .def_readonly("rank", &GramReport::rank)
      .def_readonly("threshold", &GramReport::threshold);

  m.def("span_rank", &span_rank, py::arg("pairing"), py::arg("sample_count"),
        py::arg("seed"));
  m.def("symmetric_subspace_residual", &symmetric_subspace_residual);

  // verification --------------------------------------------------------------------
  py::class_<ClaimResult>(m, "ClaimResult")
      .def_readonly("id", &ClaimResult::id)
      .def_readonly("expected", &ClaimResult::expected)
      .def_readonly("computed", &ClaimResult::computed)
      .def_readonly("tolerance", &ClaimResult::tolerance)
      .def_readonly("comparison", &ClaimResult::comparison)
      .def_readonly("pass_", &ClaimResult::pass);

  py::class_<VerifyReport>(m, "VerifyReport")
      .def_readonly("claims", &VerifyReport::claims)
      .def_readonly("overall_pass", &VerifyReport::overall_pass)
      .def_readonly("seed", &VerifyReport::seed)
      .def_readonly("trials", &VerifyReport::trials)
      .def_readonly("version", &VerifyReport::version);

  m.def("run_verification", &run_verification, py::arg("seed"), py::arg("mc_trials"),
        py::arg("corrupt_claim") = std::string(),
        py::call_guard<py::gil_scoped_release>());
}
