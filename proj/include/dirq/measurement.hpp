#pragma once

#include <array>
#include <stdexcept>
#include <string>

#include "dirq/hilbert.hpp"

namespace dirq {

/// Four directions with pairwise dot products -1/3 summing to zero.
struct Tetrahedron {
  std::array<Direction, 4> vertices;
};

/// A 4-outcome projective measurement on two qubits: an orthonormal basis
/// together with the direction guessed on each outcome.
struct ProjectiveMeasurement {
  std::array<TwoQubitState, 4> basis;
  std::array<Direction, 4> guesses;
  std::string label;
};

struct MeasurementValidation {
  double orthonormality_residual = 0.0;  // max |<b_j|b_k> - delta_jk|
  double completeness_residual = 0.0;    // max entry of |sum_j P_j - I|
  bool pass = false;                     // both residuals < 1e-8
};

/// Raised when a basis construction fails its orthonormality check; the
/// message carries the offending Gram matrix.
struct MeasurementConstructionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The canonical vertex set: (0,0,1), (sqrt(8)/3, 0, -1/3),
/// (-sqrt(2)/3, +-sqrt(2/3), -1/3).
[[nodiscard]] Tetrahedron tetrahedron();

/// Per-vertex spinor phases chi_j (chi_1 = 0 gauge) making every pairwise
/// overlap <n_j,n_j|n_k,n_k> of the parallel pair states equal to -1/3, real.
/// Found by a 64^3 grid scan over (chi_2, chi_3, chi_4) followed by
/// coordinate descent; the final sum-of-squares residual must be < 1e-10.
[[nodiscard]] std::array<double, 4> fix_phases_parallel();

/// Phases making every pairwise overlap <n_j,-n_j|n_k,-n_k> of the
/// anti-parallel pair states equal to +1/3, real. The phase multiplies the
/// first factor of the pair. Same search scheme as fix_phases_parallel.
[[nodiscard]] std::array<double, 4> fix_phases_antiparallel();

/// The phase-fixed pair states themselves (|n_j, n_j> resp. |n_j, -n_j>).
[[nodiscard]] std::array<TwoQubitState, 4> parallel_pair_states();
[[nodiscard]] std::array<TwoQubitState, 4> antiparallel_pair_states();

/// Optimal measurement for parallel pairs: basis vectors
/// sqrt(3)/2 |n_j, n_j> + 1/2 |singlet>, guesses at the tetrahedron vertices.
[[nodiscard]] ProjectiveMeasurement build_parallel_optimal();

/// Normalization constants of the anti-parallel construction,
/// 13/(6 sqrt 6 - 2 sqrt 2) and (5 - 2 sqrt 3)/(6 sqrt 6 - 2 sqrt 2).
[[nodiscard]] double default_antiparallel_alpha();
[[nodiscard]] double default_antiparallel_beta();

/// Measurement for anti-parallel pairs: basis vectors
/// alpha |n_j,-n_j> - beta sum_{k != j} |n_k,-n_k> over the phase-fixed pair
/// states. Throws MeasurementConstructionError (reporting the Gram matrix)
/// when the chosen coefficients do not yield an orthonormal basis.
[[nodiscard]] ProjectiveMeasurement build_antiparallel(
    double alpha = default_antiparallel_alpha(),
    double beta = default_antiparallel_beta());

/// Report-only check of the ProjectiveMeasurement invariants.
[[nodiscard]] MeasurementValidation validate(const ProjectiveMeasurement& m);

/// Recovers (alpha, beta) from the measured Gram matrix of the phase-fixed
/// anti-parallel pair states by solving the orthonormality system; matches
/// the closed forms above to 1e-10 when the phase fixing is correct.
[[nodiscard]] std::array<double, 2> rederive_antiparallel_coefficients();

}  // namespace dirq
