#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "dirq/estimation.hpp"
#include "dirq/hilbert.hpp"
#include "dirq/measurement.hpp"
#include "dirq/nelder_mead.hpp"

namespace dirq {

/// 4x4 unitary from 16 real parameters: the flat array fills a Hermitian
/// generator H (diagonal from the diagonal slots, H_pq = h[4p+q] + i h[4q+p]
/// for p < q) and the unitary is exp(iH). Columns are orthonormal for any
/// parameter values.
[[nodiscard]] Mat4 unitary_from_parameters(const std::array<double, 16>& h);

/// The measurement basis carried by a unitary: its columns.
[[nodiscard]] std::array<TwoQubitState, 4> basis_from_unitary(const Mat4& u);

/// Product basis u_a (x) w_b from the columns of two local unitaries,
/// ordered (0,0), (0,1), (1,0), (1,1).
[[nodiscard]] std::array<TwoQubitState, 4> product_basis(const Mat2& first,
                                                         const Mat2& second);

struct OptimizationResult {
  double best_fidelity = 0.0;
  ProjectiveMeasurement best_measurement;
  int starts = 0;
  std::vector<int> evaluations;  // per start
  std::vector<bool> converged;   // per start
};

/// Maximizes the exact fidelity over all 4-outcome projective measurements:
/// multi-start Nelder-Mead on the 16 exp(iH) parameters, with the guesses
/// set by optimal_guesses at every evaluation. Start s draws its initial
/// parameters uniformly from [-1, 1] on the stream (seed, s); ties across
/// starts go to the lowest start index.
[[nodiscard]] OptimizationResult optimize(const Scenario& s, int starts,
                                          std::uint64_t seed,
                                          const NelderMeadOptions& options = {});

/// Same search constrained to product-form measurements: 4 + 4 parameters
/// for one exp(iH) per qubit.
[[nodiscard]] OptimizationResult optimize_product(
    const Scenario& s, int starts, std::uint64_t seed,
    const NelderMeadOptions& options = {});

/// Same basis, all guesses negated: the passive strategy that makes a single
/// flipped spin exactly as informative as the original.
[[nodiscard]] ProjectiveMeasurement flip_second_guess_rule(
    const ProjectiveMeasurement& m);

}  // namespace dirq
