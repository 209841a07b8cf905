#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dirq/hilbert.hpp"

namespace dirq {

/// The anti-unitary reference map |n> -> |-n>: conjugate the amplitudes,
/// then apply ((0, -1), (1, 0)). Additive but conjugates scalars, so no
/// unitary can implement it.
[[nodiscard]] Spinor antiunitary_flip(const Spinor& s);

struct FlipTrialRecord {
  Direction true_direction;
  Direction axis;
  int outcome = +1;  // +1: spin found along +axis, -1: along -axis
  Spinor prepared;
  double fidelity = 0.0;  // |<-n|prepared>|^2
};

/// One measure-and-prepare round: project the spin along the axis (drawn
/// fresh from the trial stream when absent), then prepare the state opposite
/// to the observed outcome.
[[nodiscard]] FlipTrialRecord uqsf_trial(const Direction& n,
                                         const std::optional<Direction>& axis,
                                         std::uint64_t seed);

struct MonteCarloMean {
  double mean = 0.0;
  double std_error = 0.0;
  long long trials = 0;
};

/// Average flip fidelity over uniformly random inputs; the measurement axis
/// is redrawn per trial unless fixed_axis is given (the average is 2/3 either
/// way, which is the universality of the machine).
[[nodiscard]] MonteCarloMean uqsf_average_fidelity(
    long long trials, std::uint64_t seed,
    const std::optional<Direction>& fixed_axis = std::nullopt);

struct MulticopyTrial {
  FlipTrialRecord base;
  std::vector<Spinor> copies;      // all identical: the outcome is classical
  double average_fidelity = 0.0;   // across copies, equals base.fidelity
};

/// One measurement, arbitrarily many flipped copies prepared from its
/// classical outcome.
[[nodiscard]] MulticopyTrial uqsf_multicopy(const Direction& n, int copies,
                                            std::uint64_t seed);

struct MulticopySummary {
  std::vector<double> per_copy_mean;
  std::vector<double> per_copy_std_error;
  long long trials = 0;
};

/// Per-copy average fidelity over many multicopy rounds with uniform inputs;
/// the measurement axis is per-trial random unless fixed.
[[nodiscard]] MulticopySummary uqsf_multicopy_summary(
    int copies, long long trials, std::uint64_t seed,
    const std::optional<Direction>& fixed_axis = std::nullopt);

/// Closed form of the measure-and-prepare channel averaged over axes: the
/// Bloch vector contracts to -1/3 of the input's. Input must be a valid
/// one-qubit state.
[[nodiscard]] Mat2 uqsf_channel(const Mat2& rho);

/// Exact average fidelity int dn |<-n|U|n>|^2 of a unitary as a flipper,
/// evaluated through sphere moments: 1/2 - tr(R_U)/6 with R_U the rotation
/// carried by U.
[[nodiscard]] double unitary_flip_fidelity(const Mat2& u);

/// One-qubit unitary from 4 real parameters via exp(iH).
[[nodiscard]] Mat2 unitary2_from_parameters(const std::array<double, 4>& h);

/// cos(angle/2) I - i sin(angle/2) axis.sigma.
[[nodiscard]] Mat2 axis_angle_unitary(const Direction& axis, double angle);

struct UnitaryFlipOptimum {
  double fidelity = 0.0;
  Mat2 unitary;
  int starts = 0;
};

/// Maximizes unitary_flip_fidelity over 2x2 unitaries by multi-start
/// Nelder-Mead on the 4 exp(iH) parameters. The maximum is 2/3, reached by
/// any pi rotation.
[[nodiscard]] UnitaryFlipOptimum best_unitary_flip_fidelity(int starts,
                                                            std::uint64_t seed);

/// Brute-force maximum of unitary_flip_fidelity over an axis-angle grid with
/// the given step (degrees); the cross-check for the optimizer above.
[[nodiscard]] double unitary_flip_grid_maximum(double step_degrees);

}  // namespace dirq
