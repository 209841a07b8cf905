#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "dirq/hilbert.hpp"
#include "dirq/measurement.hpp"

namespace dirq {

enum class Pairing { parallel, antiparallel };

struct PriorAtom {
  Direction direction;
  double weight = 0.0;
};

/// Source distribution of the encoded direction: either area-uniform on the
/// sphere or a discrete set of weighted directions (weights summing to 1).
class Prior {
 public:
  static Prior uniform_sphere();
  static Prior tetrahedron_uniform();
  static Prior discrete(std::vector<PriorAtom> atoms);

  [[nodiscard]] bool is_uniform() const { return uniform_; }
  [[nodiscard]] const std::vector<PriorAtom>& atoms() const { return atoms_; }

 private:
  Prior() = default;
  bool uniform_ = true;
  std::vector<PriorAtom> atoms_;
};

struct Scenario {
  Pairing pairing = Pairing::parallel;
  Prior prior = Prior::uniform_sphere();
};

enum class FidelityMethod { exact, monte_carlo };

struct FidelityReport {
  double value = 0.0;
  FidelityMethod method = FidelityMethod::exact;
  long long trials = 0;    // monte-carlo only
  double std_error = 0.0;  // monte-carlo only
};

/// |n, n> or |n, -n> with zero spinor phases.
[[nodiscard]] TwoQubitState source_state(const Direction& n, Pairing pairing);

/// Outcome distribution p_j = |<b_j|psi>|^2 of a validated measurement.
[[nodiscard]] std::array<double, 4> outcome_probabilities(
    const ProjectiveMeasurement& m, const TwoQubitState& psi);

/// The per-trial score (1 + n . g)/2 between true and guessed directions.
[[nodiscard]] double score(const Direction& n, const Direction& g);

/// Prior-averaged expected score of a measurement, evaluated without
/// sampling error. The uniform-sphere average uses the moment identities
/// int n_i = 0, int n_i n_j = delta_ij / 3, int n_i n_j n_k = 0 (the
/// integrand is cubic in n); discrete priors are finite sums.
[[nodiscard]] FidelityReport fidelity_exact(const ProjectiveMeasurement& m,
                                            const Scenario& s);

/// Stochastic estimate of the same average. Trial t draws from the stream
/// (seed, t), so the result depends only on (seed, trials) and not on any
/// execution order.
[[nodiscard]] FidelityReport fidelity_monte_carlo(const ProjectiveMeasurement& m,
                                                  const Scenario& s, long long trials,
                                                  std::uint64_t seed);

struct GuessOptimization {
  std::array<Direction, 4> guesses;
  /// Set when an outcome carries no directional information (|v_j| < 1e-12);
  /// the guess then defaults to (0, 0, 1).
  std::array<bool, 4> degenerate{};
  double fidelity = 0.0;
};

/// Closed-form inner maximization of the fidelity over the guesses for a
/// fixed orthonormal basis: guess j points along
/// v_j = E_prior[ n p_j(n) ], and the returned fidelity matches
/// fidelity_exact on the updated measurement.
[[nodiscard]] GuessOptimization optimal_guesses(
    const std::array<TwoQubitState, 4>& basis, const Scenario& s);

}  // namespace dirq
