#include "dirq/estimation.hpp"

#include <cmath>
#include <stdexcept>

#include "dirq/rng.hpp"
#include "dirq/transpose.hpp"

namespace dirq {

namespace {

void require_valid(const ProjectiveMeasurement& m, const char* what) {
  const auto v = validate(m);
  if (!v.pass) {
    throw std::invalid_argument(
        std::string(what) + ": measurement failed validation (orthonormality " +
        std::to_string(v.orthonormality_residual) + ", completeness " +
        std::to_string(v.completeness_residual) + ")");
  }
}

std::array<double, 4> raw_probabilities(const std::array<TwoQubitState, 4>& basis,
                                        const TwoQubitState& psi) {
  std::array<double, 4> p{};
  for (int j = 0; j < 4; ++j) p[j] = std::max(0.0, std::norm(inner(basis[j], psi)));
  return p;
}

struct OutcomeMoments {
  double mass = 0.0;              // E_prior[ p_j(n) ]
  std::array<double, 3> mean{};   // E_prior[ n p_j(n) ]
};

// Exact prior moments of one outcome. For the uniform prior the projector's
// Pauli coefficients give E[p] = (s +- tr R / 3)/4 and
// E[n p] = (alpha +- beta)/12, with the sign set by the pairing.
OutcomeMoments outcome_moments(const TwoQubitState& b, const Scenario& s) {
  OutcomeMoments om;
  if (s.prior.is_uniform()) {
    const PauliDecomposition d = pauli_decompose(pure_density(b));
    const double sign = s.pairing == Pairing::parallel ? 1.0 : -1.0;
    const double tr_r =
        d.correlation[0][0] + d.correlation[1][1] + d.correlation[2][2];
    om.mass = (d.scalar + sign * tr_r / 3.0) / 4.0;
    for (int k = 0; k < 3; ++k) om.mean[k] = (d.alpha[k] + sign * d.beta[k]) / 12.0;
  } else {
    for (const auto& atom : s.prior.atoms()) {
      const TwoQubitState psi = source_state(atom.direction, s.pairing);
      const double p = std::max(0.0, std::norm(inner(b, psi)));
      om.mass += atom.weight * p;
      om.mean[0] += atom.weight * p * atom.direction.x;
      om.mean[1] += atom.weight * p * atom.direction.y;
      om.mean[2] += atom.weight * p * atom.direction.z;
    }
  }
  return om;
}

}  // namespace

Prior Prior::uniform_sphere() { return Prior{}; }

Prior Prior::tetrahedron_uniform() {
  std::vector<PriorAtom> atoms;
  for (const auto& v : tetrahedron().vertices) atoms.push_back({v, 0.25});
  return discrete(std::move(atoms));
}

Prior Prior::discrete(std::vector<PriorAtom> atoms) {
  if (atoms.empty()) throw std::invalid_argument("Prior::discrete: empty atom list");
  double total = 0.0;
  for (const auto& a : atoms) {
    require_unit(a.direction, "Prior::discrete");
    if (a.weight < 0.0) throw std::invalid_argument("Prior::discrete: negative weight");
    total += a.weight;
  }
  if (std::abs(total - 1.0) > 1e-10) {
    throw std::invalid_argument("Prior::discrete: weights sum to " +
                                std::to_string(total) + ", expected 1");
  }
  Prior p;
  p.uniform_ = false;
  p.atoms_ = std::move(atoms);
  return p;
}

TwoQubitState source_state(const Direction& n, Pairing pairing) {
  require_unit(n, "source_state");
  const Spinor first = bloch_to_spinor(n);
  const Spinor second =
      pairing == Pairing::parallel ? first : bloch_to_spinor(-n);
  return tensor(first, second);
}

std::array<double, 4> outcome_probabilities(const ProjectiveMeasurement& m,
                                            const TwoQubitState& psi) {
  require_valid(m, "outcome_probabilities");
  require_normalized(psi, "outcome_probabilities");
  return raw_probabilities(m.basis, psi);
}

double score(const Direction& n, const Direction& g) {
  require_unit(n, "score");
  require_unit(g, "score");
  return (1.0 + dot(n, g)) / 2.0;
}

FidelityReport fidelity_exact(const ProjectiveMeasurement& m, const Scenario& s) {
  require_valid(m, "fidelity_exact");
  double f = 0.0;
  for (int j = 0; j < 4; ++j) {
    const OutcomeMoments om = outcome_moments(m.basis[j], s);
    const auto& g = m.guesses[j];
    f += (om.mass + om.mean[0] * g.x + om.mean[1] * g.y + om.mean[2] * g.z) / 2.0;
  }
  return {f, FidelityMethod::exact, 0, 0.0};
}

FidelityReport fidelity_monte_carlo(const ProjectiveMeasurement& m, const Scenario& s,
                                    long long trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("fidelity_monte_carlo: trials must be >= 1");
  require_valid(m, "fidelity_monte_carlo");

  std::vector<double> weights;
  if (!s.prior.is_uniform()) {
    for (const auto& a : s.prior.atoms()) weights.push_back(a.weight);
  }

  double mean = 0.0;
  double m2 = 0.0;
  for (long long t = 0; t < trials; ++t) {
    TrialRng rng(seed, static_cast<std::uint64_t>(t));
    const Direction n = s.prior.is_uniform()
                            ? rng.direction()
                            : s.prior.atoms()[static_cast<std::size_t>(
                                  rng.sample(weights))].direction;
    const auto p = raw_probabilities(m.basis, source_state(n, s.pairing));
    const int j = rng.sample(p);
    const double sc = score(n, m.guesses[static_cast<std::size_t>(j)]);

    const double delta = sc - mean;
    mean += delta / static_cast<double>(t + 1);
    m2 += delta * (sc - mean);
  }

  const double std_error =
      trials > 1 ? std::sqrt(m2 / static_cast<double>(trials - 1) /
                             static_cast<double>(trials))
                 : 0.0;
  return {mean, FidelityMethod::monte_carlo, trials, std_error};
}

GuessOptimization optimal_guesses(const std::array<TwoQubitState, 4>& basis,
                                  const Scenario& s) {
  GuessOptimization out;
  for (int j = 0; j < 4; ++j) {
    const OutcomeMoments om = outcome_moments(basis[static_cast<std::size_t>(j)], s);
    const double len = std::sqrt(om.mean[0] * om.mean[0] + om.mean[1] * om.mean[1] +
                                 om.mean[2] * om.mean[2]);
    Direction g{0.0, 0.0, 1.0};
    if (len < 1e-12) {
      out.degenerate[static_cast<std::size_t>(j)] = true;
    } else {
      g = {om.mean[0] / len, om.mean[1] / len, om.mean[2] / len};
    }
    out.guesses[static_cast<std::size_t>(j)] = g;
    out.fidelity +=
        (om.mass + om.mean[0] * g.x + om.mean[1] * g.y + om.mean[2] * g.z) / 2.0;
  }
  return out;
}

}  // namespace dirq
