#include "dirq/flip.hpp"

#include <cmath>
#include <stdexcept>

#include "dirq/nelder_mead.hpp"
#include "dirq/rng.hpp"

namespace dirq {

namespace {

constexpr double kPi = 3.14159265358979323846;

FlipTrialRecord run_trial(const Direction& n, const std::optional<Direction>& axis,
                          TrialRng& rng) {
  FlipTrialRecord rec;
  rec.true_direction = n;
  rec.axis = axis ? *axis : rng.direction();
  const double p_plus = (1.0 + dot(n, rec.axis)) / 2.0;
  rec.outcome = rng.uniform01() < p_plus ? +1 : -1;
  rec.prepared = bloch_to_spinor(rec.outcome > 0 ? -rec.axis : rec.axis);
  rec.fidelity = std::norm(inner(bloch_to_spinor(-n), rec.prepared));
  return rec;
}

void accumulate(double x, long long count, double& mean, double& m2) {
  const double delta = x - mean;
  mean += delta / static_cast<double>(count);
  m2 += delta * (x - mean);
}

double std_error(double m2, long long trials) {
  if (trials < 2) return 0.0;
  return std::sqrt(m2 / static_cast<double>(trials - 1) / static_cast<double>(trials));
}

void require_unitary(const Mat2& u, const char* what) {
  if (max_abs_diff(u.adjoint() * u, Mat2::identity()) > 1e-8) {
    throw std::invalid_argument(std::string(what) + ": matrix is not unitary");
  }
}

}  // namespace

Spinor antiunitary_flip(const Spinor& s) {
  require_normalized(s, "antiunitary_flip");
  return {-std::conj(s.a1), std::conj(s.a0)};
}

FlipTrialRecord uqsf_trial(const Direction& n, const std::optional<Direction>& axis,
                           std::uint64_t seed) {
  require_unit(n, "uqsf_trial");
  if (axis) require_unit(*axis, "uqsf_trial");
  TrialRng rng(seed, 0);
  return run_trial(n, axis, rng);
}

MonteCarloMean uqsf_average_fidelity(long long trials, std::uint64_t seed,
                                     const std::optional<Direction>& fixed_axis) {
  if (trials < 1) throw std::invalid_argument("uqsf_average_fidelity: trials must be >= 1");
  if (fixed_axis) require_unit(*fixed_axis, "uqsf_average_fidelity");

  double mean = 0.0, m2 = 0.0;
  for (long long t = 0; t < trials; ++t) {
    TrialRng rng(seed, static_cast<std::uint64_t>(t));
    const Direction n = rng.direction();
    accumulate(run_trial(n, fixed_axis, rng).fidelity, t + 1, mean, m2);
  }
  return {mean, std_error(m2, trials), trials};
}

MulticopyTrial uqsf_multicopy(const Direction& n, int copies, std::uint64_t seed) {
  if (copies < 1) throw std::invalid_argument("uqsf_multicopy: copies must be >= 1");
  require_unit(n, "uqsf_multicopy");

  TrialRng rng(seed, 0);
  MulticopyTrial out;
  out.base = run_trial(n, std::nullopt, rng);
  // The measurement record is classical, so every copy is the same state.
  out.copies.assign(static_cast<std::size_t>(copies), out.base.prepared);
  out.average_fidelity = out.base.fidelity;
  return out;
}

MulticopySummary uqsf_multicopy_summary(int copies, long long trials,
                                        std::uint64_t seed,
                                        const std::optional<Direction>& fixed_axis) {
  if (copies < 1 || trials < 1) {
    throw std::invalid_argument("uqsf_multicopy_summary: copies and trials must be >= 1");
  }
  if (fixed_axis) require_unit(*fixed_axis, "uqsf_multicopy_summary");
  std::vector<double> mean(static_cast<std::size_t>(copies), 0.0);
  std::vector<double> m2(static_cast<std::size_t>(copies), 0.0);

  for (long long t = 0; t < trials; ++t) {
    TrialRng rng(seed, static_cast<std::uint64_t>(t));
    const Direction n = rng.direction();
    const FlipTrialRecord rec = run_trial(n, fixed_axis, rng);
    const Spinor target = bloch_to_spinor(-n);
    for (int c = 0; c < copies; ++c) {
      const double fid = std::norm(inner(target, rec.prepared));
      accumulate(fid, t + 1, mean[static_cast<std::size_t>(c)],
                 m2[static_cast<std::size_t>(c)]);
    }
  }

  MulticopySummary s;
  s.trials = trials;
  s.per_copy_mean = mean;
  for (int c = 0; c < copies; ++c)
    s.per_copy_std_error.push_back(std_error(m2[static_cast<std::size_t>(c)], trials));
  return s;
}

Mat2 uqsf_channel(const Mat2& rho) {
  require_hermitian(rho, "uqsf_channel", 1e-12);
  if (std::abs(rho.trace().real() - 1.0) > 1e-12) {
    throw std::invalid_argument("uqsf_channel: input does not have unit trace");
  }
  if (hermitian_eigen(rho).eigenvalues[0] < -1e-10) {
    throw std::invalid_argument("uqsf_channel: input is not positive semidefinite");
  }

  Mat2 out = Mat2::identity();
  out *= cplx{0.5, 0.0};
  for (int k = 0; k < 3; ++k) {
    const double r_k = (rho * pauli(k)).trace().real();
    Mat2 p = pauli(k);
    p *= cplx{-r_k / 6.0, 0.0};  // Bloch contraction by -1/3, halved into rho form
    out += p;
  }
  return out;
}

double unitary_flip_fidelity(const Mat2& u) {
  require_unitary(u, "unitary_flip_fidelity");
  double trace_r = 0.0;
  for (int k = 0; k < 3; ++k) {
    trace_r += (pauli(k) * u * pauli(k) * u.adjoint()).trace().real() / 2.0;
  }
  return 0.5 - trace_r / 6.0;
}

Mat2 unitary2_from_parameters(const std::array<double, 4>& h) {
  Mat2 hm;
  hm(0, 0) = h[0];
  hm(1, 1) = h[3];
  hm(0, 1) = cplx{h[1], h[2]};
  hm(1, 0) = cplx{h[1], -h[2]};
  const auto eig = hermitian_eigen(hm);
  Mat2 u;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      for (int k = 0; k < 2; ++k)
        u(r, c) += eig.eigenvectors(r, k) * std::polar(1.0, eig.eigenvalues[k]) *
                   std::conj(eig.eigenvectors(c, k));
  return u;
}

Mat2 axis_angle_unitary(const Direction& axis, double angle) {
  require_unit(axis, "axis_angle_unitary");
  Mat2 u = Mat2::identity();
  u *= cplx{std::cos(angle / 2.0), 0.0};
  const double s = std::sin(angle / 2.0);
  const std::array<double, 3> a{axis.x, axis.y, axis.z};
  for (int k = 0; k < 3; ++k) {
    Mat2 p = pauli(k);
    p *= cplx{0.0, -s * a[static_cast<std::size_t>(k)]};
    u += p;
  }
  return u;
}

UnitaryFlipOptimum best_unitary_flip_fidelity(int starts, std::uint64_t seed) {
  if (starts < 1) throw std::invalid_argument("best_unitary_flip_fidelity: starts must be >= 1");

  const auto objective = [](std::span<const double> h) {
    return -unitary_flip_fidelity(
        unitary2_from_parameters({h[0], h[1], h[2], h[3]}));
  };

  UnitaryFlipOptimum best;
  best.fidelity = -1.0;
  best.starts = starts;
  for (int s = 0; s < starts; ++s) {
    TrialRng rng(seed, static_cast<std::uint64_t>(s));
    std::vector<double> h0(4);
    for (auto& v : h0) v = rng.uniform(-1.0, 1.0);
    const auto r = nelder_mead(objective, std::move(h0));
    if (-r.value > best.fidelity) {
      best.fidelity = -r.value;
      best.unitary = unitary2_from_parameters({r.x[0], r.x[1], r.x[2], r.x[3]});
    }
  }
  return best;
}

double unitary_flip_grid_maximum(double step_degrees) {
  if (step_degrees <= 0.0) {
    throw std::invalid_argument("unitary_flip_grid_maximum: step must be positive");
  }
  const double step = step_degrees * kPi / 180.0;
  double best = 0.0;
  for (double polar = 0.0; polar <= kPi + 1e-12; polar += step) {
    const double sp = std::sin(polar), cp = std::cos(polar);
    for (double azimuth = 0.0; azimuth < 2.0 * kPi - 1e-12; azimuth += step) {
      const Direction axis{sp * std::cos(azimuth), sp * std::sin(azimuth), cp};
      for (double angle = 0.0; angle <= kPi + 1e-12; angle += step) {
        best = std::max(best, unitary_flip_fidelity(axis_angle_unitary(axis, angle)));
      }
    }
  }
  return best;
}

}  // namespace dirq
