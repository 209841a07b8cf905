#include "dirq/measurement.hpp"

#include <cmath>
#include <sstream>

namespace dirq {

namespace {

constexpr double kTwoPi = 2.0 * 3.14159265358979323846;

using Gram = std::array<std::array<cplx, 4>, 4>;

Gram gram_of(const std::array<TwoQubitState, 4>& states) {
  Gram g;
  for (int j = 0; j < 4; ++j)
    for (int k = 0; k < 4; ++k) g[j][k] = inner(states[j], states[k]);
  return g;
}

std::string format_gram(const Gram& g) {
  std::ostringstream os;
  os.precision(6);
  for (int j = 0; j < 4; ++j) {
    for (int k = 0; k < 4; ++k)
      os << "(" << g[j][k].real() << (g[j][k].imag() < 0 ? "" : "+")
         << g[j][k].imag() << "i) ";
    os << "\n";
  }
  return os.str();
}

// Sum over pairs j < k of |e^{i f (chi_k - chi_j)} base_jk - target|^2.
// f is the number of phased factors in each pair state (2 when the phase
// rides on both spinors of |n,n>, 1 when it rides on the first factor only).
double phase_residual(const Gram& base, const std::array<double, 4>& chi,
                      double frequency, double target) {
  double r = 0.0;
  for (int j = 0; j < 4; ++j) {
    for (int k = j + 1; k < 4; ++k) {
      const cplx o = std::polar(1.0, frequency * (chi[k] - chi[j])) * base[j][k];
      r += std::norm(o - target);
    }
  }
  return r;
}

std::array<double, 4> search_phases(const Gram& base, double frequency,
                                    double target) {
  constexpr int kGrid = 64;
  std::array<double, 4> best{};
  double best_r = phase_residual(base, best, frequency, target);
  for (int i2 = 0; i2 < kGrid; ++i2) {
    for (int i3 = 0; i3 < kGrid; ++i3) {
      for (int i4 = 0; i4 < kGrid; ++i4) {
        const std::array<double, 4> chi{0.0, kTwoPi * i2 / kGrid,
                                        kTwoPi * i3 / kGrid, kTwoPi * i4 / kGrid};
        const double r = phase_residual(base, chi, frequency, target);
        if (r < best_r) {
          best_r = r;
          best = chi;
        }
      }
    }
  }

  double step = kTwoPi / kGrid;
  while (step >= 1e-12) {
    bool improved = false;
    for (int c = 1; c < 4; ++c) {
      for (double sign : {1.0, -1.0}) {
        std::array<double, 4> trial = best;
        trial[c] += sign * step;
        const double r = phase_residual(base, trial, frequency, target);
        if (r < best_r) {
          best_r = r;
          best = trial;
          improved = true;
        }
      }
    }
    if (!improved) step /= 2.0;
  }

  if (best_r >= 1e-10) {
    throw MeasurementConstructionError(
        "phase search failed to reach the target overlaps (residual " +
        std::to_string(best_r) + ")");
  }
  return best;
}

std::array<TwoQubitState, 4> pair_states(bool antiparallel) {
  const auto verts = tetrahedron().vertices;
  const auto chi = antiparallel ? fix_phases_antiparallel() : fix_phases_parallel();
  std::array<TwoQubitState, 4> out;
  for (int j = 0; j < 4; ++j) {
    const Spinor first = bloch_to_spinor(verts[j], chi[j]);
    const Spinor second =
        antiparallel ? bloch_to_spinor(-verts[j]) : bloch_to_spinor(verts[j], chi[j]);
    out[j] = tensor(first, second);
  }
  return out;
}

}  // namespace

Tetrahedron tetrahedron() {
  const double s2 = std::sqrt(2.0);
  const double s23 = std::sqrt(2.0 / 3.0);
  return {{{{0.0, 0.0, 1.0},
            {std::sqrt(8.0) / 3.0, 0.0, -1.0 / 3.0},
            {-s2 / 3.0, s23, -1.0 / 3.0},
            {-s2 / 3.0, -s23, -1.0 / 3.0}}}};
}

std::array<double, 4> fix_phases_parallel() {
  const auto verts = tetrahedron().vertices;
  std::array<TwoQubitState, 4> bare;
  for (int j = 0; j < 4; ++j) {
    const Spinor k = bloch_to_spinor(verts[j]);
    bare[j] = tensor(k, k);
  }
  return search_phases(gram_of(bare), 2.0, -1.0 / 3.0);
}

std::array<double, 4> fix_phases_antiparallel() {
  const auto verts = tetrahedron().vertices;
  std::array<TwoQubitState, 4> bare;
  for (int j = 0; j < 4; ++j) {
    bare[j] = tensor(bloch_to_spinor(verts[j]), bloch_to_spinor(-verts[j]));
  }
  return search_phases(gram_of(bare), 1.0, 1.0 / 3.0);
}

std::array<TwoQubitState, 4> parallel_pair_states() { return pair_states(false); }

std::array<TwoQubitState, 4> antiparallel_pair_states() { return pair_states(true); }

ProjectiveMeasurement build_parallel_optimal() {
  const auto pairs = parallel_pair_states();
  const TwoQubitState sing = singlet();
  const double w = std::sqrt(3.0) / 2.0;

  ProjectiveMeasurement m;
  m.label = "parallel-optimal";
  m.guesses = tetrahedron().vertices;
  for (int j = 0; j < 4; ++j) {
    for (int k = 0; k < 4; ++k) m.basis[j].c[k] = w * pairs[j].c[k] + 0.5 * sing.c[k];
  }

  if (!validate(m).pass) {
    throw MeasurementConstructionError(
        "parallel-optimal basis failed validation:\n" + format_gram(gram_of(m.basis)));
  }
  return m;
}

double default_antiparallel_alpha() {
  return 13.0 / (6.0 * std::sqrt(6.0) - 2.0 * std::sqrt(2.0));
}

double default_antiparallel_beta() {
  return (5.0 - 2.0 * std::sqrt(3.0)) / (6.0 * std::sqrt(6.0) - 2.0 * std::sqrt(2.0));
}

ProjectiveMeasurement build_antiparallel(double alpha, double beta) {
  const auto pairs = antiparallel_pair_states();

  ProjectiveMeasurement m;
  m.label = "antiparallel";
  m.guesses = tetrahedron().vertices;
  for (int j = 0; j < 4; ++j) {
    for (int k = 0; k < 4; ++k) {
      cplx v = alpha * pairs[j].c[k];
      for (int l = 0; l < 4; ++l)
        if (l != j) v -= beta * pairs[l].c[k];
      m.basis[j].c[k] = v;
    }
  }

  if (!validate(m).pass) {
    throw MeasurementConstructionError(
        "anti-parallel basis is not orthonormal for alpha=" + std::to_string(alpha) +
        ", beta=" + std::to_string(beta) + "; Gram matrix:\n" +
        format_gram(gram_of(m.basis)));
  }
  return m;
}

MeasurementValidation validate(const ProjectiveMeasurement& m) {
  MeasurementValidation v;
  for (int j = 0; j < 4; ++j) {
    for (int k = 0; k < 4; ++k) {
      const cplx o = inner(m.basis[j], m.basis[k]);
      const double delta = (j == k) ? 1.0 : 0.0;
      v.orthonormality_residual =
          std::max(v.orthonormality_residual, std::abs(o - delta));
    }
  }
  Mat4 sum;  // sum_j |b_j><b_j| without assuming the b_j are normalized
  for (int j = 0; j < 4; ++j)
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) sum(r, c) += m.basis[j].c[r] * std::conj(m.basis[j].c[c]);
  v.completeness_residual = max_abs_diff(sum, Mat4::identity());
  v.pass = v.orthonormality_residual < 1e-8 && v.completeness_residual < 1e-8;
  return v;
}

std::array<double, 2> rederive_antiparallel_coefficients() {
  const auto g = gram_of(antiparallel_pair_states());

  double off = 0.0;
  for (int j = 0; j < 4; ++j)
    for (int k = 0; k < 4; ++k)
      if (j != k) off += g[j][k].real() / 12.0;

  // With uniform pair overlap off, orthonormality of
  // alpha |p_j> - beta sum_{k != j} |p_k> pins (alpha + beta)^2 (1 - off) = 1
  // and a quadratic in beta; the smaller root is the normalized solution
  // with alpha > beta.
  const double s = 1.0 / std::sqrt(1.0 - off);
  const double qa = 4.0 + 12.0 * off;
  const double qb = -2.0 * s * (1.0 + 3.0 * off);
  const double qc = off * s * s;
  const double beta = (-qb - std::sqrt(qb * qb - 4.0 * qa * qc)) / (2.0 * qa);
  return {s - beta, beta};
}

}  // namespace dirq
