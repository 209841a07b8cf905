#pragma once

#include <array>
#include <stdexcept>

#include "dirq/hilbert.hpp"
#include "dirq/measurement.hpp"

namespace dirq {

/// Coefficients of a two-qubit Hermitian operator M in the Pauli basis:
/// M = 1/4 (scalar I + sum_k alpha_k s_k(x)I + sum_l beta_l I(x)s_l
///          + sum_kl R_kl s_k(x)s_l).
struct PauliDecomposition {
  double scalar = 0.0;
  std::array<double, 3> alpha{};
  std::array<double, 3> beta{};
  std::array<std::array<double, 3>, 3> correlation{};
};

[[nodiscard]] PauliDecomposition pauli_decompose(const Mat4& m);
[[nodiscard]] Mat4 pauli_reconstruct(const PauliDecomposition& d);

/// Flips every second-qubit Pauli component: beta -> -beta,
/// correlation -> -correlation. Trace-preserving involution with the same
/// spectrum as the second-subsystem partial transpose.
[[nodiscard]] Mat4 passive_flip(const Mat4& m);

/// Index transposition on one tensor factor; subsystem is 1 or 2.
[[nodiscard]] Mat4 partial_transpose(const Mat4& m, int subsystem);

/// Minimum eigenvalue of the subsystem-2 partial transpose. For a two-qubit
/// state this is negative exactly when the state is entangled.
[[nodiscard]] double negativity(const Mat4& m);

struct ReflectionCheck {
  double residual = 0.0;     // entrywise gap to the matched reflection form
  int matched_component = 0; // Pauli index (0 = x, 1 = y, 2 = z) negated by
                             // the computational-basis partial transpose
};

/// Compares the partial transpose of (a0 I + a.s) (x) (b0 I + b.s) with the
/// same product operator whose second factor has one Pauli component negated,
/// and reports the component that matches.
[[nodiscard]] ReflectionCheck reflection_identity_check(
    double a0, const std::array<double, 3>& a, double b0,
    const std::array<double, 3>& b);

struct MirrorFlipResult {
  bool is_state = false;       // true when the output is a valid pure state
  TwoQubitState state;         // meaningful only when is_state
  double min_eigenvalue = 0.0; // of the output matrix, always reported
  Mat4 output;
};

/// Reflects the second qubit via the partial transpose, then rotates it by pi
/// about the axis orthogonal to the reflection plane. On a product state
/// |n, m> this produces the density of |n, -m>; on an entangled input the
/// output has a negative eigenvalue and is_state is false.
[[nodiscard]] MirrorFlipResult mirror_plus_rotation_flip(const TwoQubitState& psi);

struct ProductEquivalenceReport {
  double fidelity_parallel = 0.0;
  double fidelity_antiparallel_flipped = 0.0;
};

/// Raised when a basis handed to passive_flip_equivalence_product contains an
/// entangled vector; certificate is the largest concurrence (2 l1 l2 over the
/// Schmidt values) across the four basis vectors.
struct NonProductBasisError : std::invalid_argument {
  explicit NonProductBasisError(double certificate_);
  double certificate;
};

/// For a product-form measurement, evaluates the uniform-prior fidelity on
/// parallel pairs, and on anti-parallel pairs after the second factor of
/// every basis vector is sent through the anti-unitary flip (guesses kept).
/// The two numbers agree to rounding; entangled bases are rejected.
[[nodiscard]] ProductEquivalenceReport passive_flip_equivalence_product(
    const ProjectiveMeasurement& m);

}  // namespace dirq
