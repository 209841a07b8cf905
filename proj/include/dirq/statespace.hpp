#pragma once

#include <array>
#include <cstdint>

#include "dirq/estimation.hpp"
#include "dirq/hilbert.hpp"

namespace dirq {

struct GramReport {
  int samples = 0;
  std::array<double, 4> singular_values{};  // descending
  int rank = 0;
  double threshold = 1e-8;  // relative to the largest singular value
};

/// Dimension spanned by randomly sampled source states: stack them as rows,
/// read the singular values off the 4x4 Gram matrix. Parallel pairs stay in
/// the symmetric subspace (rank 3); anti-parallel pairs fill all of rank 4.
[[nodiscard]] GramReport span_rank(Pairing pairing, int sample_count,
                                   std::uint64_t seed);

/// Norm of the component of a normalized state along the singlet, i.e. its
/// distance from the symmetric subspace.
[[nodiscard]] double symmetric_subspace_residual(const TwoQubitState& psi);

}  // namespace dirq
