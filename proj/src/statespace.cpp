#include "dirq/statespace.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "dirq/rng.hpp"

namespace dirq {

GramReport span_rank(Pairing pairing, int sample_count, std::uint64_t seed) {
  if (sample_count < 1) throw std::invalid_argument("span_rank: sample_count must be >= 1");

  std::vector<TwoQubitState> rows;
  rows.reserve(static_cast<std::size_t>(sample_count));
  for (int i = 0; i < sample_count; ++i) {
    TrialRng rng(seed, static_cast<std::uint64_t>(i));
    rows.push_back(source_state(rng.direction(), pairing));
  }

  Mat4 gram;  // G_kl = sum_i conj(psi_i[k]) psi_i[l]
  for (const auto& psi : rows)
    for (int k = 0; k < 4; ++k)
      for (int l = 0; l < 4; ++l) gram(k, l) += std::conj(psi.c[k]) * psi.c[l];

  const auto eig = hermitian_eigen(gram);
  GramReport rep;
  rep.samples = sample_count;
  // Gram eigenvalues sit at the squared singular-value scale, so anything
  // below 1e-12 of the top one is a numerical zero; clamp before the square
  // root or rounding noise of order sqrt(eps) would straddle the threshold.
  const double floor = 1e-12 * std::max(0.0, eig.eigenvalues[3]);
  for (int k = 0; k < 4; ++k) {
    const double lambda = eig.eigenvalues[static_cast<std::size_t>(3 - k)];
    rep.singular_values[static_cast<std::size_t>(k)] =
        lambda > floor ? std::sqrt(lambda) : 0.0;
  }
  const double cutoff = rep.threshold * rep.singular_values[0];
  rep.rank = static_cast<int>(std::count_if(
      rep.singular_values.begin(), rep.singular_values.end(),
      [cutoff](double s) { return s > cutoff; }));
  return rep;
}

double symmetric_subspace_residual(const TwoQubitState& psi) {
  require_normalized(psi, "symmetric_subspace_residual");
  return std::abs(inner(singlet(), psi));
}

}  // namespace dirq
