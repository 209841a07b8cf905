#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dirq {

inline constexpr const char* kVersion = "0.1.0";

/// One checked claim. comparison is "abs" (|computed - expected| <= tolerance),
/// "ge" (computed >= expected - tolerance) or "le" (computed <= expected +
/// tolerance).
struct ClaimResult {
  std::string id;
  double expected = 0.0;
  double computed = 0.0;
  double tolerance = 0.0;
  std::string comparison = "abs";
  bool pass = false;
};

struct VerifyReport {
  std::vector<ClaimResult> claims;
  bool overall_pass = false;
  std::uint64_t seed = 0;
  long long trials = 0;
  std::string version = kVersion;

  // Exact fidelity values for the pairing x prior summary table.
  double fidelity_parallel_uniform = 0.0;
  double fidelity_parallel_tetrahedron = 0.0;
  double fidelity_antiparallel_uniform = 0.0;
  double fidelity_antiparallel_tetrahedron = 0.0;
};

/// Recomputes every built-in claim from scratch: the four exact fidelities
/// and their gaps, basis residuals and re-derived coefficients, optimizer
/// rediscovery, product-measurement equivalence, the spin-flip machine and
/// its unitary ceiling, negativity of the flipped projectors, span ranks,
/// and the reflection identities. mc_trials <= 0 skips the Monte-Carlo
/// claims. corrupt_claim is a test hook: the named claim's expected constant
/// is perturbed so it must fail.
[[nodiscard]] VerifyReport run_verification(std::uint64_t seed, long long mc_trials,
                                            const std::string& corrupt_claim = "");

}  // namespace dirq
