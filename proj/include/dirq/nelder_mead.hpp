#pragma once

#include <functional>
#include <span>
#include <vector>

namespace dirq {

struct NelderMeadOptions {
  double reflection = 1.0;
  double expansion = 2.0;
  double contraction = 0.5;
  double shrink = 0.5;
  double initial_step = 0.3;   // per-coordinate offset of the initial simplex
  double diameter_tol = 1e-9;  // convergence: max vertex distance to the best
  int max_evaluations = 20000;
};

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0.0;
  int evaluations = 0;
  bool converged = false;
};

/// Derivative-free minimization with the textbook simplex moves. With
/// max_evaluations == 0 the start point is evaluated and returned as-is.
[[nodiscard]] NelderMeadResult nelder_mead(
    const std::function<double(std::span<const double>)>& objective,
    std::vector<double> start, const NelderMeadOptions& options = {});

}  // namespace dirq
