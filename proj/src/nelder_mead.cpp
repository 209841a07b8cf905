#include "dirq/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace dirq {

namespace {

double distance(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += (a[k] - b[k]) * (a[k] - b[k]);
  return std::sqrt(s);
}

}  // namespace

NelderMeadResult nelder_mead(
    const std::function<double(std::span<const double>)>& objective,
    std::vector<double> start, const NelderMeadOptions& options) {
  const std::size_t n = start.size();
  NelderMeadResult res;

  if (options.max_evaluations <= 0) {
    res.value = objective(start);
    res.x = std::move(start);
    res.evaluations = 1;
    return res;
  }

  std::vector<std::vector<double>> simplex;
  std::vector<double> values;
  simplex.reserve(n + 1);
  simplex.push_back(start);
  for (std::size_t i = 0; i < n; ++i) {
    auto v = start;
    v[i] += options.initial_step;
    simplex.push_back(std::move(v));
  }
  int evals = 0;
  for (const auto& v : simplex) {
    values.push_back(objective(v));
    ++evals;
  }

  std::vector<std::size_t> order(n + 1);
  while (evals < options.max_evaluations) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    const std::size_t best = order[0];
    const std::size_t second_worst = order[n - 1];
    const std::size_t worst = order[n];

    double diameter = 0.0;
    for (std::size_t i = 0; i <= n; ++i)
      diameter = std::max(diameter, distance(simplex[i], simplex[best]));
    if (diameter < options.diameter_tol) {
      res.converged = true;
      break;
    }

    std::vector<double> centroid(n, 0.0);
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == worst) continue;
      for (std::size_t k = 0; k < n; ++k) centroid[k] += simplex[i][k] / static_cast<double>(n);
    }

    auto blend = [&](double t) {
      std::vector<double> p(n);
      for (std::size_t k = 0; k < n; ++k)
        p[k] = centroid[k] + t * (centroid[k] - simplex[worst][k]);
      return p;
    };

    auto reflected = blend(options.reflection);
    const double f_reflected = objective(reflected);
    ++evals;

    if (f_reflected < values[best]) {
      auto expanded = blend(options.reflection * options.expansion);
      const double f_expanded = objective(expanded);
      ++evals;
      if (f_expanded < f_reflected) {
        simplex[worst] = std::move(expanded);
        values[worst] = f_expanded;
      } else {
        simplex[worst] = std::move(reflected);
        values[worst] = f_reflected;
      }
    } else if (f_reflected < values[second_worst]) {
      simplex[worst] = std::move(reflected);
      values[worst] = f_reflected;
    } else {
      const bool outside = f_reflected < values[worst];
      auto contracted = blend(outside ? options.reflection * options.contraction
                                      : -options.contraction);
      const double f_contracted = objective(contracted);
      ++evals;
      if (f_contracted < std::min(f_reflected, values[worst])) {
        simplex[worst] = std::move(contracted);
        values[worst] = f_contracted;
      } else {
        for (std::size_t i = 0; i <= n; ++i) {
          if (i == best) continue;
          for (std::size_t k = 0; k < n; ++k)
            simplex[i][k] =
                simplex[best][k] + options.shrink * (simplex[i][k] - simplex[best][k]);
          values[i] = objective(simplex[i]);
          ++evals;
        }
      }
    }
  }

  const std::size_t best = static_cast<std::size_t>(
      std::min_element(values.begin(), values.end()) - values.begin());
  res.x = simplex[best];
  res.value = values[best];
  res.evaluations = evals;
  return res;
}

}  // namespace dirq
