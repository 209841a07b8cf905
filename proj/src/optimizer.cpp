#include "dirq/optimizer.hpp"

#include <cmath>
#include <stdexcept>

#include "dirq/flip.hpp"
#include "dirq/rng.hpp"

namespace dirq {

namespace {

Mat4 hermitian_from_parameters(const std::array<double, 16>& h) {
  Mat4 m;
  for (int p = 0; p < 4; ++p) m(p, p) = h[static_cast<std::size_t>(p) * 4 + p];
  for (int p = 0; p < 4; ++p) {
    for (int q = p + 1; q < 4; ++q) {
      const cplx v{h[static_cast<std::size_t>(p) * 4 + q],
                   h[static_cast<std::size_t>(q) * 4 + p]};
      m(p, q) = v;
      m(q, p) = std::conj(v);
    }
  }
  return m;
}

struct SearchSpace {
  int dimension;
  std::array<TwoQubitState, 4> (*realize)(std::span<const double>);
};

std::array<TwoQubitState, 4> realize_full(std::span<const double> h) {
  std::array<double, 16> p;
  for (int k = 0; k < 16; ++k) p[static_cast<std::size_t>(k)] = h[static_cast<std::size_t>(k)];
  return basis_from_unitary(unitary_from_parameters(p));
}

std::array<TwoQubitState, 4> realize_product(std::span<const double> h) {
  const Mat2 first = unitary2_from_parameters({h[0], h[1], h[2], h[3]});
  const Mat2 second = unitary2_from_parameters({h[4], h[5], h[6], h[7]});
  return product_basis(first, second);
}

OptimizationResult run_search(const SearchSpace& space, const Scenario& s, int starts,
                              std::uint64_t seed, const NelderMeadOptions& options,
                              const char* label) {
  if (starts < 1) throw std::invalid_argument("optimize: starts must be >= 1");

  const auto objective = [&](std::span<const double> h) {
    return -optimal_guesses(space.realize(h), s).fidelity;
  };

  OptimizationResult out;
  out.starts = starts;
  std::vector<double> best_x;
  double best_value = 1.0;  // objective is -fidelity, always <= 0

  for (int start = 0; start < starts; ++start) {
    TrialRng rng(seed, static_cast<std::uint64_t>(start));
    std::vector<double> x0(static_cast<std::size_t>(space.dimension));
    for (auto& v : x0) v = rng.uniform(-1.0, 1.0);

    const NelderMeadResult r = nelder_mead(objective, std::move(x0), options);
    out.evaluations.push_back(r.evaluations);
    out.converged.push_back(r.converged);
    if (r.value < best_value) {
      best_value = r.value;
      best_x = r.x;
    }
  }

  const auto basis = space.realize(best_x);
  const GuessOptimization g = optimal_guesses(basis, s);
  out.best_measurement = {basis, g.guesses, label};
  out.best_fidelity = fidelity_exact(out.best_measurement, s).value;
  return out;
}

}  // namespace

Mat4 unitary_from_parameters(const std::array<double, 16>& h) {
  const auto eig = hermitian_eigen(hermitian_from_parameters(h));
  Mat4 u;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      for (int k = 0; k < 4; ++k)
        u(r, c) += eig.eigenvectors(r, k) * std::polar(1.0, eig.eigenvalues[k]) *
                   std::conj(eig.eigenvectors(c, k));
  return u;
}

std::array<TwoQubitState, 4> basis_from_unitary(const Mat4& u) {
  std::array<TwoQubitState, 4> basis;
  for (int j = 0; j < 4; ++j)
    for (int r = 0; r < 4; ++r) basis[static_cast<std::size_t>(j)].c[static_cast<std::size_t>(r)] = u(r, j);
  return basis;
}

std::array<TwoQubitState, 4> product_basis(const Mat2& first, const Mat2& second) {
  std::array<TwoQubitState, 4> basis;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      const Spinor u{first(0, a), first(1, a)};
      const Spinor w{second(0, b), second(1, b)};
      basis[static_cast<std::size_t>(2 * a + b)] = tensor(u, w);
    }
  return basis;
}

OptimizationResult optimize(const Scenario& s, int starts, std::uint64_t seed,
                            const NelderMeadOptions& options) {
  return run_search({16, realize_full}, s, starts, seed, options, "optimized-full");
}

OptimizationResult optimize_product(const Scenario& s, int starts, std::uint64_t seed,
                                    const NelderMeadOptions& options) {
  return run_search({8, realize_product}, s, starts, seed, options, "optimized-product");
}

ProjectiveMeasurement flip_second_guess_rule(const ProjectiveMeasurement& m) {
  ProjectiveMeasurement out = m;
  for (auto& g : out.guesses) g = -g;
  return out;
}

}  // namespace dirq
