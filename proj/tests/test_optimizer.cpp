#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "dirq/estimation.hpp"
#include "dirq/flip.hpp"
#include "dirq/io.hpp"
#include "dirq/measurement.hpp"
#include "dirq/optimizer.hpp"
#include "dirq/rng.hpp"

using namespace dirq;

namespace {

const Scenario kParUniform{Pairing::parallel, Prior::uniform_sphere()};
const Scenario kAntiUniform{Pairing::antiparallel, Prior::uniform_sphere()};
const Scenario kAntiTetra{Pairing::antiparallel, Prior::tetrahedron_uniform()};

double antiparallel_uniform_value() {
  const double s3 = std::sqrt(3.0);
  return (5.0 * s3 + 33.0) / (3.0 * (3.0 * s3 - 1.0) * (3.0 * s3 - 1.0));
}

// Best fidelity reachable with one fixed measurement axis per qubit:
// 1/2 + (|m1 + m2| + |m1 - m2|)/12, maximized at perpendicular axes.
double product_optimum() { return 0.5 + std::sqrt(2.0) / 6.0; }

}  // namespace

TEST_CASE("exp(iH) columns stay orthonormal across the parameter space") {
  TrialRng rng(41, 0);
  for (int i = 0; i < 100; ++i) {
    std::array<double, 16> h;
    for (auto& v : h) v = rng.uniform(-2.5, 2.5);  // |H|_F <= 10
    const Mat4 u = unitary_from_parameters(h);
    CHECK(max_abs_diff(u.adjoint() * u, Mat4::identity()) < 1e-10);
  }
}

TEST_CASE("full search rediscovers both optima") {
  const auto r_par = optimize(kParUniform, 6, 2024);
  CHECK(r_par.best_fidelity >= 0.75 - 1e-3);
  CHECK(r_par.best_fidelity <= 1.0 + 1e-12);
  CHECK(r_par.evaluations.size() == 6);
  CHECK(r_par.converged.size() == 6);
  CHECK(validate(r_par.best_measurement).pass);
  CHECK(std::abs(fidelity_exact(r_par.best_measurement, kParUniform).value -
                 r_par.best_fidelity) < 1e-10);

  const auto r_anti = optimize(kAntiUniform, 6, 99);
  CHECK(r_anti.best_fidelity >= antiparallel_uniform_value() - 1e-3);

  const auto r_tetra = optimize(kAntiTetra, 8, 5);
  CHECK(r_tetra.best_fidelity >= 0.95528 - 1e-3);

  // The collective anti-parallel optimum clears the parallel one by the
  // full recorded margin.
  CHECK(r_anti.best_fidelity - r_par.best_fidelity >= 0.035);
}

TEST_CASE("optimization is deterministic for a fixed seed") {
  const auto a = optimize(kParUniform, 3, 77);
  const auto b = optimize(kParUniform, 3, 77);
  CHECK(a.best_fidelity == b.best_fidelity);
  CHECK(a.evaluations == b.evaluations);
  CHECK(measurement_to_json(a.best_measurement).dump() ==
        measurement_to_json(b.best_measurement).dump());
}

TEST_CASE("a search never ends below its start") {
  NelderMeadOptions frozen;
  frozen.max_evaluations = 0;
  const auto start_only = optimize(kAntiUniform, 1, 31415, frozen);
  CHECK_FALSE(start_only.converged[0]);
  CHECK(start_only.evaluations[0] == 1);
  CHECK(start_only.best_fidelity >= 0.0);
  CHECK(start_only.best_fidelity <= 1.0);

  const auto full = optimize(kAntiUniform, 1, 31415);
  CHECK(full.best_fidelity >= start_only.best_fidelity - 1e-12);
}

TEST_CASE("product-constrained searches") {
  const auto par = optimize_product(kParUniform, 6, 11);
  const auto anti = optimize_product(kAntiUniform, 6, 11);

  // Separate measurements cannot reach the collective optimum, and flipping
  // the source makes no difference to what they can reach.
  CHECK(par.best_fidelity < 0.75);
  CHECK(std::abs(par.best_fidelity - product_optimum()) < 1e-3);
  CHECK(std::abs(anti.best_fidelity - product_optimum()) < 1e-3);
  CHECK(std::abs(par.best_fidelity - anti.best_fidelity) < 2e-3);
}

TEST_CASE("product basis construction is a plain tensor grid") {
  TrialRng rng(42, 0);
  std::array<double, 4> h1, h2;
  for (auto& v : h1) v = rng.uniform(-1.0, 1.0);
  for (auto& v : h2) v = rng.uniform(-1.0, 1.0);
  const Mat2 u1 = unitary2_from_parameters(h1);
  const Mat2 u2 = unitary2_from_parameters(h2);
  const auto basis = product_basis(u1, u2);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      const auto& vec = basis[2 * a + b];
      CHECK(std::abs(vec.c[0] - u1(0, a) * u2(0, b)) < 1e-15);
      CHECK(std::abs(vec.c[3] - u1(1, a) * u2(1, b)) < 1e-15);
    }
}

TEST_CASE("flipping every guess") {
  const auto m = build_parallel_optimal();
  const auto flipped = flip_second_guess_rule(m);
  for (int j = 0; j < 4; ++j) {
    CHECK(flipped.guesses[j].x == -m.guesses[j].x);
    CHECK(flipped.guesses[j].z == -m.guesses[j].z);
  }
  const auto twice = flip_second_guess_rule(flipped);
  for (int j = 0; j < 4; ++j) CHECK(twice.guesses[j].z == m.guesses[j].z);

  // Negating the guesses does not port an entangled measurement from
  // parallel to anti-parallel sources: 3/4 collapses to 1/2.
  const double f_par = fidelity_exact(m, kParUniform).value;
  const double f_anti_flipped = fidelity_exact(flipped, kAntiUniform).value;
  CHECK(std::abs(f_par - 0.75) < 1e-12);
  CHECK(std::abs(f_anti_flipped - 0.5) < 1e-12);
  CHECK(f_par - f_anti_flipped > 0.2);
}
