#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "dirq/estimation.hpp"
#include "dirq/flip.hpp"
#include "dirq/measurement.hpp"
#include "dirq/optimizer.hpp"
#include "dirq/rng.hpp"
#include "dirq/transpose.hpp"
#include "oracles.hpp"

using namespace dirq;

namespace {

std::array<double, 4> sorted_spectrum(const Mat4& m) {
  auto v = hermitian_eigen(m).eigenvalues;
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("pauli decomposition of reference states") {
  Mat4 quarter_identity = Mat4::identity();
  quarter_identity *= cplx{0.25, 0.0};
  const auto d_id = pauli_decompose(quarter_identity);
  CHECK(std::abs(d_id.scalar - 1.0) < 1e-14);
  for (int k = 0; k < 3; ++k) {
    CHECK(std::abs(d_id.alpha[k]) < 1e-14);
    CHECK(std::abs(d_id.beta[k]) < 1e-14);
    for (int l = 0; l < 3; ++l) CHECK(std::abs(d_id.correlation[k][l]) < 1e-14);
  }

  const auto d_singlet = pauli_decompose(pure_density(singlet()));
  CHECK(std::abs(d_singlet.scalar - 1.0) < 1e-14);
  for (int k = 0; k < 3; ++k) {
    CHECK(std::abs(d_singlet.alpha[k]) < 1e-14);
    CHECK(std::abs(d_singlet.beta[k]) < 1e-14);
    for (int l = 0; l < 3; ++l) {
      const double expected = k == l ? -1.0 : 0.0;
      CHECK(std::abs(d_singlet.correlation[k][l] - expected) < 1e-12);
    }
  }

  TrialRng rng(61, 0);
  for (int i = 0; i < 50; ++i) {
    const Direction n = rng.direction();
    const Spinor k = bloch_to_spinor(n);
    const auto d = pauli_decompose(pure_density(tensor(k, k)));
    const std::array<double, 3> nv{n.x, n.y, n.z};
    for (int a = 0; a < 3; ++a) {
      CHECK(std::abs(d.alpha[a] - nv[a]) < 1e-12);
      CHECK(std::abs(d.beta[a] - nv[a]) < 1e-12);
      for (int b = 0; b < 3; ++b)
        CHECK(std::abs(d.correlation[a][b] - nv[a] * nv[b]) < 1e-12);
    }
  }
}

TEST_CASE("decompose-reconstruct is the identity on Hermitian matrices") {
  TrialRng rng(62, 0);
  for (int i = 0; i < 200; ++i) {
    const Mat4 m = oracle::random_hermitian4(rng, 3.0);
    CHECK(max_abs_diff(pauli_reconstruct(pauli_decompose(m)), m) < 1e-12);
  }
  Mat4 skew;
  skew(0, 1) = 1.0;
  CHECK_THROWS_AS((void)pauli_decompose(skew), std::invalid_argument);
}

TEST_CASE("passive flip sends |n,m> to |n,-m>") {
  TrialRng rng(63, 0);
  for (int i = 0; i < 100; ++i) {
    const Spinor u = oracle::random_spinor(rng);
    const Spinor w = oracle::random_spinor(rng);
    const Mat4 flipped = passive_flip(pure_density(tensor(u, w)));
    const Mat4 expected = pure_density(tensor(u, antiunitary_flip(w)));
    CHECK(max_abs_diff(flipped, expected) < 1e-12);
  }
}

TEST_CASE("passive flip structural identities") {
  TrialRng rng(64, 0);

  Mat2 rot;  // pi rotation about y
  rot(0, 1) = -1.0;
  rot(1, 0) = 1.0;
  const Mat4 lift = kron(Mat2::identity(), rot);

  for (int i = 0; i < 200; ++i) {
    const Mat4 m = oracle::random_hermitian4(rng, 2.0);

    // Involution and trace preservation.
    CHECK(max_abs_diff(passive_flip(passive_flip(m)), m) < 1e-12);
    CHECK(std::abs(passive_flip(m).trace().real() - m.trace().real()) < 1e-12);
    CHECK(passive_flip(m).hermiticity_residual() < 1e-12);

    // The flip is the partial transpose conjugated by the y rotation, so the
    // two share their spectrum.
    const Mat4 via_transpose = lift * partial_transpose(m, 2) * lift.adjoint();
    CHECK(max_abs_diff(passive_flip(m), via_transpose) < 1e-12);
    const auto s1 = sorted_spectrum(passive_flip(m));
    const auto s2 = sorted_spectrum(partial_transpose(m, 2));
    for (int k = 0; k < 4; ++k) CHECK(std::abs(s1[k] - s2[k]) < 1e-10);
  }

  // The flipped singlet projector dips to -1/2.
  CHECK(std::abs(hermitian_eigen(passive_flip(pure_density(singlet()))).eigenvalues[0] +
                 0.5) < 1e-12);
}

TEST_CASE("partial transpose index rules") {
  TrialRng rng(65, 0);

  // Product densities keep their (non-negative) spectrum.
  const Mat2 rho_a = pure_density(oracle::random_spinor(rng));
  const Mat2 rho_b = pure_density(oracle::random_spinor(rng));
  const Mat4 product = kron(rho_a, rho_b);
  const Mat4 pt = partial_transpose(product, 2);
  const auto s_before = sorted_spectrum(product);
  const auto s_after = sorted_spectrum(pt);
  for (int k = 0; k < 4; ++k) {
    CHECK(std::abs(s_before[k] - s_after[k]) < 1e-12);
    CHECK(s_after[k] >= -1e-12);
  }

  // Transposing both subsystems is the full transpose.
  const Mat4 m = oracle::random_hermitian4(rng, 2.0);
  Mat4 full;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) full(r, c) = m(c, r);
  CHECK(max_abs_diff(partial_transpose(partial_transpose(m, 1), 2), full) < 1e-14);

  // The singlet spectrum after transposition.
  const auto s = sorted_spectrum(partial_transpose(pure_density(singlet()), 2));
  CHECK(std::abs(s[0] + 0.5) < 1e-12);
  for (int k = 1; k < 4; ++k) CHECK(std::abs(s[k] - 0.5) < 1e-12);

  CHECK_THROWS_AS((void)partial_transpose(m, 3), std::invalid_argument);
}

TEST_CASE("negativity of the built-in projectors") {
  for (const auto& b : build_parallel_optimal().basis) {
    const double neg = negativity(pure_density(b));
    CHECK(neg < -1e-6);
    CHECK(std::abs(neg + 0.125) < 1e-10);  // Schmidt product 1/8
  }
  for (const auto& b : build_antiparallel().basis) {
    const double neg = negativity(pure_density(b));
    CHECK(neg < -1e-6);
    CHECK(std::abs(neg + 0.25) < 1e-10);
  }

  TrialRng rng(66, 0);
  const Mat4 product =
      pure_density(tensor(oracle::random_spinor(rng), oracle::random_spinor(rng)));
  CHECK(negativity(product) >= -1e-12);

  CHECK_THROWS_AS((void)negativity(Mat4::identity()), std::invalid_argument);
}

TEST_CASE("negativity equals minus the Schmidt product on pure states") {
  TrialRng rng(67, 0);
  for (int i = 0; i < 500; ++i) {
    const bool make_product = i % 2 == 0;
    const TwoQubitState psi =
        make_product ? tensor(oracle::random_spinor(rng), oracle::random_spinor(rng))
                     : oracle::random_state(rng);
    const auto sv = schmidt_values(psi);
    const double neg = negativity(pure_density(psi));
    CHECK(std::abs(neg + sv[0] * sv[1]) < 1e-10);
    if (make_product) {
      CHECK(neg >= -1e-10);
    } else if (sv[1] > 1e-4) {
      CHECK(neg < -1e-8);
    }
  }
}

TEST_CASE("parallel and anti-parallel pair distances coincide") {
  TrialRng rng(68, 0);
  for (int i = 0; i < 1000; ++i) {
    const Direction n = rng.direction(), m = rng.direction();
    const double para = std::norm(inner(source_state(n, Pairing::parallel),
                                        source_state(m, Pairing::parallel)));
    const double anti = std::norm(inner(source_state(n, Pairing::antiparallel),
                                        source_state(m, Pairing::antiparallel)));
    CHECK(std::abs(para - anti) < 1e-12);
  }
}

TEST_CASE("the transpose reflects the second spin through the x-z plane") {
  TrialRng rng(69, 0);
  for (int i = 0; i < 100; ++i) {
    std::array<double, 3> a, b;
    const double a0 = rng.uniform(-1.0, 1.0), b0 = rng.uniform(-1.0, 1.0);
    for (auto& v : a) v = rng.uniform(-1.0, 1.0);
    for (auto& v : b) v = rng.uniform(-1.0, 1.0);
    const auto check = reflection_identity_check(a0, a, b0, b);
    CHECK(check.residual < 1e-12);
    CHECK(check.matched_component == 1);  // sigma_y flips in this basis
  }

  // A z-aligned second factor is transparent to the transpose.
  const auto polar = reflection_identity_check(0.4, {0.3, -0.2, 0.9}, 1.1, {0, 0, 1});
  CHECK(polar.residual < 1e-12);
  const auto scalar = reflection_identity_check(0.4, {0.3, -0.2, 0.9}, 1.1, {0, 0, 0});
  CHECK(scalar.residual < 1e-12);
}

TEST_CASE("mirror plus rotation flips product seconds and breaks on the singlet") {
  TrialRng rng(70, 0);
  for (int i = 0; i < 100; ++i) {
    const Spinor u = bloch_to_spinor(rng.direction());
    const Spinor w = bloch_to_spinor(rng.direction());
    const auto res = mirror_plus_rotation_flip(tensor(u, w));
    CHECK(res.is_state);
    CHECK(res.min_eigenvalue > -1e-10);
    const Mat4 expected = pure_density(tensor(u, antiunitary_flip(w)));
    CHECK(max_abs_diff(res.output, expected) < 1e-12);
    CHECK(std::abs(std::norm(inner(res.state, tensor(u, antiunitary_flip(w)))) - 1.0) <
          1e-10);
  }

  const Direction m_pole{0, 0, 1};
  const auto pole = mirror_plus_rotation_flip(
      tensor(bloch_to_spinor({1, 0, 0}), bloch_to_spinor(m_pole)));
  CHECK(pole.is_state);
  const Mat4 want =
      pure_density(tensor(bloch_to_spinor({1, 0, 0}), bloch_to_spinor(-m_pole)));
  CHECK(max_abs_diff(pole.output, want) < 1e-12);

  const auto broken = mirror_plus_rotation_flip(singlet());
  CHECK_FALSE(broken.is_state);
  CHECK(std::abs(broken.min_eigenvalue + 0.5) < 1e-12);
}

TEST_CASE("separate measurements see parallel and anti-parallel sources alike") {
  // Computational basis with its optimal guesses.
  std::array<TwoQubitState, 4> comp{};
  for (int j = 0; j < 4; ++j) comp[j].c[j] = 1.0;
  const Scenario par{Pairing::parallel, Prior::uniform_sphere()};
  const ProjectiveMeasurement m{comp, optimal_guesses(comp, par).guesses, "comp"};
  const auto eq = passive_flip_equivalence_product(m);
  CHECK(std::abs(eq.fidelity_parallel - eq.fidelity_antiparallel_flipped) < 1e-14);
  CHECK(std::abs(eq.fidelity_parallel - 2.0 / 3.0) < 1e-12);

  TrialRng rng(71, 0);
  for (int i = 0; i < 100; ++i) {
    std::array<double, 4> h1, h2, h3;
    for (auto& v : h1) v = rng.uniform(-1.5, 1.5);
    for (auto& v : h2) v = rng.uniform(-1.5, 1.5);
    for (auto& v : h3) v = rng.uniform(-1.5, 1.5);
    auto basis = product_basis(unitary2_from_parameters(h1), unitary2_from_parameters(h2));
    if (i % 2 == 1) {
      // Second-qubit basis conditioned on the first qubit's column: still a
      // product basis, just not a plain tensor grid.
      const auto alt =
          product_basis(unitary2_from_parameters(h1), unitary2_from_parameters(h3));
      basis[2] = alt[2];
      basis[3] = alt[3];
    }
    const ProjectiveMeasurement pm{basis, optimal_guesses(basis, par).guesses, "prod"};
    const auto r = passive_flip_equivalence_product(pm);
    CHECK(std::abs(r.fidelity_parallel - r.fidelity_antiparallel_flipped) < 1e-12);
  }

  // Entangled bases are rejected with the concurrence certificate.
  CHECK_THROWS_AS((void)passive_flip_equivalence_product(build_parallel_optimal()),
                  NonProductBasisError);
  try {
    (void)passive_flip_equivalence_product(build_parallel_optimal());
  } catch (const NonProductBasisError& e) {
    CHECK(std::abs(e.certificate - 0.25) < 1e-10);  // 2 * (1/8) per basis vector
  }
}
