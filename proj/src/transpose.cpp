#include "dirq/transpose.hpp"

#include <cmath>
#include <string>

#include "dirq/estimation.hpp"
#include "dirq/flip.hpp"

namespace dirq {

namespace {

const Mat4& pauli_tensor(int k, int l) {
  // Index 0 stands for the identity, 1..3 for sigma_x, sigma_y, sigma_z.
  static const std::array<Mat4, 16> table = [] {
    std::array<Mat4, 16> t;
    const Mat2 id = Mat2::identity();
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        t[static_cast<std::size_t>(a) * 4 + b] =
            kron(a == 0 ? id : pauli(a - 1), b == 0 ? id : pauli(b - 1));
    return t;
  }();
  return table[static_cast<std::size_t>(k) * 4 + l];
}

double real_trace_product(const Mat4& m, const Mat4& basis_op) {
  cplx t{};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) t += m(r, c) * basis_op(c, r);
  return t.real();
}

Mat2 operator_from_bloch(double c0, const std::array<double, 3>& v) {
  Mat2 m = Mat2::identity();
  m *= cplx{c0, 0.0};
  for (int k = 0; k < 3; ++k) {
    Mat2 p = pauli(k);
    p *= cplx{v[k], 0.0};
    m += p;
  }
  return m;
}

}  // namespace

PauliDecomposition pauli_decompose(const Mat4& m) {
  require_hermitian(m, "pauli_decompose");
  PauliDecomposition d;
  d.scalar = real_trace_product(m, pauli_tensor(0, 0));
  for (int k = 0; k < 3; ++k) {
    d.alpha[k] = real_trace_product(m, pauli_tensor(k + 1, 0));
    d.beta[k] = real_trace_product(m, pauli_tensor(0, k + 1));
    for (int l = 0; l < 3; ++l)
      d.correlation[k][l] = real_trace_product(m, pauli_tensor(k + 1, l + 1));
  }
  return d;
}

Mat4 pauli_reconstruct(const PauliDecomposition& d) {
  Mat4 m;
  auto add = [&m](double w, const Mat4& op) {
    Mat4 t = op;
    t *= cplx{w / 4.0, 0.0};
    m += t;
  };
  add(d.scalar, pauli_tensor(0, 0));
  for (int k = 0; k < 3; ++k) {
    add(d.alpha[k], pauli_tensor(k + 1, 0));
    add(d.beta[k], pauli_tensor(0, k + 1));
    for (int l = 0; l < 3; ++l) add(d.correlation[k][l], pauli_tensor(k + 1, l + 1));
  }
  return m;
}

Mat4 passive_flip(const Mat4& m) {
  PauliDecomposition d = pauli_decompose(m);
  for (int k = 0; k < 3; ++k) {
    d.beta[k] = -d.beta[k];
    for (int l = 0; l < 3; ++l) d.correlation[k][l] = -d.correlation[k][l];
  }
  return pauli_reconstruct(d);
}

Mat4 partial_transpose(const Mat4& m, int subsystem) {
  if (subsystem != 1 && subsystem != 2) {
    throw std::invalid_argument("partial_transpose: subsystem must be 1 or 2");
  }
  Mat4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) {
          if (subsystem == 2) {
            out(2 * i + j, 2 * k + l) = m(2 * i + l, 2 * k + j);
          } else {
            out(2 * i + j, 2 * k + l) = m(2 * k + j, 2 * i + l);
          }
        }
  return out;
}

double negativity(const Mat4& m) {
  require_hermitian(m, "negativity");
  if (std::abs(m.trace().real() - 1.0) > 1e-8) {
    throw std::invalid_argument("negativity: matrix does not have unit trace");
  }
  return hermitian_eigen(partial_transpose(m, 2)).eigenvalues[0];
}

ReflectionCheck reflection_identity_check(double a0, const std::array<double, 3>& a,
                                          double b0, const std::array<double, 3>& b) {
  const Mat2 first = operator_from_bloch(a0, a);
  const Mat2 second = operator_from_bloch(b0, b);
  const Mat4 transposed = partial_transpose(kron(first, second), 2);

  ReflectionCheck best;
  best.residual = -1.0;
  for (int c = 0; c < 3; ++c) {
    std::array<double, 3> flipped = b;
    flipped[c] -= 2.0 * b[c];
    const double r = max_abs_diff(transposed, kron(first, operator_from_bloch(b0, flipped)));
    if (best.residual < 0.0 || r < best.residual) {
      best.residual = r;
      best.matched_component = c;
    }
  }
  return best;
}

MirrorFlipResult mirror_plus_rotation_flip(const TwoQubitState& psi) {
  require_normalized(psi, "mirror_plus_rotation_flip");

  // The computational-basis transpose reflects the second Bloch vector
  // through the x-z plane; the compensating pi rotation is about y.
  Mat2 rot;  // exp(-i pi sigma_y / 2)
  rot(0, 1) = -1.0;
  rot(1, 0) = 1.0;
  const Mat4 lift = kron(Mat2::identity(), rot);

  MirrorFlipResult res;
  res.output = lift * partial_transpose(pure_density(psi), 2) * lift.adjoint();

  const auto eig = hermitian_eigen(res.output);
  res.min_eigenvalue = eig.eigenvalues[0];
  res.is_state =
      res.min_eigenvalue >= -1e-10 && std::abs(eig.eigenvalues[3] - 1.0) <= 1e-10;
  if (res.is_state) {
    for (int r = 0; r < 4; ++r) res.state.c[r] = eig.eigenvectors(r, 3);
  }
  return res;
}

NonProductBasisError::NonProductBasisError(double certificate_)
    : std::invalid_argument(
          "basis contains an entangled vector (largest concurrence " +
          std::to_string(certificate_) + ")"),
      certificate(certificate_) {}

ProductEquivalenceReport passive_flip_equivalence_product(
    const ProjectiveMeasurement& m) {
  double certificate = 0.0;
  for (const auto& b : m.basis) {
    const auto sv = schmidt_values(b);
    certificate = std::max(certificate, 2.0 * sv[0] * sv[1]);
  }
  if (certificate > 1e-10) throw NonProductBasisError(certificate);

  ProjectiveMeasurement flipped = m;
  flipped.label = m.label + " (second factor flipped)";
  for (int j = 0; j < 4; ++j) {
    // Factor b = u (x) w from the amplitude matrix, then flip w.
    const auto& c = m.basis[j].c;
    const double row0 = std::norm(c[0]) + std::norm(c[1]);
    const double row1 = std::norm(c[2]) + std::norm(c[3]);
    Spinor w = row0 >= row1 ? Spinor{c[0], c[1]} : Spinor{c[2], c[3]};
    const double wn = std::sqrt(norm_sq(w));
    w.a0 /= wn;
    w.a1 /= wn;
    Spinor u{c[0] * std::conj(w.a0) + c[1] * std::conj(w.a1),
             c[2] * std::conj(w.a0) + c[3] * std::conj(w.a1)};
    const double un = std::sqrt(norm_sq(u));
    u.a0 /= un;
    u.a1 /= un;
    flipped.basis[j] = tensor(u, antiunitary_flip(w));
  }

  ProductEquivalenceReport rep;
  rep.fidelity_parallel =
      fidelity_exact(m, {Pairing::parallel, Prior::uniform_sphere()}).value;
  rep.fidelity_antiparallel_flipped =
      fidelity_exact(flipped, {Pairing::antiparallel, Prior::uniform_sphere()}).value;
  return rep;
}

}  // namespace dirq
