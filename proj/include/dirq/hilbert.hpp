#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>

namespace dirq {

using cplx = std::complex<double>;

/// Tolerance for unit-norm and unit-trace invariants on domain values.
inline constexpr double kUnitTol = 1e-12;

// ---------------------------------------------------------------------------
// Directions on the unit sphere
// ---------------------------------------------------------------------------

/// A point on the unit sphere. Encoded directions, guesses and measurement
/// axes are all Directions; every consumer requires |n| = 1 within kUnitTol.
struct Direction {
  double x = 0.0;
  double y = 0.0;
  double z = 1.0;
};

[[nodiscard]] inline double dot(const Direction& a, const Direction& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

[[nodiscard]] inline Direction operator-(const Direction& n) {
  return {-n.x, -n.y, -n.z};
}

[[nodiscard]] double norm(const Direction& n);
[[nodiscard]] bool is_unit(const Direction& n, double tol = kUnitTol);

/// Throws std::invalid_argument when |n| deviates from 1 by more than kUnitTol.
void require_unit(const Direction& n, const char* what);

/// Scales n to unit length. Throws on (numerically) zero input.
[[nodiscard]] Direction normalized(const Direction& n);

// ---------------------------------------------------------------------------
// Pure states
// ---------------------------------------------------------------------------

/// Pure state of one spin-1/2 in the (|0>, |1>) basis, |0> polarized along +z.
struct Spinor {
  cplx a0{1.0, 0.0};
  cplx a1{0.0, 0.0};
};

/// Pure state of two spin-1/2 systems. Amplitude order is computational:
/// c[0] = <00|psi>, c[1] = <01|psi>, c[2] = <10|psi>, c[3] = <11|psi>.
struct TwoQubitState {
  std::array<cplx, 4> c{};
};

[[nodiscard]] cplx inner(const Spinor& a, const Spinor& b);
[[nodiscard]] cplx inner(const TwoQubitState& a, const TwoQubitState& b);
[[nodiscard]] double norm_sq(const Spinor& s);
[[nodiscard]] double norm_sq(const TwoQubitState& s);

void require_normalized(const Spinor& s, const char* what);
void require_normalized(const TwoQubitState& s, const char* what);

/// Spinor polarized along n. Convention: with n = (sin t cos p, sin t sin p,
/// cos t), the result is e^{i phase} (cos t/2, e^{i p} sin t/2). The global
/// phase is explicit because downstream basis constructions need per-state
/// phase freedom. At the south pole, where p is undefined, the result is
/// pinned to e^{i phase} (0, 1).
[[nodiscard]] Spinor bloch_to_spinor(const Direction& n, double phase = 0.0);

/// Polarization direction n_k = <s| sigma_k |s> of a normalized spinor.
[[nodiscard]] Direction spinor_to_bloch(const Spinor& s);

/// Product state a (x) b with c_ij = a_i b_j.
[[nodiscard]] TwoQubitState tensor(const Spinor& a, const Spinor& b);

/// The singlet (|01> - |10>)/sqrt(2), invariant under joint rotations.
[[nodiscard]] TwoQubitState singlet();

/// Schmidt coefficients (descending, both >= 0, squares sum to 1) of a
/// normalized two-qubit pure state; the second is zero iff the state is a
/// product.
[[nodiscard]] std::array<double, 2> schmidt_values(const TwoQubitState& s);

// ---------------------------------------------------------------------------
// Small dense complex matrices
// ---------------------------------------------------------------------------

template <int N>
class Matrix {
 public:
  Matrix() = default;  // zero matrix

  static Matrix identity() {
    Matrix m;
    for (int k = 0; k < N; ++k) m(k, k) = cplx{1.0, 0.0};
    return m;
  }

  cplx& operator()(int r, int c) { return e_[static_cast<std::size_t>(r) * N + c]; }
  const cplx& operator()(int r, int c) const {
    return e_[static_cast<std::size_t>(r) * N + c];
  }

  Matrix& operator+=(const Matrix& o) {
    for (std::size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    for (std::size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
    return *this;
  }
  Matrix& operator*=(const cplx& s) {
    for (auto& v : e_) v *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const cplx& s, Matrix a) { return a *= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix r;
    for (int i = 0; i < N; ++i)
      for (int k = 0; k < N; ++k) {
        const cplx aik = a(i, k);
        if (aik == cplx{}) continue;
        for (int j = 0; j < N; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }

  [[nodiscard]] Matrix adjoint() const {
    Matrix r;
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) r(i, j) = std::conj((*this)(j, i));
    return r;
  }

  [[nodiscard]] cplx trace() const {
    cplx t{};
    for (int k = 0; k < N; ++k) t += (*this)(k, k);
    return t;
  }

  [[nodiscard]] double frobenius_norm() const {
    double s = 0.0;
    for (const auto& v : e_) s += std::norm(v);
    return std::sqrt(s);
  }

  /// Largest entrywise deviation from Hermitian symmetry.
  [[nodiscard]] double hermiticity_residual() const {
    double r = 0.0;
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j)
        r = std::max(r, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return r;
  }

 private:
  std::array<cplx, static_cast<std::size_t>(N) * N> e_{};
};

template <int N>
[[nodiscard]] double max_abs_diff(const Matrix<N>& a, const Matrix<N>& b) {
  double r = 0.0;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) r = std::max(r, std::abs(a(i, j) - b(i, j)));
  return r;
}

using Mat2 = Matrix<2>;
using Mat4 = Matrix<4>;

/// The Pauli matrix sigma_k, k in {0 = x, 1 = y, 2 = z}.
[[nodiscard]] const Mat2& pauli(int k);

/// Kronecker product of two single-qubit operators.
[[nodiscard]] Mat4 kron(const Mat2& a, const Mat2& b);

/// |psi><psi| of a normalized state; rank 1, trace 1, idempotent.
[[nodiscard]] Mat2 pure_density(const Spinor& psi);
[[nodiscard]] Mat4 pure_density(const TwoQubitState& psi);

void require_hermitian(const Mat2& m, const char* what, double tol = 1e-10);
void require_hermitian(const Mat4& m, const char* what, double tol = 1e-10);

// ---------------------------------------------------------------------------
// Hermitian eigendecomposition
// ---------------------------------------------------------------------------

template <int N>
struct EigenDecomposition {
  std::array<double, N> eigenvalues{};  // ascending
  Matrix<N> eigenvectors;               // column k pairs with eigenvalues[k]
};

/// Closed-form decomposition of a 2x2 Hermitian matrix.
[[nodiscard]] EigenDecomposition<2> hermitian_eigen(const Mat2& m);

/// Cyclic complex Jacobi decomposition of a 4x4 Hermitian matrix, iterated
/// until the off-diagonal norm falls below 1e-12 relative to the input scale.
[[nodiscard]] EigenDecomposition<4> hermitian_eigen(const Mat4& m);

}  // namespace dirq
