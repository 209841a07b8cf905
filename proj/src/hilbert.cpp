#include "dirq/hilbert.hpp"

#include <algorithm>
#include <cmath>

namespace dirq {

double norm(const Direction& n) { return std::sqrt(dot(n, n)); }

bool is_unit(const Direction& n, double tol) {
  return std::abs(dot(n, n) - 1.0) <= tol;
}

void require_unit(const Direction& n, const char* what) {
  if (!is_unit(n)) {
    throw std::invalid_argument(std::string(what) + ": direction is not unit length");
  }
}

Direction normalized(const Direction& n) {
  const double r = norm(n);
  if (r < 1e-300) throw std::invalid_argument("normalized: zero direction");
  return {n.x / r, n.y / r, n.z / r};
}

cplx inner(const Spinor& a, const Spinor& b) {
  return std::conj(a.a0) * b.a0 + std::conj(a.a1) * b.a1;
}

cplx inner(const TwoQubitState& a, const TwoQubitState& b) {
  cplx s{};
  for (int k = 0; k < 4; ++k) s += std::conj(a.c[k]) * b.c[k];
  return s;
}

double norm_sq(const Spinor& s) { return std::norm(s.a0) + std::norm(s.a1); }

double norm_sq(const TwoQubitState& s) {
  double r = 0.0;
  for (const auto& v : s.c) r += std::norm(v);
  return r;
}

void require_normalized(const Spinor& s, const char* what) {
  if (std::abs(norm_sq(s) - 1.0) > kUnitTol) {
    throw std::invalid_argument(std::string(what) + ": spinor is not normalized");
  }
}

void require_normalized(const TwoQubitState& s, const char* what) {
  if (std::abs(norm_sq(s) - 1.0) > kUnitTol) {
    throw std::invalid_argument(std::string(what) + ": state is not normalized");
  }
}

Spinor bloch_to_spinor(const Direction& n, double phase) {
  require_unit(n, "bloch_to_spinor");
  const cplx g = std::polar(1.0, phase);
  if (n.z <= -1.0 + 1e-15) {
    return {cplx{0.0, 0.0}, g};  // azimuth undefined; pinned to (0, 1)
  }
  const double z = std::clamp(n.z, -1.0, 1.0);
  const double ct = std::sqrt((1.0 + z) / 2.0);
  const double st = std::sqrt((1.0 - z) / 2.0);
  const double azimuth = std::atan2(n.y, n.x);
  return {g * ct, g * std::polar(st, azimuth)};
}

Direction spinor_to_bloch(const Spinor& s) {
  require_normalized(s, "spinor_to_bloch");
  const cplx t = std::conj(s.a0) * s.a1;
  return {2.0 * t.real(), 2.0 * t.imag(), std::norm(s.a0) - std::norm(s.a1)};
}

TwoQubitState tensor(const Spinor& a, const Spinor& b) {
  return {{a.a0 * b.a0, a.a0 * b.a1, a.a1 * b.a0, a.a1 * b.a1}};
}

TwoQubitState singlet() {
  const double r = 1.0 / std::sqrt(2.0);
  return {{cplx{}, cplx{r, 0.0}, cplx{-r, 0.0}, cplx{}}};
}

std::array<double, 2> schmidt_values(const TwoQubitState& s) {
  // Singular values of the 2x2 amplitude matrix M with M(i, j) = c_{ij}.
  const double t = norm_sq(s);  // tr(M M^dag)
  const cplx det = s.c[0] * s.c[3] - s.c[1] * s.c[2];
  const double d = std::abs(det);
  const double disc = std::max(0.0, t * t - 4.0 * d * d);
  const double hi = (t + std::sqrt(disc)) / 2.0;
  const double lo = std::max(0.0, t - hi);
  return {std::sqrt(hi), std::sqrt(lo)};
}

const Mat2& pauli(int k) {
  static const std::array<Mat2, 3> sigma = [] {
    std::array<Mat2, 3> s;
    s[0](0, 1) = 1.0;
    s[0](1, 0) = 1.0;
    s[1](0, 1) = cplx{0.0, -1.0};
    s[1](1, 0) = cplx{0.0, 1.0};
    s[2](0, 0) = 1.0;
    s[2](1, 1) = -1.0;
    return s;
  }();
  return sigma.at(static_cast<std::size_t>(k));
}

Mat4 kron(const Mat2& a, const Mat2& b) {
  Mat4 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) r(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return r;
}

Mat2 pure_density(const Spinor& psi) {
  require_normalized(psi, "pure_density");
  Mat2 r;
  const std::array<cplx, 2> v{psi.a0, psi.a1};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r(i, j) = v[i] * std::conj(v[j]);
  return r;
}

Mat4 pure_density(const TwoQubitState& psi) {
  require_normalized(psi, "pure_density");
  Mat4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r(i, j) = psi.c[i] * std::conj(psi.c[j]);
  return r;
}

void require_hermitian(const Mat2& m, const char* what, double tol) {
  if (m.hermiticity_residual() > tol) {
    throw std::invalid_argument(std::string(what) + ": matrix is not Hermitian");
  }
}

void require_hermitian(const Mat4& m, const char* what, double tol) {
  if (m.hermiticity_residual() > tol) {
    throw std::invalid_argument(std::string(what) + ": matrix is not Hermitian");
  }
}

EigenDecomposition<2> hermitian_eigen(const Mat2& m) {
  require_hermitian(m, "hermitian_eigen");
  const double a = m(0, 0).real();
  const double d = m(1, 1).real();
  const cplx b = m(0, 1);
  const double ab = std::abs(b);

  EigenDecomposition<2> out;
  if (ab < 1e-300) {
    const bool swap = a > d;
    out.eigenvalues = {swap ? d : a, swap ? a : d};
    out.eigenvectors(0, swap ? 1 : 0) = 1.0;
    out.eigenvectors(1, swap ? 0 : 1) = 1.0;
    return out;
  }
  const double mean = (a + d) / 2.0;
  const double r = std::hypot((a - d) / 2.0, ab);
  out.eigenvalues = {mean - r, mean + r};
  for (int k = 0; k < 2; ++k) {
    // (b, lambda - a) solves the eigenproblem; nonzero since |b| > 0.
    const cplx v0 = b;
    const cplx v1 = cplx{out.eigenvalues[k] - a, 0.0};
    const double nn = std::sqrt(std::norm(v0) + std::norm(v1));
    out.eigenvectors(0, k) = v0 / nn;
    out.eigenvectors(1, k) = v1 / nn;
  }
  return out;
}

namespace {

double off_diagonal_norm(const Mat4& a) {
  double s = 0.0;
  for (int p = 0; p < 4; ++p)
    for (int q = 0; q < 4; ++q)
      if (p != q) s += std::norm(a(p, q));
  return std::sqrt(s);
}

}  // namespace

EigenDecomposition<4> hermitian_eigen(const Mat4& m) {
  require_hermitian(m, "hermitian_eigen");
  Mat4 a = m;
  Mat4 v = Mat4::identity();
  const double scale = std::max(1.0, a.frobenius_norm());

  for (int sweep = 0; sweep < 60; ++sweep) {
    if (off_diagonal_norm(a) <= 1e-12 * scale) break;
    for (int p = 0; p < 3; ++p) {
      for (int q = p + 1; q < 4; ++q) {
        const cplx apq = a(p, q);
        const double abs_pq = std::abs(apq);
        if (abs_pq <= 1e-18 * scale) continue;

        const cplx u = apq / abs_pq;
        const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * abs_pq);
        const double t =
            (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // a <- J^dag a J with the plane rotation J(p,p)=c, J(p,q)=s u,
        // J(q,p)=-s conj(u), J(q,q)=c; v accumulates J on the right.
        for (int k = 0; k < 4; ++k) {
          const cplx akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * std::conj(u) * akq;
          a(k, q) = s * u * akp + c * akq;
        }
        for (int k = 0; k < 4; ++k) {
          const cplx apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * u * aqk;
          a(q, k) = s * std::conj(u) * apk + c * aqk;
        }
        for (int k = 0; k < 4; ++k) {
          const cplx vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * std::conj(u) * vkq;
          v(k, q) = s * u * vkp + c * vkq;
        }
      }
    }
  }

  std::array<int, 4> order{0, 1, 2, 3};
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });

  EigenDecomposition<4> out;
  for (int k = 0; k < 4; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    for (int r = 0; r < 4; ++r) out.eigenvectors(r, k) = v(r, order[k]);
  }
  return out;
}

}  // namespace dirq
