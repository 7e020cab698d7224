#pragma once

// Gamma-matrix conventions and the bilinear covariants of a Dirac 4-spinor.
//
// Conventions:
//   metric       (+,-,-,-)
//   basis        chiral, right-handed 2-block on top:
//                gamma^0 = [[0, 1], [1, 0]]
//                gamma^i = [[0, -sigma^i], [sigma^i, 0]]
//                gamma^5 = diag(+1, +1, -1, -1)
//   sigma        = psibar psi
//   omega        = i psibar gamma^5 psi
//   J^mu         = psibar gamma^mu psi
//   K^mu         = psibar gamma^5 gamma^mu psi
//   S^{mu nu}    = (i/2) psibar [gamma^mu, gamma^nu] psi
//
// With these choices gamma_mu p^mu = E [[0,1],[1,0]] + p [[0, s],[-s, 0]]
// where s = sigma.p_hat is the helicity operator.

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>

namespace lounesto {

template <typename Real> using Complex = std::complex<Real>;
template <typename Real> using Spinor4 = Eigen::Matrix<Complex<Real>, 4, 1>;
template <typename Real> using CoSpinor4 = Eigen::Matrix<Complex<Real>, 1, 4>;
template <typename Real> using Matrix4 = Eigen::Matrix<Complex<Real>, 4, 4>;
template <typename Real> using Matrix2 = Eigen::Matrix<Complex<Real>, 2, 2>;
template <typename Real> using Spinor2 = Eigen::Matrix<Complex<Real>, 2, 1>;

/// Contravariant components (t, x, y, z).
template <typename Real> using FourVector = Eigen::Matrix<Complex<Real>, 4, 1>;

/// Antisymmetric S^{mu nu}; only the six entries above the diagonal are
/// independent.
template <typename Real> using SpinTensor = Eigen::Matrix<Complex<Real>, 4, 4>;

template <typename Real> struct GammaBasis {
  std::array<Matrix4<Real>, 4> gamma; // gamma^0 .. gamma^3
  Matrix4<Real> gamma5;
  Matrix4<Real> identity;
};

/// Minkowski metric diagonal eta^{mu mu}.
template <typename Real> constexpr Real metric(int mu) {
  return mu == 0 ? Real(1) : Real(-1);
}

/// Pauli matrices sigma^1, sigma^2, sigma^3.
template <typename Real> std::array<Matrix2<Real>, 3> pauli() {
  using C = Complex<Real>;
  const C i(0, 1);
  std::array<Matrix2<Real>, 3> s;
  s[0] << C(0), C(1), C(1), C(0);
  s[1] << C(0), -i, i, C(0);
  s[2] << C(1), C(0), C(0), C(-1);
  return s;
}

/// sigma . n for a real 3-vector n.
template <typename Real>
Matrix2<Real> sigma_dot(const Eigen::Matrix<Real, 3, 1> &n) {
  const auto s = pauli<Real>();
  return n(0) * s[0] + n(1) * s[1] + n(2) * s[2];
}

template <typename Real> GammaBasis<Real> gamma_basis() {
  const Matrix2<Real> one = Matrix2<Real>::Identity();
  const auto s = pauli<Real>();

  GammaBasis<Real> g;
  g.identity = Matrix4<Real>::Identity();

  g.gamma[0].setZero();
  g.gamma[0].template topRightCorner<2, 2>() = one;
  g.gamma[0].template bottomLeftCorner<2, 2>() = one;

  for (int k = 0; k < 3; ++k) {
    auto &gk = g.gamma[static_cast<std::size_t>(k + 1)];
    gk.setZero();
    gk.template topRightCorner<2, 2>() = -s[static_cast<std::size_t>(k)];
    gk.template bottomLeftCorner<2, 2>() = s[static_cast<std::size_t>(k)];
  }

  g.gamma5.setZero();
  g.gamma5.template topLeftCorner<2, 2>() = one;
  g.gamma5.template bottomRightCorner<2, 2>() = -one;
  return g;
}

/// psibar = psi^dagger gamma^0.
template <typename Derived>
auto dirac_adjoint(const Eigen::MatrixBase<Derived> &psi) {
  using Real = typename Derived::RealScalar;
  static_assert(Derived::RowsAtCompileTime == 4 &&
                Derived::ColsAtCompileTime == 1);
  // gamma^0 swaps the chiral blocks.
  CoSpinor4<Real> row;
  row << std::conj(psi(2)), std::conj(psi(3)), std::conj(psi(0)),
      std::conj(psi(1));
  return row;
}

template <typename Real>
Complex<Real> minkowski_dot(const FourVector<Real> &a,
                            const FourVector<Real> &b) {
  return a(0) * b(0) - a(1) * b(1) - a(2) * b(2) - a(3) * b(3);
}

template <typename Real> struct BilinearSet {
  Complex<Real> sigma{};
  Complex<Real> omega{};
  FourVector<Real> J = FourVector<Real>::Zero();
  FourVector<Real> K = FourVector<Real>::Zero();
  SpinTensor<Real> S = SpinTensor<Real>::Zero();

  /// J^0; the positive quadratic scale used for every vanishing test.
  Real scale() const { return J(0).real(); }
};

template <typename Derived>
BilinearSet<typename Derived::RealScalar>
bilinears(const Eigen::MatrixBase<Derived> &psi) {
  using Real = typename Derived::RealScalar;
  using C = Complex<Real>;
  static const GammaBasis<Real> g = gamma_basis<Real>();
  const C i(0, 1);

  const Spinor4<Real> v = psi;
  const CoSpinor4<Real> bar = dirac_adjoint(v);

  BilinearSet<Real> b;
  b.sigma = (bar * v)(0);
  b.omega = i * (bar * g.gamma5 * v)(0);
  for (int mu = 0; mu < 4; ++mu) {
    const auto &gm = g.gamma[static_cast<std::size_t>(mu)];
    b.J(mu) = (bar * gm * v)(0);
    b.K(mu) = (bar * g.gamma5 * gm * v)(0);
  }
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = mu + 1; nu < 4; ++nu) {
      const auto &gm = g.gamma[static_cast<std::size_t>(mu)];
      const auto &gn = g.gamma[static_cast<std::size_t>(nu)];
      const Matrix4<Real> comm = gm * gn - gn * gm;
      const C s = (i / Real(2)) * (bar * comm * v)(0);
      b.S(mu, nu) = s;
      b.S(nu, mu) = -s;
    }
  }
  return b;
}

/// Fierz-Pauli-Kofink residuals.
template <typename Real> struct FpkResiduals {
  Real r1 = 0; ///< |J.J - (sigma^2 + omega^2)|
  Real r2 = 0; ///< |J.K|
  Real r3 = 0; ///< |K.K + (sigma^2 + omega^2)|

  Real max() const { return std::max({r1, r2, r3}); }
};

template <typename Real>
FpkResiduals<Real> fpk_residuals(const BilinearSet<Real> &b) {
  const Real s = b.sigma.real();
  const Real w = b.omega.real();
  const Real sq = s * s + w * w;
  FpkResiduals<Real> r;
  r.r1 = std::abs(minkowski_dot(b.J, b.J) - Complex<Real>(sq));
  r.r2 = std::abs(minkowski_dot(b.J, b.K));
  r.r3 = std::abs(minkowski_dot(b.K, b.K) + Complex<Real>(sq));
  return r;
}

} // namespace lounesto
