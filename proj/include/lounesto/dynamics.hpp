#pragma once

// Momentum-space Dirac operator and the test of which spinors satisfy
// (gamma_mu p^mu -/+ m) psi = 0.

#include "lounesto/classification.hpp"
#include "lounesto/clifford.hpp"
#include "lounesto/spinor.hpp"

namespace lounesto {

/// Relative residual below which a spinor is taken to satisfy the equation.
inline constexpr double kDiracRelTolerance = 1e-10;

/// gamma_mu p^mu = E [[0,1],[1,0]] + p [[0, s],[-s, 0]],  s = sigma.n.
template <typename Real>
Matrix4<Real> feynman_slash(Real energy, Real momentum,
                            const Eigen::Matrix<Real, 3, 1> &direction) {
  const Matrix2<Real> one = Matrix2<Real>::Identity();
  const Matrix2<Real> s = sigma_dot<Real>(direction);
  Matrix4<Real> out;
  out.template topLeftCorner<2, 2>().setZero();
  out.template bottomRightCorner<2, 2>().setZero();
  out.template topRightCorner<2, 2>() =
      Complex<Real>(energy) * one + Complex<Real>(momentum) * s;
  out.template bottomLeftCorner<2, 2>() =
      Complex<Real>(energy) * one - Complex<Real>(momentum) * s;
  return out;
}

/// ||(gamma_mu p^mu - m) psi||, or with +m for the antiparticle branch.
template <typename Real>
Real dirac_residual(const DiracSpinor<Real> &psi, Real energy, Real momentum,
                    Real mass, const Eigen::Matrix<Real, 3, 1> &direction,
                    RelativeSign branch = RelativeSign::Particle) {
  const Real shell = energy * energy - momentum * momentum - mass * mass;
  if (std::abs(shell) > Real(1e-9) * mass * mass)
    throw MassShellError("E^2 - p^2 - m^2 is not zero");
  const Real m = branch == RelativeSign::Particle ? mass : -mass;
  const Matrix4<Real> op =
      feynman_slash(energy, momentum, direction) -
      Complex<Real>(m) * Matrix4<Real>::Identity();
  return (op * psi.amplitudes).norm();
}

template <typename Real> struct DiracCheck {
  Real residual = 0;
  Real relative = 0; ///< residual / (m ||psi||)
  bool satisfies = false;
  LounestoClass class_of_input = LounestoClass::Null;
};

template <typename Real>
DiracCheck<Real> dynamics_check(const SpinorSpec<Real> &spec,
                                const TolerancePolicy &tol = {}) {
  const DiracSpinor<Real> psi = build(spec);
  const Real energy = std::hypot(spec.momentum, spec.mass);
  DiracCheck<Real> c;
  c.residual = dirac_residual(psi, energy, spec.momentum, spec.mass,
                              unit_direction(spec.theta, spec.phi), spec.sign);
  c.relative = c.residual / (spec.mass * psi.norm());
  c.satisfies = c.relative <= static_cast<Real>(kDiracRelTolerance);
  c.class_of_input = classify(psi, tol);
  return c;
}

} // namespace lounesto
