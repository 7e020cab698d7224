#pragma once

// Rest-frame single- and dual-helicity spinors and their Lorentz boost.

#include "lounesto/clifford.hpp"
#include "lounesto/errors.hpp"

#include <numbers>
#include <optional>
#include <string>
#include <string_view>

namespace lounesto {

enum class SpinorKind {
  SingleHelicityPlus,
  SingleHelicityMinus,
  DualHelicityPlus,
  DualHelicityMinus,
};

enum class Helicity { Plus, Minus };

/// phi_R(0) = +phi_L(0) for particles, -phi_L(0) for antiparticles.
enum class RelativeSign { Particle, Antiparticle };

inline bool is_single_helicity(SpinorKind k) {
  return k == SpinorKind::SingleHelicityPlus ||
         k == SpinorKind::SingleHelicityMinus;
}

inline bool is_dual_helicity(SpinorKind k) { return !is_single_helicity(k); }

inline Helicity helicity_of(SpinorKind k) {
  return (k == SpinorKind::SingleHelicityPlus ||
          k == SpinorKind::DualHelicityPlus)
             ? Helicity::Plus
             : Helicity::Minus;
}

inline std::string_view to_string(SpinorKind k) {
  switch (k) {
  case SpinorKind::SingleHelicityPlus:
    return "single+";
  case SpinorKind::SingleHelicityMinus:
    return "single-";
  case SpinorKind::DualHelicityPlus:
    return "dual+";
  case SpinorKind::DualHelicityMinus:
    return "dual-";
  }
  return "?";
}

inline std::string_view to_string(RelativeSign s) {
  return s == RelativeSign::Particle ? "particle" : "antiparticle";
}

inline std::optional<SpinorKind> parse_kind(std::string_view s) {
  if (s == "single+")
    return SpinorKind::SingleHelicityPlus;
  if (s == "single-")
    return SpinorKind::SingleHelicityMinus;
  if (s == "dual+")
    return SpinorKind::DualHelicityPlus;
  if (s == "dual-")
    return SpinorKind::DualHelicityMinus;
  return std::nullopt;
}

inline std::optional<RelativeSign> parse_sign(std::string_view s) {
  if (s == "particle")
    return RelativeSign::Particle;
  if (s == "antiparticle")
    return RelativeSign::Antiparticle;
  return std::nullopt;
}

template <typename Real> struct PhasePair {
  Complex<Real> alpha{};
  Complex<Real> beta{};

  bool is_zero() const {
    return alpha == Complex<Real>(0) && beta == Complex<Real>(0);
  }
  PhasePair real_part() const { return {alpha.real(), beta.real()}; }
  PhasePair imag_part() const {
    return {Complex<Real>(0, alpha.imag()), Complex<Real>(0, beta.imag())};
  }
  friend PhasePair operator+(const PhasePair &a, const PhasePair &b) {
    return {a.alpha + b.alpha, a.beta + b.beta};
  }
  friend bool operator==(const PhasePair &, const PhasePair &) = default;
};

template <typename Real> struct SpinorSpec {
  SpinorKind kind = SpinorKind::SingleHelicityPlus;
  Real mass = 1;
  Real theta = 0;
  Real phi = 0;
  Real momentum = 0;
  RelativeSign sign = RelativeSign::Particle;
  PhasePair<Real> phases{Complex<Real>(1), Complex<Real>(1)};

  SpinorSpec with_phases(const PhasePair<Real> &p) const {
    SpinorSpec s = *this;
    s.phases = p;
    return s;
  }
};

/// True when two specs differ at most in their phases.
template <typename Real>
bool same_family(const SpinorSpec<Real> &a, const SpinorSpec<Real> &b) {
  return a.kind == b.kind && a.mass == b.mass && a.theta == b.theta &&
         a.phi == b.phi && a.momentum == b.momentum && a.sign == b.sign;
}

template <typename Real>
void validate(const SpinorSpec<Real> &s) {
  constexpr Real pi = std::numbers::pi_v<Real>;
  if (!(s.mass > 0))
    throw DomainError("mass must be positive");
  if (!(s.momentum >= 0) || !std::isfinite(s.momentum))
    throw DomainError("momentum magnitude must be finite and nonnegative");
  if (!(s.theta >= 0 && s.theta <= pi))
    throw DomainError("theta must lie in [0, pi]");
  if (!(s.phi >= 0 && s.phi < 2 * pi))
    throw DomainError("phi must lie in [0, 2pi)");
}

/// Four amplitudes in the chiral basis, (upper 2-block, lower 2-block).
template <typename Real> struct DiracSpinor {
  Spinor4<Real> amplitudes = Spinor4<Real>::Zero();
  std::optional<SpinorSpec<Real>> provenance;

  Real norm() const { return amplitudes.norm(); }
  bool is_zero() const { return amplitudes.isZero(0); }
  auto upper() const { return amplitudes.template head<2>(); }
  auto lower() const { return amplitudes.template tail<2>(); }

  friend DiracSpinor operator+(const DiracSpinor &a, const DiracSpinor &b) {
    return {a.amplitudes + b.amplitudes, std::nullopt};
  }
  friend DiracSpinor operator-(const DiracSpinor &a, const DiracSpinor &b) {
    return {a.amplitudes - b.amplitudes, std::nullopt};
  }
  friend DiracSpinor operator*(const Complex<Real> &c, const DiracSpinor &a) {
    return {c * a.amplitudes, std::nullopt};
  }
};

template <typename Real>
BilinearSet<Real> bilinears(const DiracSpinor<Real> &psi) {
  return bilinears(psi.amplitudes);
}

/// Unit vector (sin t cos f, sin t sin f, cos t).
template <typename Real>
Eigen::Matrix<Real, 3, 1> unit_direction(Real theta, Real phi) {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
          std::cos(theta)};
}

/// Helicity eigenstate of sigma.p_hat with eigenvalue +1 or -1, normalised
/// to sqrt(m).
template <typename Real>
Spinor2<Real> two_component(Real theta, Real phi, Helicity h, Real mass) {
  constexpr Real pi = std::numbers::pi_v<Real>;
  if (!(mass > 0))
    throw DomainError("mass must be positive");
  if (!(theta >= 0 && theta <= pi))
    throw DomainError("theta must lie in [0, pi]");
  if (!(phi >= 0 && phi < 2 * pi))
    throw DomainError("phi must lie in [0, 2pi)");

  const Real root_m = std::sqrt(mass);
  const Real c = std::cos(theta / 2);
  const Real s = std::sin(theta / 2);
  const Complex<Real> down = std::polar(Real(1), -phi / 2);
  const Complex<Real> up = std::polar(Real(1), phi / 2);

  Spinor2<Real> out;
  if (h == Helicity::Plus)
    out << c * down, s * up;
  else
    out << -s * down, c * up;
  return root_m * out;
}

/// Wigner time-reversal matrix [[0, -1], [1, 0]].
template <typename Real> Matrix2<Real> wigner_theta() {
  Matrix2<Real> t;
  t << Complex<Real>(0), Complex<Real>(-1), Complex<Real>(1), Complex<Real>(0);
  return t;
}

template <typename Real>
DiracSpinor<Real> build_rest(const SpinorSpec<Real> &spec) {
  validate(spec);
  if (spec.phases.is_zero())
    throw NullSpinorError("both phase factors are zero");

  const auto &[alpha, beta] = spec.phases;
  const Real sign = spec.sign == RelativeSign::Particle ? Real(1) : Real(-1);
  const Spinor2<Real> phi_l =
      two_component(spec.theta, spec.phi, helicity_of(spec.kind), spec.mass);

  DiracSpinor<Real> psi;
  psi.provenance = spec;
  if (is_single_helicity(spec.kind)) {
    // phi_R(0) = +-phi_L(0)
    psi.amplitudes.template head<2>() = alpha * phi_l;
    psi.amplitudes.template tail<2>() = (sign * beta) * phi_l;
  } else {
    const Spinor2<Real> flipped = wigner_theta<Real>() * phi_l.conjugate();
    psi.amplitudes.template head<2>() = alpha * flipped;
    psi.amplitudes.template tail<2>() = (sign * beta) * phi_l;
  }
  return psi;
}

/// Rest-frame-to-momentum boost along the helicity axis (theta, phi).
template <typename Real>
Matrix4<Real> boost_matrix(Real momentum, Real mass, Real theta, Real phi) {
  const Real energy = std::hypot(momentum, mass);
  const Real norm = std::sqrt((energy + mass) / (2 * mass));
  const Matrix2<Real> one = Matrix2<Real>::Identity();
  const Matrix2<Real> helicity =
      sigma_dot<Real>(unit_direction(theta, phi)) *
      Complex<Real>(momentum / (energy + mass));

  Matrix4<Real> b = Matrix4<Real>::Zero();
  b.template topLeftCorner<2, 2>() = norm * (one + helicity);
  b.template bottomRightCorner<2, 2>() = norm * (one - helicity);
  return b;
}

template <typename Real>
DiracSpinor<Real> boost(const DiracSpinor<Real> &rest, Real momentum,
                        Real mass, Real theta, Real phi) {
  if (!(mass > 0))
    throw DomainError("mass must be positive");
  if (!(momentum >= 0))
    throw DomainError("momentum magnitude must be nonnegative");
  if (momentum == 0)
    return rest;
  DiracSpinor<Real> out;
  out.amplitudes = boost_matrix(momentum, mass, theta, phi) * rest.amplitudes;
  out.provenance = rest.provenance;
  return out;
}

/// Boost using the momentum and direction stored in the spec.
template <typename Real>
DiracSpinor<Real> boost(const DiracSpinor<Real> &rest,
                        const SpinorSpec<Real> &spec) {
  return boost(rest, spec.momentum, spec.mass, spec.theta, spec.phi);
}

/// build_rest followed by the boost to the spec's momentum.
template <typename Real>
DiracSpinor<Real> build(const SpinorSpec<Real> &spec) {
  return boost(build_rest(spec), spec);
}

} // namespace lounesto
