#pragma once

// Lounesto classes from bilinear vanishing patterns, and the same classes
// predicted directly from the phase factors of a factory spinor.
//
//   regular   C1: sigma != 0, omega != 0
//             C2: sigma != 0, omega  = 0
//             C3: sigma  = 0, omega != 0
//   singular  C4: K != 0, S != 0      (sigma = omega = 0)
//             C5: K  = 0, S != 0
//             C6: K != 0, S  = 0

#include "lounesto/clifford.hpp"
#include "lounesto/errors.hpp"
#include "lounesto/spinor.hpp"

#include <array>
#include <string>
#include <string_view>

namespace lounesto {

enum class LounestoClass { C1, C2, C3, C4, C5, C6, Null };

inline constexpr std::array<LounestoClass, 6> kAllClasses = {
    LounestoClass::C1, LounestoClass::C2, LounestoClass::C3,
    LounestoClass::C4, LounestoClass::C5, LounestoClass::C6};

inline std::string_view to_string(LounestoClass c) {
  switch (c) {
  case LounestoClass::C1:
    return "1";
  case LounestoClass::C2:
    return "2";
  case LounestoClass::C3:
    return "3";
  case LounestoClass::C4:
    return "4";
  case LounestoClass::C5:
    return "5";
  case LounestoClass::C6:
    return "6";
  case LounestoClass::Null:
    return "Null";
  }
  return "?";
}

inline bool is_regular(LounestoClass c) {
  return c == LounestoClass::C1 || c == LounestoClass::C2 ||
         c == LounestoClass::C3;
}

inline bool is_singular(LounestoClass c) {
  return c == LounestoClass::C4 || c == LounestoClass::C5 ||
         c == LounestoClass::C6;
}

/// A bilinear quantity vanishes when its magnitude is at most rel * J^0.
struct TolerancePolicy {
  double rel = 1e-9;
};

/// Phase predicates closer to zero than `margin` (but above `noise_floor`,
/// below which they are rounding residue of an exact zero) are boundary
/// draws: floating point cannot decide which side of the predicate they are on.
struct BoundaryPolicy {
  double margin = 1e-6;
  double noise_floor = 1e-12;
};

inline void validate(const TolerancePolicy &tol) {
  if (!(tol.rel > 0))
    throw DomainError("relative tolerance must be positive");
}

/// Which of sigma, omega, K, S are nonzero under the tolerance.
struct Support {
  bool sigma = false;
  bool omega = false;
  bool K = false;
  bool S = false;

  friend bool operator==(const Support &, const Support &) = default;
  Support operator|(const Support &o) const {
    return {sigma || o.sigma, omega || o.omega, K || o.K, S || o.S};
  }
  bool empty() const { return !(sigma || omega || K || S); }
};

template <typename Real>
Support support(const BilinearSet<Real> &b, const TolerancePolicy &tol) {
  const Real scale = b.scale();
  if (!(scale > 0))
    return {};
  const Real thr = static_cast<Real>(tol.rel) * scale;
  return {std::abs(b.sigma) > thr, std::abs(b.omega) > thr, b.K.norm() > thr,
          b.S.norm() > thr};
}

template <typename Real>
LounestoClass classify(const BilinearSet<Real> &b,
                       const TolerancePolicy &tol = {}) {
  validate(tol);
  if (!(b.scale() > 0))
    return LounestoClass::Null;
  const Support s = support(b, tol);
  if (s.sigma || s.omega) {
    if (s.sigma && s.omega)
      return LounestoClass::C1;
    return s.sigma ? LounestoClass::C2 : LounestoClass::C3;
  }
  if (s.K && s.S)
    return LounestoClass::C4;
  if (s.S)
    return LounestoClass::C5;
  if (s.K)
    return LounestoClass::C6;
  throw AnomalyError("sigma, omega, K and S all vanish for a nonzero spinor");
}

template <typename Real>
LounestoClass classify(const DiracSpinor<Real> &psi,
                       const TolerancePolicy &tol = {}) {
  if (psi.is_zero())
    return LounestoClass::Null;
  return classify(bilinears(psi.amplitudes), tol);
}

/// Normalised phase predicates of a factory spec. Each value is the rest-frame
/// bilinear it controls divided by J^0, so a zero here is a zero there.
template <typename Real> struct PhasePredicates {
  Real alpha_weight = 0; ///< |alpha|^2 / (|alpha|^2 + |beta|^2)
  Real beta_weight = 0;  ///< |beta|^2 / (|alpha|^2 + |beta|^2)
  Real re_product = 0;   ///< 2 Re(alpha* beta) / (...)   single helicity only
  Real im_product = 0;   ///< 2 Im(alpha* beta) / (...)   single helicity only
  Real weight_gap = 0;   ///< (|alpha|^2 - |beta|^2)/(...) dual helicity only
  bool single = true;
};

template <typename Real>
PhasePredicates<Real> phase_predicates(const SpinorSpec<Real> &spec) {
  if (spec.phases.is_zero())
    throw NullSpinorError("both phase factors are zero");
  const Complex<Real> alpha = spec.phases.alpha;
  const Complex<Real> beta =
      spec.sign == RelativeSign::Particle ? spec.phases.beta
                                          : -spec.phases.beta;
  const Real a2 = std::norm(alpha);
  const Real b2 = std::norm(beta);
  const Real total = a2 + b2;

  PhasePredicates<Real> p;
  p.single = is_single_helicity(spec.kind);
  p.alpha_weight = a2 / total;
  p.beta_weight = b2 / total;
  if (p.single) {
    const Complex<Real> prod = std::conj(alpha) * beta;
    p.re_product = 2 * prod.real() / total;
    p.im_product = 2 * prod.imag() / total;
  } else {
    p.weight_gap = (a2 - b2) / total;
  }
  return p;
}

/// True when any predicate deciding this spec's class sits in the
/// indeterminate band between noise_floor and margin.
template <typename Real>
bool is_boundary(const SpinorSpec<Real> &spec,
                 const BoundaryPolicy &policy = {}) {
  const auto p = phase_predicates(spec);
  auto band = [&](Real v) {
    const Real a = std::abs(v);
    return a > static_cast<Real>(policy.noise_floor) &&
           a < static_cast<Real>(policy.margin);
  };
  if (band(p.alpha_weight) || band(p.beta_weight))
    return true;
  if (p.single)
    return band(p.re_product) || band(p.im_product);
  return band(p.weight_gap);
}

template <typename Real>
LounestoClass predict_class_from_phases(const SpinorSpec<Real> &spec,
                                        const TolerancePolicy &tol = {}) {
  validate(tol);
  const auto p = phase_predicates(spec);
  const Real rel = static_cast<Real>(tol.rel);
  auto zero = [rel](Real v) { return std::abs(v) <= rel; };

  if (zero(p.alpha_weight) != zero(p.beta_weight))
    return LounestoClass::C6;
  if (p.single) {
    const bool re = !zero(p.re_product);
    const bool im = !zero(p.im_product);
    if (re && im)
      return LounestoClass::C1;
    return re ? LounestoClass::C2 : LounestoClass::C3;
  }
  return zero(p.weight_gap) ? LounestoClass::C5 : LounestoClass::C4;
}

struct Crosscheck {
  LounestoClass predicted = LounestoClass::Null;
  LounestoClass classified = LounestoClass::Null;
  bool agree = false;
  bool boundary = false;
};

template <typename Real>
Crosscheck crosscheck(const SpinorSpec<Real> &spec,
                      const TolerancePolicy &tol = {},
                      const BoundaryPolicy &policy = {}) {
  Crosscheck c;
  c.classified = classify(build(spec), tol);
  c.predicted = predict_class_from_phases(spec, tol);
  c.agree = c.predicted == c.classified;
  c.boundary = is_boundary(spec, policy);
  return c;
}

} // namespace lounesto
