#pragma once

// Real/imaginary phase split of a spinor, sums of same-family spinors, and
// the composition-table and class-6 sweeps built on them.

#include "lounesto/classification.hpp"
#include "lounesto/spinor.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lounesto {

template <typename Real> struct SplitResult {
  DiracSpinor<Real> whole;
  std::optional<DiracSpinor<Real>> part_real; ///< phases (Re a, Re b)
  std::optional<DiracSpinor<Real>> part_imag; ///< phases (i Im a, i Im b)
  LounestoClass class_whole = LounestoClass::Null;
  LounestoClass class_real = LounestoClass::Null;
  LounestoClass class_imag = LounestoClass::Null;
  Real recombination_residual = 0; ///< ||whole - (real + imag)|| / ||whole||

  /// One of the parts has an all-zero phase pair.
  bool degenerate() const { return !part_real || !part_imag; }
};

template <typename Real>
SplitResult<Real> split(const SpinorSpec<Real> &spec,
                        const TolerancePolicy &tol = {}) {
  SplitResult<Real> r;
  r.whole = build(spec);
  r.class_whole = classify(r.whole, tol);

  auto part = [&](const PhasePair<Real> &phases)
      -> std::optional<DiracSpinor<Real>> {
    if (phases.is_zero())
      return std::nullopt;
    return build(spec.with_phases(phases));
  };
  r.part_real = part(spec.phases.real_part());
  r.part_imag = part(spec.phases.imag_part());
  r.class_real = r.part_real ? classify(*r.part_real, tol) : LounestoClass::Null;
  r.class_imag = r.part_imag ? classify(*r.part_imag, tol) : LounestoClass::Null;

  Spinor4<Real> sum = Spinor4<Real>::Zero();
  if (r.part_real)
    sum += r.part_real->amplitudes;
  if (r.part_imag)
    sum += r.part_imag->amplitudes;
  r.recombination_residual = (r.whole.amplitudes - sum).norm() / r.whole.norm();
  return r;
}

template <typename Real> struct ComposeResult {
  DiracSpinor<Real> sum;
  LounestoClass class_sum = LounestoClass::Null;
  LounestoClass class_left = LounestoClass::Null;
  LounestoClass class_right = LounestoClass::Null;
};

/// psi(a) + psi(b) for two specs that differ only in their phases.
template <typename Real>
ComposeResult<Real> compose(const SpinorSpec<Real> &a,
                            const SpinorSpec<Real> &b,
                            const TolerancePolicy &tol = {}) {
  if (!same_family(a, b))
    throw FamilyMismatchError(
        "compose needs equal kind, mass, angles, momentum and sign");
  const DiracSpinor<Real> left = build(a);
  const DiracSpinor<Real> right = build(b);
  ComposeResult<Real> r;
  r.sum = left + right;
  r.class_sum = classify(r.sum, tol);
  r.class_left = classify(left, tol);
  r.class_right = classify(right, tol);
  return r;
}

/// Vanishing pattern of the whole spinor next to its two split parts.
struct UnionReport {
  Support whole;
  Support real;
  Support imag;
  Support parts_union;
  LounestoClass class_whole = LounestoClass::Null;
  LounestoClass class_real = LounestoClass::Null;
  LounestoClass class_imag = LounestoClass::Null;
};

template <typename Real>
UnionReport gamma_union_report(const SplitResult<Real> &s,
                               const TolerancePolicy &tol = {}) {
  auto of = [&](const std::optional<DiracSpinor<Real>> &p) {
    return p ? support(bilinears(p->amplitudes), tol) : Support{};
  };
  UnionReport r;
  r.whole = support(bilinears(s.whole.amplitudes), tol);
  r.real = of(s.part_real);
  r.imag = of(s.part_imag);
  r.parts_union = r.real | r.imag;
  r.class_whole = s.class_whole;
  r.class_real = s.class_real;
  r.class_imag = s.class_imag;
  return r;
}

/// "{sigma,omega,K,S}"-style rendering of a support set.
std::string render_support(const Support &s);
std::string render(const UnionReport &r);

// ---------------------------------------------------------------------------
// Sweeps (double precision).

enum class Sector { Regular, Singular };

/// One row of the regular (4 rows) or singular (10 rows) composition table.
struct CompositionRow {
  LounestoClass target_class = LounestoClass::Null;
  LounestoClass left_class = LounestoClass::Null;
  LounestoClass right_class = LounestoClass::Null;
  std::string phase_constraint_tag;
  std::string method; ///< "split" or "compose"
  std::uint64_t sample_count = 0;   ///< non-boundary draws
  std::uint64_t success_count = 0;
  std::uint64_t boundary_count = 0; ///< excluded draws
};

std::vector<CompositionRow>
composition_table(Sector sector, std::uint64_t samples, std::uint64_t seed,
                  const TolerancePolicy &tol = {},
                  const BoundaryPolicy &policy = {});

struct Class6Report {
  std::uint64_t trials = 0;
  std::uint64_t boundary_count = 0;
  std::uint64_t class6_sums = 0;
  std::uint64_t null_sums = 0;
  std::array<std::uint64_t, 7> sum_histogram{}; ///< indexed by LounestoClass
  std::uint64_t class6_splits = 0;
  std::uint64_t class6_splits_ok = 0; ///< parts {C6, Null} or {C6, C6}
};

Class6Report class6_search(std::uint64_t trials, std::uint64_t seed,
                           const TolerancePolicy &tol = {},
                           const BoundaryPolicy &policy = {});

} // namespace lounesto
