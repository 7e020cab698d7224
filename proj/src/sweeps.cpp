#include "lounesto/sweeps.hpp"

#include "lounesto/dynamics.hpp"
#include "lounesto/sampling.hpp"
#include "lounesto/split.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace lounesto {

std::string_view to_string(DiracFamily f) {
  switch (f) {
  case DiracFamily::C2Equal:
    return "c2-equal";
  case DiracFamily::C2Unequal:
    return "c2-unequal";
  case DiracFamily::C1:
    return "c1";
  case DiracFamily::C3:
    return "c3";
  case DiracFamily::C6Single:
    return "c6-single";
  case DiracFamily::C4:
    return "c4";
  case DiracFamily::C5:
    return "c5";
  case DiracFamily::C6Dual:
    return "c6-dual";
  }
  return "?";
}

std::optional<DiracFamily> parse_dirac_family(std::string_view s) {
  for (const auto f : kAllDiracFamilies)
    if (to_string(f) == s)
      return f;
  return std::nullopt;
}

bool DiracFamilyStats::ok() const {
  if (class_mismatch != 0)
    return false;
  if (expect_satisfy)
    return satisfied == samples;
  return satisfied == 0 && below_gap == 0;
}

bool DiracSweep::ok() const {
  return std::all_of(families.begin(), families.end(),
                     [](const auto &f) { return f.ok(); }) &&
         linearity_satisfied == linearity_pairs && triangle_violations == 0;
}

namespace {

using C = std::complex<double>;

LounestoClass class_of(DiracFamily f) {
  switch (f) {
  case DiracFamily::C2Equal:
  case DiracFamily::C2Unequal:
    return LounestoClass::C2;
  case DiracFamily::C1:
    return LounestoClass::C1;
  case DiracFamily::C3:
    return LounestoClass::C3;
  case DiracFamily::C6Single:
  case DiracFamily::C6Dual:
    return LounestoClass::C6;
  case DiracFamily::C4:
    return LounestoClass::C4;
  case DiracFamily::C5:
    return LounestoClass::C5;
  }
  return LounestoClass::Null;
}

bool single_family(DiracFamily f) {
  return f == DiracFamily::C2Equal || f == DiracFamily::C2Unequal ||
         f == DiracFamily::C1 || f == DiracFamily::C3 ||
         f == DiracFamily::C6Single;
}

PhasePair<double> family_phases(DrawRng &rng, DiracFamily f) {
  if (f == DiracFamily::C2Equal) {
    const C a = rng.coin() ? C(rng.component()) : rng.polar_component();
    return {a, a};
  }
  return phases_for_class(rng, class_of(f));
}

SpinorSpec<double> family_spec(DrawRng &rng, DiracFamily f,
                               double max_boost) {
  const SpinorKind kind =
      single_family(f) ? random_single_kind(rng) : random_dual_kind(rng);
  auto spec = random_family(rng, kind, max_boost);
  spec.phases = family_phases(rng, f);
  return spec;
}

bool alpha_beta_boundary(const PhasePair<double> &p,
                         const BoundaryPolicy &policy) {
  const double d = std::abs(p.alpha - p.beta) /
                   std::max(std::abs(p.alpha), std::abs(p.beta));
  return d > policy.noise_floor && d < policy.margin;
}

double slash_residual(const DiracSpinor<double> &psi,
                      const SpinorSpec<double> &spec) {
  return dirac_residual(psi, std::hypot(spec.momentum, spec.mass),
                        spec.momentum, spec.mass,
                        unit_direction(spec.theta, spec.phi), spec.sign);
}

} // namespace

DiracSweep dirac_sweep(const DiracSweepConfig &cfg,
                       const TolerancePolicy &tol) {
  validate(tol);
  if (cfg.samples == 0)
    throw DomainError("samples must be at least 1");
  const BoundaryPolicy policy;

  DiracSweep out;
  out.gap = cfg.gap;
  for (const DiracFamily f : cfg.families) {
    DiracFamilyStats st;
    st.family = f;
    st.expect_satisfy = f == DiracFamily::C2Equal;
    st.min_relative = std::numeric_limits<double>::infinity();
    const std::uint64_t stream = 400 + static_cast<std::uint64_t>(f);
    const std::uint64_t max_draws = cfg.samples * 100 + 1000;

    for (std::uint64_t k = 0; st.samples < cfg.samples && k < max_draws; ++k) {
      DrawRng rng(cfg.seed, stream, k);
      const auto spec = family_spec(rng, f, cfg.max_boost);
      if (is_boundary(spec, policy) ||
          (f != DiracFamily::C2Equal &&
           alpha_beta_boundary(spec.phases, policy))) {
        ++st.boundary;
        continue;
      }
      ++st.samples;
      const auto check = dynamics_check(spec, tol);
      if (check.class_of_input != class_of(f))
        ++st.class_mismatch;
      if (check.satisfies)
        ++st.satisfied;
      if (!st.expect_satisfy && !(check.relative > cfg.gap))
        ++st.below_gap;
      st.min_relative = std::min(st.min_relative, check.relative);
      st.max_relative = std::max(st.max_relative, check.relative);
    }
    if (st.samples == 0)
      st.min_relative = 0;
    out.families.push_back(st);
  }

  // Sums of two alpha = beta spinors of one family, and the triangle
  // inequality on arbitrary same-family pairs.
  constexpr std::uint64_t kLinearityStream = 500;
  constexpr double kRoundingAllowance =
      64 * std::numeric_limits<double>::epsilon();
  for (std::uint64_t k = 0; k < cfg.samples; ++k) {
    DrawRng rng(cfg.seed, kLinearityStream, k);
    const auto a = family_spec(rng, DiracFamily::C2Equal, cfg.max_boost);
    const auto b =
        a.with_phases(family_phases(rng, DiracFamily::C2Equal));
    const auto sum = build(a) + build(b);
    ++out.linearity_pairs;
    const double rel = slash_residual(sum, a) / (a.mass * sum.norm());
    if (rel <= kDiracRelTolerance)
      ++out.linearity_satisfied;

    const LounestoClass cls = kAllClasses[rng.below(kAllClasses.size())];
    const auto x = random_spec_of_class(rng, cls, cfg.max_boost);
    const auto y = x.with_phases(phases_for_class(rng, cls));
    const auto psi_x = build(x);
    const auto psi_y = build(y);
    const double lhs = slash_residual(psi_x + psi_y, x);
    const double rhs = slash_residual(psi_x, x) + slash_residual(psi_y, x);
    const double energy = std::hypot(x.momentum, x.mass);
    const double allowance = kRoundingAllowance * (energy + x.mass) *
                             (psi_x.norm() + psi_y.norm());
    if (lhs > rhs + allowance)
      ++out.triangle_violations;
  }
  return out;
}

FpkAudit fpk_audit(std::uint64_t samples, std::uint64_t seed,
                   double max_boost) {
  if (samples == 0)
    throw DomainError("samples must be at least 1");
  constexpr std::uint64_t kStream = 600;

  FpkAudit a;
  a.samples = samples;
  a.min_regular_jj = std::numeric_limits<double>::infinity();
  for (std::uint64_t k = 0; k < samples; ++k) {
    DrawRng rng(seed, kStream, k);
    SpinorSpec<double> spec;
    if (rng.below(7) == 0) {
      // unconstrained phases
      const SpinorKind kind =
          rng.coin() ? random_single_kind(rng) : random_dual_kind(rng);
      spec = random_family(rng, kind, max_boost);
      spec.phases = {rng.polar_component(), rng.polar_component()};
    } else {
      spec = random_spec_of_class(
          rng, kAllClasses[rng.below(kAllClasses.size())], max_boost);
    }
    const auto b = bilinears(build(spec).amplitudes);
    const auto r = fpk_residuals(b);
    const double scale2 = b.scale() * b.scale();
    const double r1 = r.r1 / scale2;
    const double r2 = r.r2 / scale2;
    const double r3 = r.r3 / scale2;
    a.max_r1 = std::max(a.max_r1, r1);
    a.max_r2 = std::max(a.max_r2, r2);
    a.max_r3 = std::max(a.max_r3, r3);
    bool bad = r1 > a.bound || r2 > a.bound || r3 > a.bound;

    const double jj = minkowski_dot(b.J, b.J).real() / scale2;
    if (is_regular(classify(b))) {
      ++a.regular;
      a.min_regular_jj = std::min(a.min_regular_jj, jj);
      bad = bad || !(jj > 0);
    } else {
      // dual-helicity spinors and single-helicity Weyl-type ones alike
      ++a.singular;
      a.max_singular_jj = std::max(a.max_singular_jj, std::abs(jj));
      bad = bad || std::abs(jj) > a.bound;
    }
    if (bad)
      ++a.violations;
  }
  if (a.regular == 0)
    a.min_regular_jj = 0;
  return a;
}

CoherenceSweep coherence_sweep(std::uint64_t samples, std::uint64_t seed,
                               const TolerancePolicy &tol,
                               const BoundaryPolicy &policy) {
  validate(tol);
  if (samples == 0)
    throw DomainError("samples must be at least 1");
  constexpr std::uint64_t kStream = 700;
  constexpr double kMaxBoost = 1e3;

  CoherenceSweep c;
  const std::uint64_t max_draws = samples * 100 + 1000;
  for (std::uint64_t k = 0; c.samples < samples && k < max_draws; ++k) {
    DrawRng rng(seed, kStream, k);
    SpinorSpec<double> spec;
    if (rng.below(7) == 0) {
      const SpinorKind kind =
          rng.coin() ? random_single_kind(rng) : random_dual_kind(rng);
      spec = random_family(rng, kind, kMaxBoost);
      spec.phases = {rng.polar_component(), rng.polar_component()};
    } else {
      spec = random_spec_of_class(
          rng, kAllClasses[rng.below(kAllClasses.size())], kMaxBoost);
    }
    if (is_boundary(spec, policy)) {
      ++c.boundary;
      continue;
    }
    ++c.samples;

    const auto cross = crosscheck(spec, tol, policy);
    if (cross.agree)
      ++c.agree;
    ++c.class_histogram[static_cast<std::size_t>(cross.classified)];

    const auto rest = build_rest(spec);
    const LounestoClass at_rest = classify(rest, tol);
    const double boost_ratio = rng.uniform(0.0, kMaxBoost);
    const auto moved =
        boost(rest, boost_ratio * spec.mass, spec.mass, spec.theta, spec.phi);
    if (classify(moved, tol) == at_rest && cross.classified == at_rest)
      ++c.boost_invariant;

    const double modulus = std::pow(10.0, rng.uniform(-3.0, 3.0));
    const C factor = std::polar(modulus, rng.uniform(0.0, 2 * std::numbers::pi));
    if (classify(factor * rest, tol) == at_rest)
      ++c.scale_invariant;
  }
  return c;
}

} // namespace lounesto
