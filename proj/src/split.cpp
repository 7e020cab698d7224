#include "lounesto/split.hpp"

#include "lounesto/sampling.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace lounesto {

std::string render_support(const Support &s) {
  std::vector<std::string> names;
  if (s.sigma)
    names.emplace_back("sigma");
  if (s.omega)
    names.emplace_back("omega");
  if (s.K)
    names.emplace_back("K");
  if (s.S)
    names.emplace_back("S");
  std::string out = "{";
  for (std::size_t k = 0; k < names.size(); ++k) {
    if (k)
      out += ",";
    out += names[k];
  }
  return out + "}";
}

std::string render(const UnionReport &r) {
  std::ostringstream os;
  os << "whole      (class " << to_string(r.class_whole)
     << "): " << render_support(r.whole) << '\n'
     << "real part  (class " << to_string(r.class_real)
     << "): " << render_support(r.real) << '\n'
     << "imag part  (class " << to_string(r.class_imag)
     << "): " << render_support(r.imag) << '\n'
     << "parts union: " << render_support(r.parts_union) << '\n';
  return os.str();
}

namespace {

using C = std::complex<double>;
constexpr C I(0, 1);

/// Either a spec to split, or two same-family specs to sum.
struct Draw {
  SpinorSpec<double> first;
  std::optional<SpinorSpec<double>> second;
};

struct RowDef {
  LounestoClass target;
  LounestoClass left;
  LounestoClass right;
  const char *tag;
  std::function<Draw(DrawRng &, const SpinorSpec<double> &)> sample;
};

Draw split_of(const SpinorSpec<double> &family, C alpha, C beta) {
  return {family.with_phases({alpha, beta}), std::nullopt};
}

std::vector<RowDef> regular_rows() {
  using LC = LounestoClass;
  return {
      {LC::C1, LC::C2, LC::C2,
       "forall alpha,beta in R or forall alpha,beta in Im",
       [](DrawRng &rng, const SpinorSpec<double> &f) {
         const C a = rng.complex_component();
         return split_of(f, a, rng.complex_component());
       }},
      {LC::C1, LC::C2, LC::C6,
       "forall alpha in C and forall beta in R or forall alpha in C and "
       "forall beta in Im",
       [](DrawRng &rng, const SpinorSpec<double> &f) {
         const C a = rng.complex_component();
         const C b = rng.coin() ? C(rng.component()) : I * rng.component();
         return split_of(f, a, b);
       }},
      {LC::C2, LC::C2, LC::C2, "alpha,beta in C | alpha=beta",
       [](DrawRng &rng, const SpinorSpec<double> &f) {
         const C a = rng.complex_component();
         return split_of(f, a, a);
       }},
      // The second alternative of the printed constraint (both imaginary)
      // yields class 2; the alpha real, beta imaginary case is sampled
      // instead.
      {LC::C3, LC::C6, LC::C6,
       "forall alpha in Im and forall beta in R or forall alpha in Im and "
       "forall beta in Im",
       [](DrawRng &rng, const SpinorSpec<double> &f) {
         const double x = rng.component();
         const double y = rng.component();
         return rng.coin() ? split_of(f, I * x, y) : split_of(f, x, I * y);
       }},
  };
}

std::vector<RowDef> singular_rows() {
  using LC = LounestoClass;
  constexpr const char *kGenericGap = "alpha,beta in C with |alpha|^2!=|beta|^2";
  constexpr const char *kRealOrImagGap =
      "alpha in C and beta in R with |alpha|^2!=|beta|^2 or alpha in C and "
      "beta in Im with |alpha|^2!=|beta|^2";
  return {
      {LC::C4, LC::C4, LC::C4, kGenericGap,
       [](DrawRng &rng, const SpinorSpec<double> &f) {
         const C a = rng.complex_component();
         return split_of(f, a, rng.complex_component());
       }},
      // No real/imaginary split of a class-4 spinor has two class-5 parts
      // (|Re a|=|Re b| and |Im a|=|Im b| force |a|=|b|), so this row sums
      // two independent class-5 spinors.
      {LC::C4, LC::C5, LC::C5, kGenericGap,
       [](DrawRng &rng, const SpinorSpec<double> &f) {
         const auto first = phases_for_class(rng, LC::C5);
         const auto second = phases_for_class(rng, LC::C5);
         return Draw{f.with_phases(first), f.with_phases(second)};
       }},
      {LC::C4, LC::C4, LC::C5, kGenericGap,
       [](DrawRng &rng, const SpinorSpec<double> &f) {
         const double ar = rng.component();
         const double ai = rng.component();
         const double br = rng.component();
         return split_of(f, C(ar, ai), C(br, rng.sign() * ai));
       }},
      {LC::C4, LC::C4, LC::C6, kRealOrImagGap,
       [](DrawRng &rng, const SpinorSpec<double> &f) {
         const C a = rng.complex_component();
         const C b = rng.coin() ? C(rng.component()) : I * rng.component();
         return split_of(f, a, b);
       }},
      {LC::C4, LC::C5, LC::C6, kRealOrImagGap,
       [](DrawRng &rng, const SpinorSpec<double> &f) {
         const C a = rng.complex_component();
         const double s = rng.sign();
         const C b = rng.coin() ? C(s * a.real()) : I * (s * a.imag());
         return split_of(f, a, b);
       }},
      {LC::C4, LC::C6, LC::C6,
       "alpha in Im and beta in R with |alpha|^2!=|beta|^2",
       [](DrawRng &rng, const SpinorSpec<double> &f) {
         const double x = rng.component();
         return split_of(f, I * x, rng.component());
       }},
      // Printed constraints for the class-5 rows carry != where the whole
      // spinor needs |alpha| = |beta|.
      {LC::C5, LC::C4, LC::C4,
       "alpha,beta in C with |alpha|^2!=|beta|^2 or alpha in C and beta in R "
       "with |alpha|^2!=|beta|^2",
       [](DrawRng &rng, const SpinorSpec<double> &f) {
         const double r = rng.uniform(0.2, 2.0);
         const C a = std::polar(r, rng.uniform(0.0, 2 * std::numbers::pi));
         return split_of(
             f, a, std::polar(r, rng.uniform(0.0, 2 * std::numbers::pi)));
       }},
      {LC::C5, LC::C5, LC::C5, kGenericGap,
       [](DrawRng &rng, const SpinorSpec<double> &f) {
         const C a = rng.complex_component();
         const double s1 = rng.sign();
         const double s2 = rng.sign();
         return split_of(f, a, C(s1 * a.real(), s2 * a.imag()));
       }},
      {LC::C5, LC::C4, LC::C6,
       "alpha in C and beta in Im with |alpha|^2=|beta|^2",
       [](DrawRng &rng, const SpinorSpec<double> &f) {
         const C a = rng.complex_component();
         return split_of(f, a, I * (rng.sign() * std::abs(a)));
       }},
      {LC::C5, LC::C6, LC::C6,
       "alpha in Im and beta in R with |alpha|^2=|beta|^2",
       [](DrawRng &rng, const SpinorSpec<double> &f) {
         const double x = rng.uniform(0.2, 2.0);
         const double s1 = rng.sign();
         return split_of(f, I * (s1 * x), rng.sign() * x);
       }},
  };
}

bool boundary_or_null(const SpinorSpec<double> &s,
                      const BoundaryPolicy &policy) {
  return !s.phases.is_zero() && is_boundary(s, policy);
}

bool same_pair(LounestoClass a, LounestoClass b, LounestoClass x,
               LounestoClass y) {
  return (a == x && b == y) || (a == y && b == x);
}

struct Evaluated {
  bool boundary = false;
  LounestoClass whole = LounestoClass::Null;
  LounestoClass left = LounestoClass::Null;
  LounestoClass right = LounestoClass::Null;
};

Evaluated evaluate(const Draw &d, const TolerancePolicy &tol,
                   const BoundaryPolicy &policy) {
  Evaluated e;
  if (!d.second) {
    const auto &s = d.first;
    e.boundary = boundary_or_null(s, policy) ||
                 boundary_or_null(s.with_phases(s.phases.real_part()), policy) ||
                 boundary_or_null(s.with_phases(s.phases.imag_part()), policy);
    const auto r = split(s, tol);
    e.whole = r.class_whole;
    e.left = r.class_real;
    e.right = r.class_imag;
  } else {
    const auto &a = d.first;
    const auto &b = *d.second;
    e.boundary =
        boundary_or_null(a, policy) || boundary_or_null(b, policy) ||
        boundary_or_null(a.with_phases(a.phases + b.phases), policy);
    const auto r = compose(a, b, tol);
    e.whole = r.class_sum;
    e.left = r.class_left;
    e.right = r.class_right;
  }
  return e;
}

} // namespace

std::vector<CompositionRow> composition_table(Sector sector,
                                              std::uint64_t samples,
                                              std::uint64_t seed,
                                              const TolerancePolicy &tol,
                                              const BoundaryPolicy &policy) {
  validate(tol);
  if (samples == 0)
    throw DomainError("samples must be at least 1");

  const auto defs =
      sector == Sector::Regular ? regular_rows() : singular_rows();
  const std::uint64_t stream_base = sector == Sector::Regular ? 100 : 200;
  // Boundary draws are measure-zero in practice; the cap only stops a
  // pathological policy from looping forever.
  const std::uint64_t max_draws = samples * 100 + 1000;

  std::vector<CompositionRow> rows;
  for (std::size_t r = 0; r < defs.size(); ++r) {
    const RowDef &def = defs[r];
    CompositionRow row;
    row.target_class = def.target;
    row.left_class = def.left;
    row.right_class = def.right;
    row.phase_constraint_tag = def.tag;

    for (std::uint64_t k = 0; row.sample_count < samples && k < max_draws;
         ++k) {
      DrawRng rng(seed, stream_base + r, k);
      const SpinorKind kind = sector == Sector::Regular
                                  ? random_single_kind(rng)
                                  : random_dual_kind(rng);
      const auto family = random_family(rng, kind);
      const Draw d = def.sample(rng, family);
      row.method = d.second ? "compose" : "split";

      const Evaluated e = evaluate(d, tol, policy);
      if (e.boundary) {
        ++row.boundary_count;
        continue;
      }
      ++row.sample_count;
      if (e.whole == def.target &&
          same_pair(e.left, e.right, def.left, def.right))
        ++row.success_count;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Class6Report class6_search(std::uint64_t trials, std::uint64_t seed,
                           const TolerancePolicy &tol,
                           const BoundaryPolicy &policy) {
  validate(tol);
  if (trials == 0)
    throw DomainError("trials must be at least 1");

  using LC = LounestoClass;
  constexpr std::array<LC, 3> regular = {LC::C1, LC::C2, LC::C3};
  constexpr std::array<LC, 2> singular = {LC::C4, LC::C5};
  constexpr std::uint64_t kPairStream = 300;
  constexpr std::uint64_t kSplitStream = 301;

  Class6Report rep;
  rep.trials = trials;
  for (std::uint64_t k = 0; k < trials; ++k) {
    {
      DrawRng rng(seed, kPairStream, k);
      const bool single = rng.coin();
      const SpinorKind kind =
          single ? random_single_kind(rng) : random_dual_kind(rng);
      const LC ca = single ? regular[rng.below(3)] : singular[rng.below(2)];
      const LC cb = single ? regular[rng.below(3)] : singular[rng.below(2)];
      const auto family = random_family(rng, kind);
      const auto a = family.with_phases(phases_for_class(rng, ca));
      const auto b = family.with_phases(phases_for_class(rng, cb));
      const auto sum_phases = a.phases + b.phases;

      if (is_boundary(a, policy) || is_boundary(b, policy) ||
          boundary_or_null(family.with_phases(sum_phases), policy)) {
        ++rep.boundary_count;
      } else {
        const auto r = compose(a, b, tol);
        if (r.class_left == LC::C6 || r.class_right == LC::C6 ||
            r.class_left == LC::Null || r.class_right == LC::Null) {
          // Sampler produced a part outside classes 1-5; not a valid trial.
          ++rep.boundary_count;
        } else {
          ++rep.sum_histogram[static_cast<std::size_t>(r.class_sum)];
          if (r.class_sum == LC::C6)
            ++rep.class6_sums;
          if (r.class_sum == LC::Null)
            ++rep.null_sums;
        }
      }
    }
    {
      DrawRng rng(seed, kSplitStream, k);
      const SpinorKind kind =
          rng.coin() ? random_single_kind(rng) : random_dual_kind(rng);
      auto spec = random_family(rng, kind);
      C nonzero;
      switch (rng.below(3)) {
      case 0:
        nonzero = rng.complex_component();
        break;
      case 1:
        nonzero = rng.component();
        break;
      default:
        nonzero = I * rng.component();
        break;
      }
      spec.phases = rng.coin() ? PhasePair<double>{nonzero, C(0)}
                               : PhasePair<double>{C(0), nonzero};
      const auto r = split(spec, tol);
      ++rep.class6_splits;
      if (r.class_whole == LC::C6 &&
          (same_pair(r.class_real, r.class_imag, LC::C6, LC::Null) ||
           same_pair(r.class_real, r.class_imag, LC::C6, LC::C6)))
        ++rep.class6_splits_ok;
    }
  }
  return rep;
}

} // namespace lounesto
