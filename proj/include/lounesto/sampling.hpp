#pragma once

// Seeded draws for the sweeps. Every draw gets its own generator keyed by
// (seed, stream, index), so results do not depend on evaluation order.

#include "lounesto/classification.hpp"
#include "lounesto/spinor.hpp"

#include <complex>
#include <cstdint>
#include <random>

namespace lounesto {

class DrawRng {
public:
  DrawRng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

  double uniform(double lo, double hi);
  bool coin();
  int sign();
  std::uint64_t below(std::uint64_t n);

  /// Random sign times a magnitude in [0.2, 2].
  double component();
  /// Both parts drawn with component().
  std::complex<double> complex_component();
  /// Modulus in [0.2, 2], uniform argument.
  std::complex<double> polar_component();

private:
  std::mt19937_64 engine_;
};

/// Mass, angles and momentum for a random family of the given kind.
/// Momentum is drawn log-uniformly in [0, max_boost * m].
SpinorSpec<double> random_family(DrawRng &rng, SpinorKind kind,
                                 double max_boost = 10.0);

SpinorKind random_single_kind(DrawRng &rng);
SpinorKind random_dual_kind(DrawRng &rng);

/// Phases whose factory spinor (particle branch) belongs to the given class.
/// Classes 1-3 need a single-helicity kind, 4-5 a dual one, 6 either.
PhasePair<double> phases_for_class(DrawRng &rng, LounestoClass c);

/// Random particle-branch spec of the requested class with a matching kind.
SpinorSpec<double> random_spec_of_class(DrawRng &rng, LounestoClass c,
                                        double max_boost = 10.0);

} // namespace lounesto
