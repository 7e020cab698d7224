#include "lounesto/sampling.hpp"

#include <cmath>
#include <numbers>

namespace lounesto {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t key(std::uint64_t seed, std::uint64_t stream,
                  std::uint64_t index) {
  return splitmix64(splitmix64(splitmix64(seed) ^ stream) ^ index);
}

} // namespace

DrawRng::DrawRng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index)
    : engine_(key(seed, stream, index)) {}

double DrawRng::uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(engine_);
}

bool DrawRng::coin() { return (engine_() >> 63) != 0; }

int DrawRng::sign() { return coin() ? 1 : -1; }

std::uint64_t DrawRng::below(std::uint64_t n) {
  return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(engine_);
}

double DrawRng::component() { return sign() * uniform(0.2, 2.0); }

std::complex<double> DrawRng::complex_component() {
  const double re = component();
  return {re, component()};
}

std::complex<double> DrawRng::polar_component() {
  const double r = uniform(0.2, 2.0);
  return std::polar(r, uniform(0.0, 2 * std::numbers::pi));
}

SpinorKind random_single_kind(DrawRng &rng) {
  return rng.coin() ? SpinorKind::SingleHelicityPlus
                    : SpinorKind::SingleHelicityMinus;
}

SpinorKind random_dual_kind(DrawRng &rng) {
  return rng.coin() ? SpinorKind::DualHelicityPlus
                    : SpinorKind::DualHelicityMinus;
}

SpinorSpec<double> random_family(DrawRng &rng, SpinorKind kind,
                                 double max_boost) {
  SpinorSpec<double> s;
  s.kind = kind;
  s.mass = rng.uniform(0.5, 2.0);
  s.theta = rng.uniform(0.0, std::numbers::pi);
  s.phi = rng.uniform(0.0, 2 * std::numbers::pi);
  // log-uniform over p/m in [1e-3, max_boost], plus an exact rest frame
  // one draw in eight.
  if (rng.below(8) == 0 || max_boost <= 0) {
    s.momentum = 0;
  } else {
    const double lo = std::log(1e-3);
    const double hi = std::log(max_boost);
    s.momentum = s.mass * std::exp(rng.uniform(lo, hi));
  }
  s.sign = RelativeSign::Particle;
  return s;
}

PhasePair<double> phases_for_class(DrawRng &rng, LounestoClass c) {
  using C = std::complex<double>;
  const C i(0, 1);
  switch (c) {
  case LounestoClass::C1:
    return {rng.polar_component(), rng.polar_component()};
  case LounestoClass::C2: {
    // alpha* beta real: common complex factor times real weights.
    const C common = std::polar(1.0, rng.uniform(0.0, 2 * std::numbers::pi));
    return {common * rng.component(), common * rng.component()};
  }
  case LounestoClass::C3: {
    const C common = std::polar(1.0, rng.uniform(0.0, 2 * std::numbers::pi));
    return {common * rng.component(), i * common * rng.component()};
  }
  case LounestoClass::C4:
    return {rng.polar_component(), rng.polar_component()};
  case LounestoClass::C5: {
    const double r = rng.uniform(0.2, 2.0);
    return {std::polar(r, rng.uniform(0.0, 2 * std::numbers::pi)),
            std::polar(r, rng.uniform(0.0, 2 * std::numbers::pi))};
  }
  case LounestoClass::C6: {
    const C nonzero = rng.polar_component();
    return rng.coin() ? PhasePair<double>{nonzero, C(0)}
                      : PhasePair<double>{C(0), nonzero};
  }
  case LounestoClass::Null:
    break;
  }
  return {C(0), C(0)};
}

SpinorSpec<double> random_spec_of_class(DrawRng &rng, LounestoClass c,
                                        double max_boost) {
  SpinorKind kind;
  if (is_regular(c))
    kind = random_single_kind(rng);
  else if (c == LounestoClass::C6)
    kind = rng.coin() ? random_single_kind(rng) : random_dual_kind(rng);
  else
    kind = random_dual_kind(rng);
  SpinorSpec<double> s = random_family(rng, kind, max_boost);
  s.phases = phases_for_class(rng, c);
  return s;
}

} // namespace lounesto
