#include "doctest.h"

#include "oracle.hpp"

#include "lounesto/classification.hpp"
#include "lounesto/sampling.hpp"
#include "lounesto/spinor.hpp"

#include <numbers>

using namespace lounesto;
using C = std::complex<double>;
constexpr double kPi = std::numbers::pi;

namespace {

/// sigma.n psi - lambda psi
double eigen_defect(const Spinor2<double> &psi, double theta, double phi,
                    double lambda) {
  const auto s = sigma_dot<double>(unit_direction(theta, phi));
  return (s * psi - lambda * psi).norm();
}

} // namespace

TEST_CASE("two_component closed-form examples") {
  auto v = two_component(0.0, 0.0, Helicity::Plus, 1.0);
  CHECK(v(0) == C(1));
  CHECK(v(1) == C(0));

  v = two_component(kPi, 0.0, Helicity::Plus, 1.0);
  CHECK(std::abs(v(0)) <= 1e-15);
  CHECK(std::abs(v(1) - C(1)) <= 1e-15);
  CHECK(eigen_defect(v, kPi, 0.0, +1.0) <= 1e-12);

  v = two_component(kPi / 2, 0.0, Helicity::Minus, 4.0);
  const double h = std::sqrt(2.0) / 2;
  CHECK(std::abs(v(0) - C(-2 * h)) <= 1e-15);
  CHECK(std::abs(v(1) - C(2 * h)) <= 1e-15);
  CHECK(eigen_defect(v, kPi / 2, 0.0, -1.0) <= 1e-12);
}

TEST_CASE("two_component rejects out-of-range input") {
  CHECK_THROWS_AS(two_component(-0.1, 0.0, Helicity::Plus, 1.0), DomainError);
  CHECK_THROWS_AS(two_component(4.0, 0.0, Helicity::Plus, 1.0), DomainError);
  CHECK_THROWS_AS(two_component(0.0, 2 * kPi, Helicity::Plus, 1.0),
                  DomainError);
  CHECK_THROWS_AS(two_component(0.0, 0.0, Helicity::Plus, 0.0), DomainError);
  CHECK_THROWS_AS(two_component(0.0, 0.0, Helicity::Minus, -1.0),
                  DomainError);
}

TEST_CASE("helicity eigenstates over random angles") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> th(0.0, kPi), ph(0.0, 2 * kPi),
      mass(0.1, 10.0);
  for (int k = 0; k < 1000; ++k) {
    const double t = th(rng), f = ph(rng), m = mass(rng);
    const auto plus = two_component(t, f, Helicity::Plus, m);
    const auto minus = two_component(t, f, Helicity::Minus, m);
    CHECK(eigen_defect(plus, t, f, +1.0) <= 1e-12 * m);
    CHECK(eigen_defect(minus, t, f, -1.0) <= 1e-12 * m);
    CHECK(plus.squaredNorm() == doctest::Approx(m).epsilon(1e-14));

    // Theta phi* flips the helicity of phi.
    const Spinor2<double> flipped =
        wigner_theta<double>() * plus.conjugate();
    CHECK(eigen_defect(flipped, t, f, -1.0) <= 1e-12 * m);
  }
}

TEST_CASE("wigner_theta") {
  const auto t = wigner_theta<double>();
  CHECK((t * t + Matrix2<double>::Identity()).isZero(0));
  CHECK((t.transpose() + t).isZero(0));
  CHECK(t(0, 1) == C(-1));
  CHECK(t(1, 0) == C(1));
}

TEST_CASE("build_rest examples") {
  SpinorSpec<double> s;
  s.phases = {C(1), C(1)};
  CHECK(build_rest(s).amplitudes == Spinor4<double>(1, 0, 1, 0));

  s.kind = SpinorKind::DualHelicityPlus;
  CHECK(build_rest(s).amplitudes == Spinor4<double>(0, 1, 1, 0));

  s.kind = SpinorKind::SingleHelicityPlus;
  s.phases = {C(1), C(0)};
  CHECK(build_rest(s).amplitudes == Spinor4<double>(1, 0, 0, 0));

  s.sign = RelativeSign::Antiparticle;
  s.phases = {C(1), C(1)};
  CHECK(build_rest(s).amplitudes == Spinor4<double>(1, 0, -1, 0));

  CHECK(build_rest(s).provenance.has_value());
}

TEST_CASE("build_rest rejects a zero phase pair and bad parameters") {
  SpinorSpec<double> s;
  s.phases = {C(0), C(0)};
  CHECK_THROWS_AS(build_rest(s), NullSpinorError);
  s.phases = {C(1), C(0)};
  s.mass = 0;
  CHECK_THROWS_AS(build_rest(s), DomainError);
  s.mass = 1;
  s.momentum = -1;
  CHECK_THROWS_AS(build_rest(s), DomainError);
}

TEST_CASE("dual-helicity blocks have opposite helicity") {
  DrawRng rng(9, 0, 0);
  for (int k = 0; k < 500; ++k) {
    auto spec = random_spec_of_class(rng, LounestoClass::C4, 0.0);
    const auto psi = build_rest(spec);
    const double lambda =
        helicity_of(spec.kind) == Helicity::Plus ? 1.0 : -1.0;
    const Spinor2<double> up = psi.upper();
    const Spinor2<double> lo = psi.lower();
    CHECK(eigen_defect(up, spec.theta, spec.phi, -lambda) <=
          1e-12 * psi.norm());
    CHECK(eigen_defect(lo, spec.theta, spec.phi, lambda) <= 1e-12 * psi.norm());
  }
}

TEST_CASE("single-helicity sigma and omega follow 2m Re/Im(a* b)") {
  DrawRng rng(21, 0, 0);
  for (int k = 0; k < 500; ++k) {
    auto spec = random_family(rng, random_single_kind(rng), 10.0);
    spec.phases = {rng.polar_component(), rng.polar_component()};
    const auto b = bilinears(build(spec));
    const C prod = std::conj(spec.phases.alpha) * spec.phases.beta;
    const double scale = 2 * spec.mass * std::abs(prod);
    CHECK(std::abs(b.sigma.real() - 2 * spec.mass * prod.real()) <=
          1e-12 * scale);
    CHECK(std::abs(b.omega.real() - 2 * spec.mass * prod.imag()) <=
          1e-12 * scale);
  }
}

TEST_CASE("boost: identity at rest and closed form along z") {
  SpinorSpec<double> s;
  s.phases = {C(1), C(1)};
  const auto rest = build_rest(s);
  CHECK(boost(rest, 0.0, 1.0, 0.0, 0.0).amplitudes == rest.amplitudes);

  const double e = std::sqrt(2.0);
  const double n = std::sqrt((e + 1) / 2);
  const auto moved = boost(rest, 1.0, 1.0, 0.0, 0.0);
  CHECK(std::abs(moved.amplitudes(0) - C(n * (1 + 1 / (e + 1)))) <= 1e-15);
  CHECK(std::abs(moved.amplitudes(2) - C(n * (1 - 1 / (e + 1)))) <= 1e-15);
  CHECK(moved.amplitudes(1) == C(0));
  CHECK(moved.amplitudes(3) == C(0));

  // J.J is a Lorentz scalar
  const auto b0 = bilinears(rest);
  const auto b1 = bilinears(moved);
  CHECK(std::abs(minkowski_dot(b1.J, b1.J) - minkowski_dot(b0.J, b0.J)) <=
        1e-13);
}

TEST_CASE("boost preserves the Lounesto class") {
  DrawRng rng(31, 0, 0);
  for (int k = 0; k < 1000; ++k) {
    const auto cls = kAllClasses[rng.below(kAllClasses.size())];
    auto spec = random_spec_of_class(rng, cls, 0.0);
    if (is_boundary(spec))
      continue;
    const auto rest = build_rest(spec);
    const double p = spec.mass * rng.uniform(0.0, 1e3);
    const auto moved = boost(rest, p, spec.mass, spec.theta, spec.phi);
    CHECK(classify(moved) == classify(rest));
    CHECK(classify(rest) == cls);
  }
}

TEST_CASE("norm squared equals J^0") {
  DrawRng rng(41, 0, 0);
  for (int k = 0; k < 200; ++k) {
    const auto spec = random_spec_of_class(
        rng, kAllClasses[rng.below(kAllClasses.size())], 1e3);
    const auto psi = build(spec);
    CHECK(bilinears(psi).scale() ==
          doctest::Approx(psi.amplitudes.squaredNorm()).epsilon(1e-15));
  }
}
