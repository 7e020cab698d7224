#include "doctest.h"

#include "oracle.hpp"

#include "lounesto/clifford.hpp"
#include "lounesto/sampling.hpp"
#include "lounesto/spinor.hpp"

using namespace lounesto;
using C = std::complex<double>;

namespace {

Spinor4<double> to_eigen(const oracle::Vec &v) {
  Spinor4<double> s;
  s << v[0], v[1], v[2], v[3];
  return s;
}

double max_abs(const Matrix4<double> &m) { return m.cwiseAbs().maxCoeff(); }

} // namespace

TEST_CASE("gamma basis matches the hand-entered oracle") {
  const auto g = gamma_basis<double>();
  for (int mu = 0; mu < 4; ++mu)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        CHECK(g.gamma[mu](i, j) == oracle::kGamma[mu][i][j]);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      CHECK(g.gamma5(i, j) == oracle::kGamma5[i][j]);
}

TEST_CASE("gamma0 has zero diagonal blocks and identity off-diagonal blocks") {
  const auto g = gamma_basis<double>();
  CHECK(g.gamma[0].topLeftCorner<2, 2>().isZero(0));
  CHECK(g.gamma[0].bottomRightCorner<2, 2>().isZero(0));
  CHECK(g.gamma[0].topRightCorner<2, 2>().isIdentity(0));
  CHECK(g.gamma[0].bottomLeftCorner<2, 2>().isIdentity(0));
}

TEST_CASE("Clifford closure and gamma5 relations") {
  const auto g = gamma_basis<double>();
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      const Matrix4<double> anti = g.gamma[mu] * g.gamma[nu] +
                                   g.gamma[nu] * g.gamma[mu];
      const double eta = mu == nu ? metric<double>(mu) : 0.0;
      CHECK(max_abs(anti - 2 * eta * g.identity) <= 1e-14);
    }
  CHECK(max_abs(g.gamma[1] * g.gamma[2] + g.gamma[2] * g.gamma[1]) == 0.0);
  CHECK(max_abs(g.gamma5 * g.gamma5 - g.identity) == 0.0);
  for (int mu = 0; mu < 4; ++mu)
    CHECK(max_abs(g.gamma5 * g.gamma[mu] + g.gamma[mu] * g.gamma5) == 0.0);
  // gamma5 = i gamma0 gamma1 gamma2 gamma3 in this basis
  const Matrix4<double> product =
      C(0, 1) * g.gamma[0] * g.gamma[1] * g.gamma[2] * g.gamma[3];
  CHECK(max_abs(product - g.gamma5) <= 1e-15);
}

TEST_CASE("dirac_adjoint") {
  Spinor4<double> psi;
  psi << 1, 0, 0, 0;
  CHECK(dirac_adjoint(psi) == CoSpinor4<double>(0, 0, 1, 0));
  psi << 0, 0, C(0, 1), 0;
  CHECK(dirac_adjoint(psi) == CoSpinor4<double>(C(0, -1), 0, 0, 0));
  psi << 1, 0, 1, 0;
  CHECK(dirac_adjoint(psi) == CoSpinor4<double>(1, 0, 1, 0));
}

TEST_CASE("minkowski_dot") {
  using V = FourVector<double>;
  CHECK(minkowski_dot<double>(V(1, 0, 0, 0), V(1, 0, 0, 0)) == C(1));
  CHECK(minkowski_dot<double>(V(1, 1, 0, 0), V(1, 1, 0, 0)) == C(0));
  const double m = 1.5, p = 2.0, e = std::hypot(p, m);
  CHECK(minkowski_dot<double>(V(e, 0, 0, p), V(e, 0, 0, p)).real() ==
        doctest::Approx(m * m).epsilon(1e-14));
}

TEST_CASE("bilinears agree with the index-by-index oracle") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const oracle::Vec v = oracle::random_spinor(rng);
    const auto ref = oracle::bilinears(v);
    const auto b = bilinears(to_eigen(v));
    const double scale = b.scale();
    CHECK(std::abs(b.sigma - ref.sigma) <= 1e-13 * scale);
    CHECK(std::abs(b.omega - ref.omega) <= 1e-13 * scale);
    for (int mu = 0; mu < 4; ++mu) {
      CHECK(std::abs(b.J(mu) - ref.J[mu]) <= 1e-13 * scale);
      CHECK(std::abs(b.K(mu) - ref.K[mu]) <= 1e-13 * scale);
      for (int nu = 0; nu < 4; ++nu)
        CHECK(std::abs(b.S(mu, nu) - ref.S[mu][nu]) <= 1e-13 * scale);
    }
  }
}

TEST_CASE("bilinear invariants on arbitrary spinors") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const Spinor4<double> psi = to_eigen(oracle::random_spinor(rng));
    const auto b = bilinears(psi);
    // S antisymmetric exactly as computed
    CHECK(b.S == -b.S.transpose());
    // J^0 = |psi|^2
    CHECK(b.scale() == doctest::Approx(psi.squaredNorm()).epsilon(1e-15));
    CHECK(std::abs(b.J(0).imag()) <= 1e-10 * b.scale());
    for (int mu = 0; mu < 4; ++mu) {
      CHECK(std::abs(b.J(mu).imag()) <= 1e-10 * b.scale());
      CHECK(std::abs(b.K(mu).imag()) <= 1e-10 * b.scale());
    }
    CHECK(std::abs(b.sigma.imag()) <= 1e-12 * b.scale());
    CHECK(std::abs(b.omega.imag()) <= 1e-12 * b.scale());

    // FPK holds for any 4-spinor, not only factory ones.
    const auto r = fpk_residuals(b);
    CHECK(r.max() <= 1e-9 * b.scale() * b.scale());
  }
}

TEST_CASE("bilinears scale with |c|^2") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int trial = 0; trial < 200; ++trial) {
    const Spinor4<double> psi = to_eigen(oracle::random_spinor(rng));
    const C c = std::polar(std::pow(10.0, u(rng)), u(rng));
    const double c2 = std::norm(c);
    const auto a = bilinears(psi);
    const auto b = bilinears((c * psi).eval());
    const double tol = 1e-12 * c2 * a.scale();
    CHECK(std::abs(b.sigma - c2 * a.sigma) <= tol);
    CHECK(std::abs(b.omega - c2 * a.omega) <= tol);
    CHECK((b.J - c2 * a.J).norm() <= tol);
    CHECK((b.K - c2 * a.K).norm() <= tol);
    CHECK((b.S - c2 * a.S).norm() <= tol);
  }
}

TEST_CASE("factory spinors: sigma and omega examples") {
  SpinorSpec<double> s;
  s.kind = SpinorKind::SingleHelicityPlus;
  s.phases = {C(1), C(1)};
  // oracle: sigma = 2m Re(a* b) = 2, omega = 2m Im(a* b) = 0
  auto ref = oracle::bilinears({C(1), 0, C(1), 0});
  CHECK(ref.sigma.real() == doctest::Approx(2.0));
  auto b = bilinears(build_rest(s));
  CHECK(b.sigma.real() == doctest::Approx(2.0));
  CHECK(std::abs(b.omega) <= 1e-15);

  s.phases = {C(1), C(0, 1)};
  ref = oracle::bilinears({C(1), 0, C(0, 1), 0});
  CHECK(ref.omega.real() == doctest::Approx(2.0));
  b = bilinears(build_rest(s));
  CHECK(std::abs(b.sigma) <= 1e-15);
  CHECK(b.omega.real() == doctest::Approx(2.0));

  DrawRng rng(1, 1, 1);
  for (int k = 0; k < 50; ++k) {
    SpinorSpec<double> d;
    d.kind = k % 2 ? SpinorKind::DualHelicityPlus : SpinorKind::DualHelicityMinus;
    d.theta = rng.uniform(0.0, 3.14159);
    d.phi = rng.uniform(0.0, 6.28);
    d.phases = {rng.polar_component(), rng.polar_component()};
    const auto bd = bilinears(build_rest(d));
    CHECK(std::abs(bd.sigma) <= 1e-14 * bd.scale());
    CHECK(std::abs(bd.omega) <= 1e-14 * bd.scale());
  }
}

TEST_CASE("fpk residuals") {
  const BilinearSet<double> zero;
  const auto r = fpk_residuals(zero);
  CHECK(r.r1 == 0.0);
  CHECK(r.r2 == 0.0);
  CHECK(r.r3 == 0.0);

  // dual-helicity spinors carry a light-like current
  DrawRng rng(5, 0, 0);
  for (int k = 0; k < 200; ++k) {
    auto spec = random_spec_of_class(rng, k % 2 ? LounestoClass::C4
                                                : LounestoClass::C5,
                                     1e3);
    const auto b = bilinears(build(spec));
    const double s2 = b.scale() * b.scale();
    CHECK(std::abs(minkowski_dot(b.J, b.J)) <= 1e-9 * s2);
    CHECK(fpk_residuals(b).max() <= 1e-9 * s2);
  }
}
