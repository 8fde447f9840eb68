// Representation-level algebra: gamma matrices in the Weyl representation,
// chiral projectors, and charge conjugation.
//
// The hand-computed oracles below use raw std::complex 2x2 arithmetic, not
// the library's Mat2 operators, so the identity checks are independent of
// the kernel they exercise.

#include "doctest.h"

#include <array>
#include <complex>
#include <numbers>
#include <random>

#include "wmbox/algebra.hpp"

using namespace wmbox;

namespace {

constexpr double pi = std::numbers::pi;

using Raw = std::array<std::array<Cx, 2>, 2>;

Raw raw(const Mat2& m) {
  return {{{m.m11, m.m12}, {m.m21, m.m22}}};
}

Raw raw_mul(const Raw& a, const Raw& b) {
  Raw out{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    }
  }
  return out;
}

double raw_max_diff(const Raw& a, const Raw& b) {
  double worst = 0.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      worst = std::max(worst, std::abs(a[i][j] - b[i][j]));
    }
  }
  return worst;
}

Vec2 random_spinor(std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  return Vec2{Cx(g(rng), g(rng)), Cx(g(rng), g(rng))};
}

}  // namespace

TEST_CASE("weyl gamma set has the textbook matrices") {
  const GammaSet g = weyl_gamma_set();

  // gamma0 = sigma_x
  CHECK(g.gamma0.m11 == Cx(0.0));
  CHECK(g.gamma0.m12 == Cx(1.0));
  CHECK(g.gamma0.m21 == Cx(1.0));
  CHECK(g.gamma0.m22 == Cx(0.0));

  // gamma1 = -i sigma_y = [[0,-1],[1,0]]
  CHECK(g.gamma1.m11 == Cx(0.0));
  CHECK(g.gamma1.m12 == Cx(-1.0));
  CHECK(g.gamma1.m21 == Cx(1.0));
  CHECK(g.gamma1.m22 == Cx(0.0));
  const Cx minus_i(0.0, -1.0);
  CHECK(max_abs_diff(g.gamma1, minus_i * sigma_y()) == 0.0);

  // gamma5 = gamma0 gamma1 = sigma_z
  CHECK(g.gamma5.m11 == Cx(1.0));
  CHECK(g.gamma5.m22 == Cx(-1.0));
  CHECK(max_abs_diff(g.gamma5, g.gamma0 * g.gamma1) == 0.0);
}

TEST_CASE("clifford residual is exactly zero for the weyl set") {
  CHECK(clifford_residual(weyl_gamma_set()) == 0.0);
}

TEST_CASE("clifford residual flags gamma1 = identity") {
  // I*I + I*I - 2(-1)I = 4I, so the residual is at least 4 from the (1,1)
  // anticommutator alone.
  GammaSet bad = weyl_gamma_set();
  bad.gamma1 = Mat2::identity();
  CHECK(clifford_residual(bad) >= 1.0);
}

TEST_CASE("clifford residual of a conjugated pair, by direct multiplication") {
  // gamma0 = sigma_z and gamma1 = sigma_z (-i sigma_y) sigma_z form another
  // valid Clifford pair; with gamma5 recomputed as their product the
  // residual vanishes, while keeping the stale gamma5 = sigma_z leaves
  // exactly the chirality-group terms.
  GammaSet t;
  t.gamma0 = sigma_z();
  t.gamma1 = sigma_z() * (Cx(0.0, -1.0) * sigma_y()) * sigma_z();
  t.gamma5 = t.gamma0 * t.gamma1;
  CHECK(clifford_residual(t) == doctest::Approx(0.0).epsilon(1e-15));

  GammaSet stale = t;
  stale.gamma5 = sigma_z();

  // Oracle: gamma0' gamma1' = sigma_x by direct multiplication, so
  // ||gamma5 - gamma0 gamma1||_max = 1 and ||{gamma5, gamma0}||_max = 2;
  // the clifford and adjoint groups stay zero, total 2 (the group max).
  const Raw prod = raw_mul(raw(stale.gamma0), raw(stale.gamma1));
  CHECK(raw_max_diff(prod, raw(sigma_x())) == 0.0);
  const Raw anti = [&] {
    Raw a = raw_mul(raw(stale.gamma5), raw(stale.gamma0));
    const Raw b = raw_mul(raw(stale.gamma0), raw(stale.gamma5));
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        a[i][j] += b[i][j];
      }
    }
    return a;
  }();
  double anti_norm = 0.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      anti_norm = std::max(anti_norm, std::abs(anti[i][j]));
    }
  }
  CHECK(anti_norm == 2.0);
  CHECK(clifford_residual(stale) == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("chiral projectors are diag(1,0) and diag(0,1) in the weyl rep") {
  const ChiralProjectors p = chiral_projectors(weyl_gamma_set());
  CHECK(max_abs_diff(p.plus, Mat2::diag(1.0, 0.0)) == 0.0);
  CHECK(max_abs_diff(p.minus, Mat2::diag(0.0, 1.0)) == 0.0);

  // Projection of [1,1]^T
  const Vec2 v = p.plus * Vec2{1.0, 1.0};
  CHECK(v.c1 == Cx(1.0));
  CHECK(v.c2 == Cx(0.0));

  // Idempotence and mutual annihilation
  CHECK(max_abs_diff(p.plus * p.plus, p.plus) == 0.0);
  CHECK(max_abs_diff(p.minus * p.minus, p.minus) == 0.0);
  CHECK((p.plus * p.minus).max_abs() == 0.0);
  CHECK(max_abs_diff(p.plus + p.minus, Mat2::identity()) == 0.0);
}

TEST_CASE("chiral projectors reject an invalid gamma set") {
  GammaSet bad = weyl_gamma_set();
  bad.gamma1 = Mat2::identity();
  CHECK_THROWS_AS(chiral_projectors(bad), std::invalid_argument);
}

TEST_CASE("charge conjugation matrix at reference phases") {
  // nu = 0: S_C = sigma_z
  CHECK(max_abs_diff(charge_conjugation_matrix(0.0), sigma_z()) == 0.0);

  // nu = 3*pi/2: S_C = diag(-i, i)
  const Mat2 s = charge_conjugation_matrix(1.5 * pi);
  CHECK(std::abs(s.m11 - Cx(0.0, -1.0)) < 1e-15);
  CHECK(std::abs(s.m22 - Cx(0.0, 1.0)) < 1e-15);

  // Unitarity for a few phases
  for (double nu : {0.0, 0.7, 1.5 * pi, 5.9}) {
    const Mat2 sc = charge_conjugation_matrix(nu);
    CHECK(max_abs_diff(sc.adjoint() * sc, Mat2::identity()) < 1e-15);
  }
}

TEST_CASE("conjugation identity S_C (i gamma^mu)* S_C^{-1} = i gamma^mu") {
  const GammaSet g = weyl_gamma_set();
  const Cx i(0.0, 1.0);
  for (double nu : {0.0, 1.0, 1.5 * pi}) {
    const Mat2 sc = charge_conjugation_matrix(nu);
    const Mat2 sc_inv = sc.inverse();
    for (const Mat2& gm : {g.gamma0, g.gamma1}) {
      const Mat2 lhs = sc * (i * gm).conj() * sc_inv;
      CHECK(max_abs_diff(lhs, i * gm) < 1e-15);
    }
    // and it flips i gamma5
    const Mat2 lhs5 = sc * (i * g.gamma5).conj() * sc_inv;
    CHECK(max_abs_diff(lhs5, i * g.gamma5 * Cx(-1.0)) < 1e-15);
  }
}

TEST_CASE("charge conjugation of basis spinors at nu = 0") {
  const Vec2 up = charge_conjugate(Vec2{1.0, 0.0}, 0.0);
  CHECK(up.c1 == Cx(1.0));
  CHECK(up.c2 == Cx(0.0));

  const Vec2 down = charge_conjugate(Vec2{0.0, 1.0}, 0.0);
  CHECK(down.c1 == Cx(0.0));
  CHECK(down.c2 == Cx(-1.0));
}

TEST_CASE("charge conjugation is an involution for random psi and nu") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * pi);
  for (int trial = 0; trial < 200; ++trial) {
    const Vec2 psi = random_spinor(rng);
    const double nu = phase(rng);
    const Vec2 twice = charge_conjugate(charge_conjugate(psi, nu), nu);
    CHECK((twice - psi).max_abs() < 1e-13);
  }
}

TEST_CASE("chirality split in the weyl representation") {
  const ChiralParts p = chirality_split(Vec2{3.0, Cx(0.0, 4.0)});
  CHECK(p.plus.c1 == Cx(3.0));
  CHECK(p.plus.c2 == Cx(0.0));
  CHECK(p.minus.c1 == Cx(0.0));
  CHECK(p.minus.c2 == Cx(0.0, 4.0));

  const ChiralParts q = chirality_split(Vec2{1.0, 0.0});
  CHECK(q.plus.c1 == Cx(1.0));
  CHECK(q.minus.max_abs() == 0.0);

  // gamma5 eigenstates, and the parts recompose the spinor
  std::mt19937_64 rng(7);
  const GammaSet g = weyl_gamma_set();
  for (int trial = 0; trial < 50; ++trial) {
    const Vec2 psi = random_spinor(rng);
    const ChiralParts parts = chirality_split(psi);
    CHECK((parts.plus + parts.minus - psi).max_abs() == 0.0);
    CHECK((g.gamma5 * parts.plus - parts.plus).max_abs() == 0.0);
    CHECK((g.gamma5 * parts.minus + parts.minus).max_abs() == 0.0);
  }
}

TEST_CASE("conjugation and chirality projection commute: (psi_pm)_C = (psi_C)_pm") {
  // The 1+1-dimensional peculiarity: charge conjugation does not swap the
  // chiral sectors.
  std::mt19937_64 rng(1234);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * pi);
  for (int trial = 0; trial < 200; ++trial) {
    const Vec2 psi = random_spinor(rng);
    const double nu = phase(rng);

    const Vec2 route_a = charge_conjugate(chirality_split(psi).plus, nu);
    const Vec2 route_b = chirality_split(charge_conjugate(psi, nu)).plus;
    CHECK((route_a - route_b).max_abs() < 1e-13);

    const Vec2 route_c = charge_conjugate(chirality_split(psi).minus, nu);
    const Vec2 route_d = chirality_split(charge_conjugate(psi, nu)).minus;
    CHECK((route_c - route_d).max_abs() < 1e-13);
  }
}

TEST_CASE("physical params validation") {
  PhysicalParams p;
  CHECK_NOTHROW(p.validate());

  PhysicalParams bad_l = p;
  bad_l.L = 0.0;
  CHECK_THROWS_AS(bad_l.validate(), std::invalid_argument);

  PhysicalParams bad_mass = p;
  bad_mass.mass = -0.1;
  CHECK_THROWS_AS(bad_mass.validate(), std::invalid_argument);

  PhysicalParams bad_nu = p;
  bad_nu.nu = 2.0 * pi;
  CHECK_THROWS_AS(bad_nu.validate(), std::invalid_argument);

  // defaults: natural units, nu = 3*pi/2
  CHECK(p.hbar == 1.0);
  CHECK(p.c == 1.0);
  CHECK(p.L == 1.0);
  CHECK(p.mass == 0.0);
  CHECK(p.nu == doctest::Approx(1.5 * pi));
}
