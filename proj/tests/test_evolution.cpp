// Majorana state construction, mode expansion, eigenbasis evolution, and
// the observables that certify the dynamics: norm, endpoint currents,
// chirality, and the Majorana residual.

#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "wmbox/acceptance.hpp"
#include "wmbox/evolution.hpp"

using namespace wmbox;

namespace {

constexpr double pi = std::numbers::pi;

std::vector<double> sampled(std::size_t n, double (*fn)(double)) {
  std::vector<double> out(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    out[j] = fn(static_cast<double>(j) / static_cast<double>(n));
  }
  return out;
}

}  // namespace

TEST_CASE("constant u with v = 0 gives the uniform right-chiral state") {
  PhysicalParams p;
  p.nu = 0.0;
  const std::vector<double> u(257, 1.0);
  const std::vector<double> v(257, 0.0);
  const GridWaveFunction f = make_majorana_state(u, v, p.nu, p);

  const double inv_sqrt_l = 1.0 / std::sqrt(p.L);
  for (const Vec2& s : f.samples) {
    CHECK(std::abs(s.c1 - Cx(inv_sqrt_l)) < 1e-14);
    CHECK(std::abs(s.c2) == 0.0);
  }
  CHECK(observables(f, p.nu).majorana_residual < 1e-15);
  CHECK(observables(f, p.nu).chirality == doctest::Approx(1.0));
}

TEST_CASE("constant v at nu = 0 makes phi2 purely imaginary") {
  // The sign case of the Majorana relations: phi2 = -phi2*.
  PhysicalParams p;
  p.nu = 0.0;
  const std::vector<double> u(257, 0.0);
  const std::vector<double> v(257, 1.0);
  const GridWaveFunction f = make_majorana_state(u, v, p.nu, p);
  for (const Vec2& s : f.samples) {
    CHECK(std::abs(s.c2.real()) < 1e-15);
    CHECK(s.c2.imag() > 0.0);
    CHECK(std::abs(s.c2 + std::conj(s.c2)) < 1e-15);
  }
}

TEST_CASE("random majorana data satisfies the residual at nu = 3 pi / 2") {
  PhysicalParams p;  // default nu = 3 pi / 2
  std::mt19937_64 rng(314);
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<double> u(257);
  std::vector<double> v(257);
  for (std::size_t j = 0; j < u.size(); ++j) {
    u[j] = g(rng);
    v[j] = g(rng);
  }
  const GridWaveFunction f = make_majorana_state(u, v, p.nu, p);
  CHECK(observables(f, p.nu).majorana_residual < 1e-14);
  CHECK(l2_norm(f) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("majorana factory rejects degenerate input") {
  PhysicalParams p;
  const std::vector<double> zero(257, 0.0);
  CHECK_THROWS_AS(make_majorana_state(zero, zero, p.nu, p),
                  std::invalid_argument);
  const std::vector<double> wrong(100, 1.0);
  CHECK_THROWS_AS(make_majorana_state(zero, wrong, p.nu, p),
                  std::invalid_argument);
}

TEST_CASE("expanding an eigenfunction hits a single coefficient") {
  PhysicalParams p;
  const EnergyWindow window{-15.0, 15.0, 512};
  const Spectrum s = solve_spectrum(family_one(0.6, 0.8), window, p);
  REQUIRE(s.pairs.size() >= 3);

  const GridWaveFunction mode = eigenfunction(s.pairs[2], s, 256);
  const ModeExpansion exp = expand(mode, s);
  for (std::size_t i = 0; i < exp.coefficients.size(); ++i) {
    if (i == 2) {
      CHECK(std::abs(exp.coefficients[i]) == doctest::Approx(1.0));
    } else {
      CHECK(std::abs(exp.coefficients[i]) < 1e-10);
    }
  }
  CHECK(std::abs(exp.truncation_error) < 1e-12);
}

TEST_CASE("constant majorana state under periodic BC populates only k = 0") {
  PhysicalParams p;
  const std::vector<double> u = sampled(256, [](double) { return 0.8; });
  const std::vector<double> v = sampled(256, [](double) { return 0.6; });
  const GridWaveFunction f = make_majorana_state(u, v, p.nu, p);

  const Spectrum s =
      solve_spectrum(periodic_bc(), default_mode_window(p), p);
  const ModeExpansion exp = expand(f, s);
  for (std::size_t i = 0; i < exp.coefficients.size(); ++i) {
    if (std::abs(s.pairs[i].E) > 1e-9) {
      CHECK(std::abs(exp.coefficients[i]) < 1e-12);
    }
  }
  CHECK(std::abs(exp.truncation_error) < 1e-12);
}

TEST_CASE("an equal two-mode mix expands to coefficients 1/sqrt(2)") {
  PhysicalParams p;
  const EnergyWindow window{-15.0, 15.0, 512};
  const Spectrum s = solve_spectrum(minus_gamma5_bc(), window, p);
  REQUIRE(s.pairs.size() >= 4);

  const GridWaveFunction a = eigenfunction(s.pairs[1], s, 256);
  const GridWaveFunction b = eigenfunction(s.pairs[3], s, 256);
  std::vector<Vec2> mixed(257);
  for (std::size_t j = 0; j < mixed.size(); ++j) {
    mixed[j] = std::sqrt(0.5) * (a.samples[j] + b.samples[j]);
  }
  const ModeExpansion exp =
      expand(make_grid_wave_function(std::move(mixed), p), s);
  CHECK(std::abs(exp.coefficients[1]) ==
        doctest::Approx(std::sqrt(0.5)).epsilon(1e-10));
  CHECK(std::abs(exp.coefficients[3]) ==
        doctest::Approx(std::sqrt(0.5)).epsilon(1e-10));
}

TEST_CASE("sum rule: captured weight never exceeds one") {
  PhysicalParams p;
  std::mt19937_64 rng(2718);
  std::normal_distribution<double> g(0.0, 1.0);
  const Spectrum s =
      solve_spectrum(family_two(0.8, 0.6), default_mode_window(p), p);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<double> u(257);
    std::vector<double> v(257);
    for (std::size_t j = 0; j < u.size(); ++j) {
      u[j] = g(rng);
      v[j] = g(rng);
    }
    const ModeExpansion exp = expand(make_majorana_state(u, v, p.nu, p), s);
    double captured = 0.0;
    for (const Cx& c : exp.coefficients) {
      captured += std::norm(c);
    }
    CHECK(captured <= 1.0 + 1e-10);
    CHECK(exp.truncation_error >= -1e-10);
  }
}

TEST_CASE("expand validates its preconditions") {
  PhysicalParams p;
  const Spectrum good =
      solve_spectrum(periodic_bc(), EnergyWindow{-10.0, 10.0, 128}, p);

  PhysicalParams other = p;
  other.L = 2.0;
  const std::vector<double> u(257, 1.0);
  const std::vector<double> v(257, 0.0);
  const GridWaveFunction mismatched = make_majorana_state(u, v, other.nu, other);
  CHECK_THROWS_AS(expand(mismatched, good), std::invalid_argument);

  // Out-of-window content is reported as truncation.
  const std::vector<double> spiky =
      sampled(256, [](double x) { return std::cos(44.0 * pi * x); });
  const std::vector<double> none(257, 0.0);
  const ModeExpansion exp =
      expand(make_majorana_state(spiky, none, p.nu, p), good);
  CHECK(exp.truncation_error > 1e-6);
  CHECK(!exp.warnings.empty());
}

TEST_CASE("evolution reproduces t = 0 and leaves single modes stationary") {
  PhysicalParams p;
  const Spectrum s =
      solve_spectrum(antiperiodic_bc(), default_mode_window(p), p);

  const std::vector<double> u =
      sampled(256, [](double x) { return std::cos(pi * x); });
  const std::vector<double> v =
      sampled(256, [](double x) { return std::sin(3.0 * pi * x); });
  const GridWaveFunction f = make_majorana_state(u, v, p.nu, p);
  const ModeExpansion exp = expand(f, s);

  const GridWaveFunction back = evolve(exp, 0.0);
  for (std::size_t j = 0; j < back.samples.size(); ++j) {
    CHECK((back.samples[j] - f.samples[j]).max_abs() < 1e-12);
  }

  // A single eigenmode only rotates its phase: the density is static.
  const GridWaveFunction mode = eigenfunction(s.pairs[2], s, 256);
  const ModeExpansion mode_exp = expand(mode, s);
  const GridWaveFunction later = evolve(mode_exp, 1.7);
  for (std::size_t j = 0; j < later.samples.size(); ++j) {
    const double d0 = std::norm(mode.samples[j].c1) +
                      std::norm(mode.samples[j].c2);
    const double dt = std::norm(later.samples[j].c1) +
                      std::norm(later.samples[j].c2);
    CHECK(std::abs(dt - d0) < 1e-12);
  }
}

TEST_CASE("massless periodic evolution transports the components rigidly") {
  // phi1(x, t) = phi1(x - ct, 0) and phi2(x, t) = phi2(x + ct, 0); at
  // t = L/c the state returns to itself.
  PhysicalParams p;
  const std::size_t n = 256;
  const std::vector<double> u =
      sampled(n, [](double x) { return 1.0 + 0.5 * std::cos(2.0 * pi * x); });
  const std::vector<double> v =
      sampled(n, [](double x) { return 0.3 * std::sin(4.0 * pi * x); });
  const GridWaveFunction f = make_majorana_state(u, v, p.nu, p);
  const ModeExpansion exp =
      expand(f, solve_spectrum(periodic_bc(), default_mode_window(p), p));
  const GridWaveFunction base = evolve(exp, 0.0);

  const std::size_t shift = 64;  // ct = shift * dx
  const GridWaveFunction moved =
      evolve(exp, static_cast<double>(shift) * f.dx() / p.c);
  for (std::size_t j = 0; j <= n; ++j) {
    const Vec2 expected{base.samples[(j + n - shift) % n].c1,
                        base.samples[(j + shift) % n].c2};
    CHECK((moved.samples[j] - expected).norm() < 1e-8);
  }

  const GridWaveFunction full = evolve(exp, p.L / p.c);
  for (std::size_t j = 0; j <= n; ++j) {
    CHECK((full.samples[j] - base.samples[j]).norm() < 1e-10);
  }
}

TEST_CASE("observables of the uniform chiral state") {
  PhysicalParams p;
  p.nu = 0.0;
  const std::vector<double> u(257, 1.0);
  const std::vector<double> v(257, 0.0);
  const Observables obs =
      observables(make_majorana_state(u, v, p.nu, p), p.nu);
  CHECK(obs.chirality == doctest::Approx(1.0));
  CHECK(obs.norm == doctest::Approx(1.0));
  for (double j : obs.j_profile) {
    CHECK(j == doctest::Approx(p.c / p.L));
  }

  // Equal-weight chiral mix has zero net chirality.
  const std::vector<double> w(257, 1.0);
  const Observables mixed =
      observables(make_majorana_state(w, w, p.nu, p), p.nu);
  CHECK(std::abs(mixed.chirality) < 1e-14);
}

TEST_CASE("endpoint currents agree for BC-conforming states") {
  // j = c (|phi1|^2 - |phi2|^2) with j(L) = j(0) whenever Psi(L) = M Psi(0)
  // and M is sigma_z-pseudo-unitary.
  PhysicalParams p;
  for (const MatrixBC& bc : {family_one(0.6, 0.8), family_two(0.8, 0.6)}) {
    const Spectrum s = solve_spectrum(bc, EnergyWindow{-15.0, 15.0, 512}, p);
    // an arbitrary in-domain superposition
    std::vector<Vec2> mix(257);
    for (std::size_t i = 0; i < 4 && i < s.pairs.size(); ++i) {
      const GridWaveFunction mode = eigenfunction(s.pairs[i], s, 256);
      const Cx w = std::polar(0.5, 0.4 * static_cast<double>(i));
      for (std::size_t j = 0; j < mix.size(); ++j) {
        mix[j] += w * mode.samples[j];
      }
    }
    GridWaveFunction f = make_grid_wave_function(std::move(mix), p);
    normalize(f);
    const Observables obs = observables(f, p.nu);
    CHECK(std::abs(obs.j_at_L - obs.j_at_0) < 1e-12);
  }
}

TEST_CASE("dynamical consistency: periodic BC preserves the majorana residual") {
  PhysicalParams p;
  const std::vector<double> u =
      sampled(256, [](double x) { return 1.0 + 0.4 * std::cos(2.0 * pi * x); });
  const std::vector<double> v =
      sampled(256, [](double x) { return 0.7 - 0.3 * std::sin(4.0 * pi * x); });
  const GridWaveFunction f = make_majorana_state(u, v, p.nu, p);
  const ConsistencyReport rep = dynamical_consistency_check(
      periodic_bc(), f, p.nu, 10.0 * p.L / p.c, 60);
  CHECK(rep.pass);
  CHECK(rep.max_majorana_residual < 1e-10);
  CHECK(rep.max_norm_drift < 1e-10 + rep.truncation_error);
}

TEST_CASE("dynamical consistency: chiral data under -gamma5 keeps chirality") {
  PhysicalParams p;
  const std::vector<double> u =
      sampled(256, [](double x) { return std::cos(pi * x); });
  const std::vector<double> v(257, 0.0);
  const GridWaveFunction f = make_majorana_state(u, v, p.nu, p);
  const ConsistencyReport rep = dynamical_consistency_check(
      minus_gamma5_bc(), f, p.nu, 10.0 * p.L / p.c, 60);
  CHECK(rep.pass);
  CHECK(rep.chirality_gated);
  CHECK(rep.max_chirality_drift < 1e-10);
}

TEST_CASE("dynamical consistency: family BCs keep the endpoint currents equal") {
  PhysicalParams p;
  const MatrixBC bc = family_one(0.6, 0.8);
  const GridWaveFunction f = make_random_majorana_state(
      bc, p, 256, default_mode_window(p), 21u);
  const ConsistencyReport rep =
      dynamical_consistency_check(bc, f, p.nu, 10.0 * p.L / p.c, 60);
  CHECK(rep.pass);
  CHECK(rep.max_current_mismatch < 1e-10);
  CHECK(rep.max_majorana_residual < 1e-10);
}

TEST_CASE("dynamical consistency rejects majorana-incompatible BCs") {
  PhysicalParams p;
  const std::vector<double> u(257, 1.0);
  const std::vector<double> v(257, 0.0);
  const GridWaveFunction f = make_majorana_state(u, v, p.nu, p);
  const MatrixBC tilted(Mat2::diag(std::polar(1.0, pi / 3.0), 1.0));
  CHECK_THROWS_AS(
      dynamical_consistency_check(tilted, f, p.nu, 1.0, 10),
      std::invalid_argument);
}

TEST_CASE("chirality is not conserved once the BC mixes the components") {
  // family one with m0 != 0 couples phi1 and phi2 at the walls; a two-mode
  // superposition shows an O(0.1) chirality swing.
  PhysicalParams p;
  const MatrixBC bc = family_one(0.6, 0.8);
  const Spectrum s = solve_spectrum(bc, EnergyWindow{-15.0, 15.0, 512}, p);

  std::size_t ia = s.pairs.size();
  std::size_t ib = s.pairs.size();
  for (std::size_t i = 0; i < s.pairs.size(); ++i) {
    if (std::abs(s.pairs[i].E - pi) < 1e-6) ia = i;
    if (std::abs(s.pairs[i].E - 2.0 * pi) < 1e-6) ib = i;
  }
  REQUIRE(ia < s.pairs.size());
  REQUIRE(ib < s.pairs.size());

  const GridWaveFunction a = eigenfunction(s.pairs[ia], s, 256);
  const GridWaveFunction b = eigenfunction(s.pairs[ib], s, 256);
  std::vector<Vec2> mix(257);
  for (std::size_t j = 0; j < mix.size(); ++j) {
    mix[j] = std::sqrt(0.5) * (a.samples[j] + b.samples[j]);
  }
  const ModeExpansion exp =
      expand(make_grid_wave_function(std::move(mix), p), s);

  double lo = 1.0;
  double hi = -1.0;
  for (int step = 0; step < 50; ++step) {
    const double t = 4.0 * static_cast<double>(step) / 49.0;
    const double chi = observables(evolve(exp, t), p.nu).chirality;
    lo = std::min(lo, chi);
    hi = std::max(hi, chi);
  }
  CHECK(hi - lo > 1e-3);
}
