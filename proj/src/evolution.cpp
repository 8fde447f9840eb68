#include "wmbox/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wmbox {

namespace {

Cx weighted_inner(const std::vector<Vec2>& a, const std::vector<Vec2>& b,
                  double h) {
  const std::size_t n = a.size() - 1;
  Cx acc = 0.5 * (dot(a[0], b[0]) + dot(a[n], b[n]));
  for (std::size_t j = 1; j < n; ++j) {
    acc += dot(a[j], b[j]);
  }
  return h * acc;
}

double weighted_norm(const std::vector<Vec2>& a, double h) {
  return std::sqrt(std::real(weighted_inner(a, a, h)));
}

bool same_params(const PhysicalParams& a, const PhysicalParams& b) {
  return a.hbar == b.hbar && a.c == b.c && a.L == b.L && a.mass == b.mass;
}

}  // namespace

EnergyWindow default_mode_window(const PhysicalParams& params) {
  const double scale = 40.0 * params.hbar * params.c / params.L;
  return EnergyWindow{-scale, scale, 1024};
}

GridWaveFunction make_majorana_state(std::span<const double> u,
                                     std::span<const double> v, double nu,
                                     const PhysicalParams& params) {
  if (u.size() != v.size()) {
    throw std::invalid_argument("make_majorana_state: u/v size mismatch");
  }
  if (u.size() < kMinGridSize + 1) {
    throw std::invalid_argument("make_majorana_state: grid too small");
  }
  const Cx phase_u = std::polar(1.0, 0.5 * nu);
  const Cx phase_v = std::polar(1.0, 0.5 * (nu + std::numbers::pi));
  std::vector<Vec2> samples(u.size());
  for (std::size_t j = 0; j < u.size(); ++j) {
    samples[j] = Vec2{phase_u * u[j], phase_v * v[j]};
  }
  GridWaveFunction f = make_grid_wave_function(std::move(samples), params);
  normalize(f);  // throws on the zero state
  return f;
}

ModeExpansion expand(const GridWaveFunction& state, const Spectrum& spectrum,
                     Exec exec) {
  if (!same_params(state.params, spectrum.params)) {
    throw std::invalid_argument(
        "expand: state parameters do not match the spectrum");
  }
  if (std::holds_alternative<MatrixBC>(spectrum.bc)) {
    const double sa =
        self_adjointness_residual(std::get<MatrixBC>(spectrum.bc));
    if (sa >= kDefaultTol) {
      throw std::invalid_argument(
          "expand: spectrum's boundary condition is not self-adjoint");
    }
  }

  ModeExpansion exp;
  exp.spectrum = spectrum;
  exp.grid_size = state.grid_size();

  const std::size_t n_modes = spectrum.pairs.size();
  exp.basis.resize(n_modes);
  parallel_for(exec, n_modes, [&](std::size_t i) {
    exp.basis[i] =
        eigenfunction(spectrum.pairs[i], spectrum, state.grid_size()).samples;
  });

  // Orthonormalize within degenerate clusters (modified Gram-Schmidt in
  // stored order; the amplitude phase convention makes the order
  // deterministic).
  const double h = state.dx();
  const double cluster =
      1e-9 * spectrum.params.hbar * spectrum.params.c / spectrum.params.L;
  std::size_t i = 0;
  while (i < n_modes) {
    std::size_t j = i + 1;
    while (j < n_modes &&
           std::abs(spectrum.pairs[j].E - spectrum.pairs[i].E) < cluster) {
      ++j;
    }
    for (std::size_t a = i; a < j; ++a) {
      for (std::size_t b = i; b < a; ++b) {
        const Cx overlap = weighted_inner(exp.basis[b], exp.basis[a], h);
        for (std::size_t s = 0; s < exp.basis[a].size(); ++s) {
          exp.basis[a][s] = exp.basis[a][s] - overlap * exp.basis[b][s];
        }
      }
      const double nrm = weighted_norm(exp.basis[a], h);
      if (nrm < 1e-12) {
        throw std::runtime_error(
            "expand: degenerate cluster collapsed during orthonormalization");
      }
      const Cx s = 1.0 / nrm;
      for (Vec2& v : exp.basis[a]) {
        v = s * v;
      }
    }
    i = j;
  }

  exp.coefficients.resize(n_modes);
  parallel_for(exec, n_modes, [&](std::size_t m) {
    exp.coefficients[m] = weighted_inner(exp.basis[m], state.samples, h);
  });

  double captured = 0.0;
  for (const Cx& c : exp.coefficients) {
    captured += std::norm(c);
  }
  exp.truncation_error = 1.0 - captured;
  if (exp.truncation_error > 1e-6) {
    exp.warnings.push_back(
        "mode window too small: truncation error above 1e-6");
  }
  return exp;
}

GridWaveFunction evolve(const ModeExpansion& expansion, double t, Exec exec) {
  const std::size_t n_modes = expansion.coefficients.size();
  const std::size_t n_samples = expansion.grid_size + 1;
  const PhysicalParams& params = expansion.spectrum.params;

  std::vector<Cx> phased(n_modes);
  for (std::size_t m = 0; m < n_modes; ++m) {
    phased[m] = expansion.coefficients[m] *
                std::polar(1.0, -expansion.spectrum.pairs[m].E * t / params.hbar);
  }

  std::vector<Vec2> samples(n_samples);
  parallel_for(exec, n_samples, [&](std::size_t j) {
    Vec2 acc;
    for (std::size_t m = 0; m < n_modes; ++m) {
      acc += phased[m] * expansion.basis[m][j];
    }
    samples[j] = acc;
  });
  return GridWaveFunction{std::move(samples), params};
}

Observables observables(const GridWaveFunction& state, double nu) {
  Observables obs;
  const std::size_t n = state.grid_size();
  const double h = state.dx();
  const double c = state.params.c;

  obs.j_profile.resize(n + 1);
  double weighted_chi = 0.0;
  double norm2 = 0.0;
  double maj2 = 0.0;
  const Mat2 s_c = charge_conjugation_matrix(nu);
  for (std::size_t j = 0; j <= n; ++j) {
    const Vec2& v = state.samples[j];
    const double p1 = std::norm(v.c1);
    const double p2 = std::norm(v.c2);
    obs.j_profile[j] = c * (p1 - p2);
    const double w = (j == 0 || j == n) ? 0.5 : 1.0;
    weighted_chi += w * (p1 - p2);
    norm2 += w * (p1 + p2);
    maj2 += w * (v - s_c * v.conj()).norm() * (v - s_c * v.conj()).norm();
  }
  obs.j_at_0 = obs.j_profile.front();
  obs.j_at_L = obs.j_profile.back();
  obs.norm = std::sqrt(h * norm2);
  obs.chirality = norm2 > 0.0 ? weighted_chi / norm2 : 0.0;
  obs.majorana_residual =
      obs.norm > 0.0 ? std::sqrt(h * maj2) / obs.norm : 0.0;
  return obs;
}

ConsistencyReport dynamical_consistency_check(const MatrixBC& bc,
                                              const GridWaveFunction& initial,
                                              double nu, double t_final,
                                              std::size_t steps,
                                              const EnergyWindow& window,
                                              Exec exec) {
  if (steps < 2) {
    throw std::invalid_argument("dynamical_consistency_check: steps >= 2");
  }
  const FlagResidual mj = is_majorana_compatible(bc);
  if (!mj.ok) {
    throw std::invalid_argument(
        "dynamical_consistency_check: boundary condition is not "
        "Majorana-compatible");
  }

  SolveOptions opts;
  opts.exec = exec;
  const Spectrum spectrum = solve_spectrum(bc, window, initial.params, opts);
  const ModeExpansion expansion = expand(initial, spectrum, exec);

  ConsistencyReport rep;
  rep.truncation_error = std::max(expansion.truncation_error, 0.0);
  rep.warnings = expansion.warnings;

  const bool chirality_preserving = is_chirality_preserving(bc).ok;

  double norm0 = 0.0;
  double chi0 = 0.0;
  for (std::size_t s = 0; s < steps; ++s) {
    const double t =
        t_final * static_cast<double>(s) / static_cast<double>(steps - 1);
    const GridWaveFunction psi = evolve(expansion, t, exec);
    const Observables obs = observables(psi, nu);
    if (s == 0) {
      norm0 = obs.norm;
      chi0 = obs.chirality;
      rep.chirality_gated =
          chirality_preserving && std::abs(std::abs(chi0) - 1.0) < 1e-6;
    }
    rep.max_norm_drift =
        std::max(rep.max_norm_drift, std::abs(obs.norm - norm0));
    rep.max_majorana_residual =
        std::max(rep.max_majorana_residual, obs.majorana_residual);
    rep.max_current_mismatch =
        std::max(rep.max_current_mismatch, std::abs(obs.j_at_L - obs.j_at_0));
    rep.max_chirality_drift =
        std::max(rep.max_chirality_drift, std::abs(obs.chirality - chi0));
  }

  const double bound = 1e-9 + rep.truncation_error;
  rep.pass = rep.max_norm_drift < bound &&
             rep.max_majorana_residual < bound &&
             rep.max_current_mismatch < bound &&
             (!rep.chirality_gated || rep.max_chirality_drift < bound);
  return rep;
}

ConsistencyReport dynamical_consistency_check(const MatrixBC& bc,
                                              const GridWaveFunction& initial,
                                              double nu, double t_final,
                                              std::size_t steps, Exec exec) {
  return dynamical_consistency_check(bc, initial, nu, t_final, steps,
                                     default_mode_window(initial.params),
                                     exec);
}

}  // namespace wmbox
