#pragma once

#include <span>
#include <string>
#include <vector>

#include "wmbox/spectral.hpp"
#include "wmbox/state.hpp"

namespace wmbox {

/// Expansion of a grid state over a spectrum's eigenfunctions. `basis`
/// holds the sampled modes, orthonormalized within degenerate clusters
/// (Gram-Schmidt in amplitude-phase order), aligned with `coefficients`.
///
/// Trapezoid mode orthogonality is exact for the massless spectra; for
/// massive spectra it holds to O(1/N^2), which bounds what evolve() can
/// conserve.
struct ModeExpansion {
  std::vector<Cx> coefficients;
  Spectrum spectrum;
  double truncation_error = 0.0;
  std::vector<std::vector<Vec2>> basis;
  std::size_t grid_size = 0;
  std::vector<std::string> warnings;
};

struct Observables {
  double norm = 0.0;
  double j_at_0 = 0.0;
  double j_at_L = 0.0;
  std::vector<double> j_profile;
  double chirality = 0.0;
  double majorana_residual = 0.0;
};

struct ConsistencyReport {
  double max_norm_drift = 0.0;
  double max_majorana_residual = 0.0;
  double max_current_mismatch = 0.0;
  double max_chirality_drift = 0.0;
  /// Whether chirality drift participates in `pass` (chirality-preserving
  /// BC and chiral initial data).
  bool chirality_gated = false;
  double truncation_error = 0.0;
  bool pass = false;
  std::vector<std::string> warnings;
};

/// Builds a state satisfying both Majorana sign relations exactly:
/// phi1 = e^{i nu/2} u, phi2 = e^{i (nu+pi)/2} v with u, v real, so that
/// phi1 = e^{i nu} phi1* and phi2 = -e^{i nu} phi2*. Normalized to unit
/// L2 norm; throws on an identically zero state.
GridWaveFunction make_majorana_state(std::span<const double> u,
                                     std::span<const double> v, double nu,
                                     const PhysicalParams& params);

/// Coefficients c_n = <Psi_n, Psi> by trapezoid quadrature. Requires a
/// self-adjoint BC and a state grid matching the spectrum's params.
/// truncation_error = 1 - sum |c_n|^2 (for a normalized input).
ModeExpansion expand(const GridWaveFunction& state, const Spectrum& spectrum,
                     Exec exec = Exec::openmp);

/// Psi(x, t) = sum_n c_n e^{-i E_n t / hbar} Psi_n(x); exact within
/// truncation.
GridWaveFunction evolve(const ModeExpansion& expansion, double t,
                        Exec exec = Exec::openmp);

/// Norm, current density profile and endpoints, chirality <Gamma5>, and the
/// Majorana residual ||Psi - S_C Psi*|| / ||Psi||.
Observables observables(const GridWaveFunction& state, double nu);

/// Expands `initial` under `bc`, evolves across [0, t_final] at `steps`
/// equally spaced sample times, and reports the worst norm drift, Majorana
/// residual, endpoint-current mismatch, and (when gated) chirality drift.
ConsistencyReport dynamical_consistency_check(const MatrixBC& bc,
                                              const GridWaveFunction& initial,
                                              double nu, double t_final,
                                              std::size_t steps,
                                              const EnergyWindow& window,
                                              Exec exec = Exec::openmp);

/// Same, with the default mode window |E| <= 40 hbar c / L.
ConsistencyReport dynamical_consistency_check(const MatrixBC& bc,
                                              const GridWaveFunction& initial,
                                              double nu, double t_final,
                                              std::size_t steps,
                                              Exec exec = Exec::openmp);

/// Default spectral window for dynamics, |E| <= 40 hbar c / L.
EnergyWindow default_mode_window(const PhysicalParams& params);

}  // namespace wmbox
