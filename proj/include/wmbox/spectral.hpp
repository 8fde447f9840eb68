#pragma once

#include <string>
#include <variant>
#include <vector>

#include "wmbox/algebra.hpp"
#include "wmbox/boundary.hpp"
#include "wmbox/complex2.hpp"
#include "wmbox/parallel.hpp"
#include "wmbox/state.hpp"

namespace wmbox {

struct EnergyWindow {
  double e_min = 0.0;
  double e_max = 0.0;
  std::size_t scan_points = 512;

  void validate() const;
};

/// One quantized level. `amplitude` is the unit-norm spinor (A, B) at x = 0;
/// the eigenfunction is Psi(x) = T(x; E) * amplitude. Phase convention:
/// first nonzero component real and positive. `k` is the signed spatial
/// wavenumber, sign(E) * sqrt(E^2 - m^2 c^4) / (hbar c) (equal to E/(hbar c)
/// in the massless case; 0 inside a mass gap).
struct Eigenpair {
  double k = 0.0;
  double E = 0.0;
  Vec2 amplitude;
  int degeneracy_index = 0;
};

struct Spectrum {
  std::vector<Eigenpair> pairs;
  EnergyWindow window;
  std::variant<PhaseBC, MatrixBC> bc;
  PhysicalParams params;
  std::vector<std::string> warnings;
};

/// Spatial propagator of the stationary problem across [0, x]:
///   T(x; E) = exp[(i x / hbar c) Q],  Q = E sigma_z - i m c^2 sigma_y,
/// evaluated in closed form through Q^2 = (E^2 - m^2 c^4) I. det T = 1 and
/// T^dagger sigma_z T = sigma_z for real E. Massless case reduces to
/// diag(e^{ikx}, e^{-ikx}) with k = E / (hbar c).
Mat2 transfer_matrix_at(double x, double E, const PhysicalParams& params);

/// T across the whole box, T(L; E).
Mat2 transfer_matrix(double E, const PhysicalParams& params);

/// det(M - T(L; E)); zero (within tolerance) iff E is an eigenvalue.
Cx quantization_residual(double E, const MatrixBC& bc,
                         const PhysicalParams& params);

struct SolveOptions {
  Exec exec = Exec::openmp;
  /// When true, a non-self-adjoint BC produces a warning instead of an
  /// error; only real roots located as modulus minima are reported.
  bool allow_non_self_adjoint = false;
  /// Accept a refined candidate as a root when the smallest singular value
  /// of M - T is below this.
  double root_accept_tol = 1e-9;
  /// Both singular values below this at a root means a 2D null space.
  double degeneracy_tol = 1e-8;
  /// Roots closer than this (times hbar*c/L) are merged.
  double cluster_tol_factor = 1e-9;
};

/// Scans |det(M - T)| over the window, refines sign changes by bisection on
/// the phase-rotated real determinant and modulus minima by golden-section
/// on the smallest singular value of M - T, and builds boundary-compatible
/// amplitudes from the null space. Double roots are reported twice with
/// degeneracy_index 0 and 1.
Spectrum solve_spectrum(const MatrixBC& bc, const EnergyWindow& window,
                        const PhysicalParams& params,
                        const SolveOptions& opts = {});

/// One-component Weyl levels under phi_a(L) = e^{i theta} phi_a(0):
///   E_n = (-1)^{a-1} hbar c (theta + 2 pi n) / L,
/// embedded as two-component pairs with the unused component zero.
/// Massless only (throws for params.mass != 0).
Spectrum weyl_spectrum(const PhaseBC& pbc, const EnergyWindow& window,
                       const PhysicalParams& params);

/// Samples Psi(x) = T(x; E) * amplitude on grid_points+1 points including
/// both ends and L2-normalizes by trapezoid quadrature.
GridWaveFunction eigenfunction(const Eigenpair& pair, const MatrixBC& bc,
                               const PhysicalParams& params,
                               std::size_t grid_points);
GridWaveFunction eigenfunction(const Eigenpair& pair, const PhaseBC& pbc,
                               const PhysicalParams& params,
                               std::size_t grid_points);
GridWaveFunction eigenfunction(const Eigenpair& pair, const Spectrum& spectrum,
                               std::size_t grid_points);

/// ||Psi(L) - M Psi(0)|| (or the one-component analogue for a PhaseBC).
double boundary_residual(const GridWaveFunction& f,
                         const std::variant<PhaseBC, MatrixBC>& bc);

}  // namespace wmbox
