#pragma once

#include <string>
#include <vector>

#include "wmbox/complex2.hpp"
#include "wmbox/parallel.hpp"

namespace wmbox {

/// One-component Weyl boundary condition phi_a(L) = e^{i theta} phi_a(0).
/// branch selects the component: 1 for phi_1 (right-chiral), 2 for phi_2.
struct PhaseBC {
  int branch = 1;
  double theta = 0.0;

  /// Normalizes theta into [0, 2*pi); rejects branch outside {1,2}.
  static PhaseBC make(int branch, double theta);
};

/// Two-component boundary condition Psi(L) = M Psi(0). M must be
/// invertible so that Psi(0) = 0 iff Psi(L) = 0.
class MatrixBC {
 public:
  explicit MatrixBC(const Mat2& m, double tol = kDefaultTol);

  const Mat2& matrix() const { return m_; }

 private:
  Mat2 m_;
};

struct FlagResidual {
  bool ok = false;
  double residual = 0.0;
};

enum class FamilyKind { none, one, two };

struct FamilyMembership {
  FamilyKind kind = FamilyKind::none;
  /// (m0, m2) for family one, (m1, m3) for family two; unused otherwise.
  double p0 = 0.0;
  double p1 = 0.0;
};

struct BCClassification {
  FlagResidual self_adjoint;
  FlagResidual majorana_compatible;
  FlagResidual chirality_preserving;
  FamilyMembership family;
};

/// First self-adjoint family:
///   M = (1/m2) [[-1, -i m0], [-i m0, +1]],  m0^2 + m2^2 = 1, m2 != 0.
/// Throws on a broken normalization or on the singular point m2 = 0.
MatrixBC family_one(double m0, double m2, double tol = kDefaultTol);

/// Second self-adjoint family:
///   M = (1/m1) [[+1, -i m3], [+i m3, +1]],  m1^2 + m3^2 = 1, m1 != 0.
MatrixBC family_two(double m1, double m3, double tol = kDefaultTol);

/// ||M^dagger sigma_z M - sigma_z||_max. Zero iff the boundary form of the
/// Dirac Hamiltonian H = -i hbar c sigma_z d/dx vanishes on the BC domain,
/// i.e. M is sigma_z-pseudo-unitary (the group U(1,1)).
double self_adjointness_residual(const MatrixBC& bc);

/// The boundary condition obeyed by the charge conjugate: if
/// Psi(L) = M Psi(0) then Psi_C(L) = sigma_z M* sigma_z Psi_C(0).
/// Independent of the conjugation phase nu (the e^{+-i nu} cancel).
MatrixBC conjugated_bc(const MatrixBC& bc, double nu = 0.0);

/// Domain invariance under charge conjugation: residual
/// ||sigma_z M* sigma_z - M||_max. True means the Majorana constraint
/// Psi = Psi_C can be imposed on states in the BC domain.
FlagResidual is_majorana_compatible(const MatrixBC& bc,
                                    double tol = kDefaultTol);

/// A BC decouples into separate conditions on the chiral parts iff M
/// commutes with sigma_z, i.e. M is diagonal. Residual max(|M12|,|M21|).
FlagResidual is_chirality_preserving(const MatrixBC& bc,
                                     double tol = kDefaultTol);

/// Scans theta over a uniform grid on [0, 2*pi) and keeps the phases whose
/// one-component BC domain is invariant under conjugation (e^{i theta}
/// real). Grid candidates are refined by bisection on sin(theta) and
/// snapped to exact 0 and pi when within 1e-12. The result is {0, pi} for
/// either branch and any grid of at least 8 points.
std::vector<double> majorana_phase_scan(int branch, std::size_t grid_points,
                                         Exec exec = Exec::openmp);

/// Composes a Dirac BC from one admissible chiral phase per component:
/// M = diag(e^{i theta_plus}, e^{i theta_minus}). Rejects phases outside
/// {0, pi} (such chiral BCs are not Majorana-admissible).
MatrixBC compose_from_chiral(const PhaseBC& plus, const PhaseBC& minus);

struct ChiralBoundaryCondition {
  MatrixBC bc;
  double theta_plus;
  double theta_minus;
  std::string name;
};

/// The four Dirac BCs composable from Majorana-admissible chiral phases:
/// -gamma5, +gamma5, identity (periodic), -identity (antiperiodic).
std::vector<ChiralBoundaryCondition> enumerate_chiral_majorana_bcs();

/// Brute force over diagonal unit-modulus BCs diag(e^{i a}, e^{i b}) on a
/// grid x grid two-phase lattice with per-axis root refinement; returns the
/// Majorana-compatible self-adjoint survivors (exactly the four above).
std::vector<MatrixBC> enumerate_diagonal_majorana_bcs(
    std::size_t grid_points, Exec exec = Exec::openmp);

/// Fills every flag/residual and solves the family-membership shape match,
/// round-tripping reconstructed parameters through the family constructors.
BCClassification classify(const MatrixBC& bc, double tol = kDefaultTol);

// Named boundary conditions (the CLI map).
MatrixBC periodic_bc();
MatrixBC antiperiodic_bc();
MatrixBC plus_gamma5_bc();
MatrixBC minus_gamma5_bc();

}  // namespace wmbox
