#pragma once

#include <numbers>

#include "wmbox/complex2.hpp"

namespace wmbox {

/// Physical configuration of the box problem. Natural units ħ = c = L = 1
/// are the defaults; all formulas keep the symbols so dimensional
/// configurations work too. `nu` is the charge-conjugation phase, threaded
/// explicitly everywhere it matters (never a global).
struct PhysicalParams {
  double hbar = 1.0;
  double c = 1.0;
  double L = 1.0;
  double mass = 0.0;
  double nu = 1.5 * std::numbers::pi;

  /// Throws std::invalid_argument on out-of-range values.
  void validate() const;
};

/// The 1+1D Dirac matrices in a fixed representation together with the
/// chirality matrix. Invariants (Clifford relations, adjoint relation,
/// gamma5 identities) are checked by clifford_residual, not enforced.
struct GammaSet {
  Mat2 gamma0;
  Mat2 gamma1;
  Mat2 gamma5;
};

struct ChiralProjectors {
  Mat2 plus;
  Mat2 minus;
};

struct ChiralParts {
  Vec2 plus;
  Vec2 minus;
};

/// Weyl representation: gamma0 = sigma_x, gamma1 = -i sigma_y,
/// gamma5 = gamma0 gamma1 = sigma_z.
GammaSet weyl_gamma_set();

/// Max-norm residual over the defining identities of a GammaSet:
///   gamma^mu gamma^nu + gamma^nu gamma^mu = 2 g^{mu nu} I,  g = diag(1,-1)
///   (gamma^mu)^dagger = gamma0 gamma^mu gamma0
///   gamma5 = gamma0 gamma1, gamma5^2 = I, gamma5 Hermitian,
///   gamma5 anticommutes with gamma0 and gamma1.
/// Returns the sum of the three group maxima; 0 for a valid set.
double clifford_residual(const GammaSet& g);

/// P± = (I ± gamma5)/2. Rejects a GammaSet whose clifford_residual is
/// above `tol` (std::invalid_argument).
ChiralProjectors chiral_projectors(const GammaSet& g, double tol = kDefaultTol);

/// S_C = e^{i nu} sigma_z. Unitary; conjugating i gamma^mu by it undoes the
/// complex conjugation for the Weyl set, and flips the sign of i gamma5.
Mat2 charge_conjugation_matrix(double nu);

/// psi_C = S_C psi*. Applying twice with the same nu returns psi exactly.
Vec2 charge_conjugate(const Vec2& psi, double nu);

/// Split into chirality eigenstates: plus = [psi1, 0], minus = [0, psi2]
/// in the Weyl representation; plus + minus = psi.
ChiralParts chirality_split(const Vec2& psi);

}  // namespace wmbox
