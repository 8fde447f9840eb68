#include "wmbox/algebra.hpp"

#include <cmath>
#include <stdexcept>

namespace wmbox {

void PhysicalParams::validate() const {
  if (!(hbar > 0.0) || !(c > 0.0) || !(L > 0.0)) {
    throw std::invalid_argument("PhysicalParams: hbar, c, L must be positive");
  }
  if (!(mass >= 0.0)) {
    throw std::invalid_argument("PhysicalParams: mass must be non-negative");
  }
  if (!(nu >= 0.0) || !(nu < 2.0 * std::numbers::pi)) {
    throw std::invalid_argument("PhysicalParams: nu must lie in [0, 2*pi)");
  }
}

GammaSet weyl_gamma_set() {
  GammaSet g;
  g.gamma0 = sigma_x();
  // -i sigma_y = [[0,-1],[1,0]]
  g.gamma1 = Mat2{0.0, -1.0, 1.0, 0.0};
  g.gamma5 = sigma_z();
  return g;
}

double clifford_residual(const GammaSet& g) {
  const Mat2 id = Mat2::identity();
  const Mat2 gammas[2] = {g.gamma0, g.gamma1};
  const double metric[2][2] = {{1.0, 0.0}, {0.0, -1.0}};

  double clifford = 0.0;
  for (int mu = 0; mu < 2; ++mu) {
    for (int nu = 0; nu < 2; ++nu) {
      const Mat2 anti = gammas[mu] * gammas[nu] + gammas[nu] * gammas[mu];
      clifford = std::max(clifford,
                          max_abs_diff(anti, id * Cx(2.0 * metric[mu][nu])));
    }
  }

  double adjoint = 0.0;
  for (const Mat2& gm : gammas) {
    adjoint = std::max(adjoint,
                       max_abs_diff(gm.adjoint(), g.gamma0 * gm * g.gamma0));
  }

  double chirality = max_abs_diff(g.gamma5, g.gamma0 * g.gamma1);
  chirality = std::max(chirality, max_abs_diff(g.gamma5 * g.gamma5, id));
  chirality = std::max(chirality, max_abs_diff(g.gamma5, g.gamma5.adjoint()));
  for (const Mat2& gm : gammas) {
    chirality = std::max(
        chirality, (g.gamma5 * gm + gm * g.gamma5).max_abs());
  }

  return clifford + adjoint + chirality;
}

ChiralProjectors chiral_projectors(const GammaSet& g, double tol) {
  if (clifford_residual(g) >= tol) {
    throw std::invalid_argument(
        "chiral_projectors: gamma set does not satisfy the Clifford "
        "relations");
  }
  const Mat2 id = Mat2::identity();
  return {(id + g.gamma5) * Cx(0.5), (id - g.gamma5) * Cx(0.5)};
}

Mat2 charge_conjugation_matrix(double nu) {
  return std::polar(1.0, nu) * sigma_z();
}

Vec2 charge_conjugate(const Vec2& psi, double nu) {
  return charge_conjugation_matrix(nu) * psi.conj();
}

ChiralParts chirality_split(const Vec2& psi) {
  return {Vec2{psi.c1, 0.0}, Vec2{0.0, psi.c2}};
}

}  // namespace wmbox
