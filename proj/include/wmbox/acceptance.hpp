#pragma once

#include <string>
#include <vector>

#include "wmbox/evolution.hpp"
#include "wmbox/parallel.hpp"

namespace wmbox {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  /// Worst observed value normalized by its bound; pass iff margin < 1.
  double margin = 0.0;
  /// Human-readable residuals and counts.
  std::string detail;
};

struct AcceptanceOptions {
  /// Multiplies every bound; 0 turns every check into a guaranteed failure
  /// (fault-injection sanity).
  double tolerance_scale = 1.0;
  /// Masses exercised by the mass-independence criterion.
  std::vector<double> masses = {0.0, 0.5, 2.0};
  Exec exec = Exec::openmp;
};

/// Runs the whole verification suite in natural units (hbar = c = L = 1,
/// nu = 3*pi/2) and returns one result per criterion, in order.
std::vector<CriterionResult> run_acceptance_suite(
    const AcceptanceOptions& opts = {});

/// Builds a band-limited Majorana state inside the BC's mode span: a random
/// in-window eigenmode combination psi is symmetrized to psi + psi_C (exact
/// Majorana, conjugation-closed span) and round-tripped through
/// make_majorana_state. Requires a Majorana-compatible self-adjoint BC.
GridWaveFunction make_random_majorana_state(const MatrixBC& bc,
                                            const PhysicalParams& params,
                                            std::size_t grid_points,
                                            const EnergyWindow& window,
                                            unsigned seed,
                                            Exec exec = Exec::openmp);

}  // namespace wmbox
