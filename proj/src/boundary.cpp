#include "wmbox/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wmbox {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_angle(double theta) {
  double t = std::fmod(theta, kTwoPi);
  if (t < 0.0) {
    t += kTwoPi;
  }
  return t;
}

/// Snaps an angle to 0 or pi when within `tol`; 2*pi wraps to 0.
double snap_root(double theta, double tol = 1e-12) {
  const double t = wrap_angle(theta);
  if (t < tol || kTwoPi - t < tol) {
    return 0.0;
  }
  if (std::abs(t - std::numbers::pi) < tol) {
    return std::numbers::pi;
  }
  return t;
}

/// Bisection for a sign change of sin(theta) on [lo, hi].
double refine_sin_root(double lo, double hi) {
  double flo = std::sin(lo);
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = std::sin(mid);
    if (fm == 0.0) {
      return mid;
    }
    if ((flo < 0.0) != (fm < 0.0)) {
      hi = mid;
    } else {
      lo = mid;
      flo = fm;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

PhaseBC PhaseBC::make(int branch, double theta) {
  if (branch != 1 && branch != 2) {
    throw std::invalid_argument("PhaseBC: branch must be 1 or 2");
  }
  return PhaseBC{branch, wrap_angle(theta)};
}

MatrixBC::MatrixBC(const Mat2& m, double tol) : m_(m) {
  if (!m.finite()) {
    throw std::invalid_argument("MatrixBC: non-finite entries");
  }
  if (std::abs(m.det()) <= tol) {
    throw std::invalid_argument(
        "MatrixBC: matrix must be invertible (Psi(0)=0 iff Psi(L)=0)");
  }
}

MatrixBC family_one(double m0, double m2, double tol) {
  if (std::abs(m2) <= tol) {
    throw std::invalid_argument(
        "family_one: m2 = 0 is a singular point of the family");
  }
  if (std::abs(m0 * m0 + m2 * m2 - 1.0) >= tol) {
    throw std::invalid_argument("family_one: m0^2 + m2^2 must equal 1");
  }
  const double s = 1.0 / m2;
  const Cx off = Cx(0.0, -m0) * s;
  return MatrixBC(Mat2{-s, off, off, s});
}

MatrixBC family_two(double m1, double m3, double tol) {
  if (std::abs(m1) <= tol) {
    throw std::invalid_argument(
        "family_two: m1 = 0 is a singular point of the family");
  }
  if (std::abs(m1 * m1 + m3 * m3 - 1.0) >= tol) {
    throw std::invalid_argument("family_two: m1^2 + m3^2 must equal 1");
  }
  const double s = 1.0 / m1;
  return MatrixBC(Mat2{s, Cx(0.0, -m3) * s, Cx(0.0, m3) * s, s});
}

double self_adjointness_residual(const MatrixBC& bc) {
  const Mat2& m = bc.matrix();
  return max_abs_diff(m.adjoint() * sigma_z() * m, sigma_z());
}

MatrixBC conjugated_bc(const MatrixBC& bc, double /*nu*/) {
  // S_C M* S_C^{-1} = sigma_z M* sigma_z for S_C = e^{i nu} sigma_z.
  return MatrixBC(sigma_z() * bc.matrix().conj() * sigma_z());
}

FlagResidual is_majorana_compatible(const MatrixBC& bc, double tol) {
  const double r =
      max_abs_diff(sigma_z() * bc.matrix().conj() * sigma_z(), bc.matrix());
  return {r < tol, r};
}

FlagResidual is_chirality_preserving(const MatrixBC& bc, double tol) {
  const Mat2& m = bc.matrix();
  const double r = std::max(std::abs(m.m12), std::abs(m.m21));
  return {r < tol, r};
}

std::vector<double> majorana_phase_scan(int branch, std::size_t grid_points,
                                        Exec exec) {
  if (branch != 1 && branch != 2) {
    throw std::invalid_argument("majorana_phase_scan: branch must be 1 or 2");
  }
  if (grid_points < 8) {
    throw std::invalid_argument(
        "majorana_phase_scan: need at least 8 grid points");
  }

  // Admissibility residual |e^{i theta} - e^{-i theta}| = 2|sin theta| is
  // branch-independent; the signed sin is what we bracket on.
  const std::size_t n = grid_points;
  const double h = kTwoPi / static_cast<double>(n);
  std::vector<double> s(n);
  parallel_for(exec, n, [&](std::size_t j) {
    s[j] = std::sin(h * static_cast<double>(j));
  });

  std::vector<double> roots;
  for (std::size_t j = 0; j < n; ++j) {
    const double a = s[j];
    const double b = s[(j + 1) % n];
    const double ta = h * static_cast<double>(j);
    if (std::abs(a) < 1e-14) {
      roots.push_back(snap_root(ta));
      continue;
    }
    if ((a < 0.0) != (b < 0.0)) {
      roots.push_back(snap_root(refine_sin_root(ta, ta + h)));
    }
  }

  std::sort(roots.begin(), roots.end());
  std::vector<double> out;
  for (double r : roots) {
    if (out.empty() || r - out.back() > 1e-9) {
      out.push_back(r);
    }
  }
  return out;
}

MatrixBC compose_from_chiral(const PhaseBC& plus, const PhaseBC& minus) {
  auto admissible_sign = [](double theta) {
    const double t = snap_root(theta);
    if (t == 0.0) {
      return Cx(1.0, 0.0);
    }
    if (t == std::numbers::pi) {
      return Cx(-1.0, 0.0);
    }
    throw std::invalid_argument(
        "compose_from_chiral: chiral phase must be 0 or pi (other phases "
        "are not Majorana-admissible)");
  };
  return MatrixBC(
      Mat2::diag(admissible_sign(plus.theta), admissible_sign(minus.theta)));
}

std::vector<ChiralBoundaryCondition> enumerate_chiral_majorana_bcs() {
  const double pi = std::numbers::pi;
  std::vector<ChiralBoundaryCondition> out;
  out.push_back({compose_from_chiral(PhaseBC::make(1, pi), PhaseBC::make(2, 0.0)),
                 pi, 0.0, "minus_gamma5"});
  out.push_back({compose_from_chiral(PhaseBC::make(1, 0.0), PhaseBC::make(2, pi)),
                 0.0, pi, "plus_gamma5"});
  out.push_back({compose_from_chiral(PhaseBC::make(1, 0.0), PhaseBC::make(2, 0.0)),
                 0.0, 0.0, "periodic"});
  out.push_back({compose_from_chiral(PhaseBC::make(1, pi), PhaseBC::make(2, pi)),
                 pi, pi, "antiperiodic"});
  return out;
}

std::vector<MatrixBC> enumerate_diagonal_majorana_bcs(std::size_t grid_points,
                                                      Exec exec) {
  if (grid_points < 8) {
    throw std::invalid_argument(
        "enumerate_diagonal_majorana_bcs: need at least 8 grid points");
  }
  const std::size_t n = grid_points;
  const double h = kTwoPi / static_cast<double>(n);

  // Conjugation-invariance residual of diag(e^{ia}, e^{ib}); self-adjointness
  // is automatic for unit-modulus diagonal matrices.
  std::vector<double> res(n * n);
  parallel_for(exec, n * n, [&](std::size_t idx) {
    const double a = h * static_cast<double>(idx / n);
    const double b = h * static_cast<double>(idx % n);
    res[idx] = 2.0 * std::max(std::abs(std::sin(a)), std::abs(std::sin(b)));
  });

  auto at = [&](std::size_t i, std::size_t j) {
    return res[(i % n) * n + (j % n)];
  };

  // Flag grid minima in parallel, then refine the handful that survive.
  std::vector<char> candidate(n * n, 0);
  parallel_for(exec, n * n, [&](std::size_t idx) {
    const std::size_t i = idx / n;
    const std::size_t j = idx % n;
    const double r = res[idx];
    if (r > 2.5 * h) {
      return;
    }
    for (int di = -1; di <= 1; ++di) {
      for (int dj = -1; dj <= 1; ++dj) {
        if (di == 0 && dj == 0) {
          continue;
        }
        if (at(i + n + static_cast<std::size_t>(di),
               j + n + static_cast<std::size_t>(dj)) < r) {
          return;
        }
      }
    }
    candidate[idx] = 1;
  });

  std::vector<std::pair<double, double>> phases;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (candidate[i * n + j] == 0) {
        continue;
      }
      // The residual separates per axis: refine each phase independently.
      auto refine_axis = [&](double t0) {
        if (std::abs(std::sin(t0)) < 1e-14) {
          return snap_root(t0);
        }
        const double lo = t0 - h;
        const double hi = t0 + h;
        if ((std::sin(lo) < 0.0) != (std::sin(hi) < 0.0)) {
          return snap_root(refine_sin_root(lo, hi));
        }
        return snap_root(t0);
      };
      const double a = refine_axis(h * static_cast<double>(i));
      const double b = refine_axis(h * static_cast<double>(j));
      if (std::abs(std::sin(a)) > 1e-12 || std::abs(std::sin(b)) > 1e-12) {
        continue;
      }
      phases.emplace_back(a, b);
    }
  }

  std::sort(phases.begin(), phases.end());
  phases.erase(std::unique(phases.begin(), phases.end(),
                           [](const auto& p, const auto& q) {
                             return std::abs(p.first - q.first) < 1e-9 &&
                                    std::abs(p.second - q.second) < 1e-9;
                           }),
               phases.end());

  std::vector<MatrixBC> out;
  out.reserve(phases.size());
  for (const auto& [a, b] : phases) {
    // Survivors are snapped to exactly 0 or pi.
    const Cx ea = (a == 0.0) ? Cx(1.0) : Cx(-1.0);
    const Cx eb = (b == 0.0) ? Cx(1.0) : Cx(-1.0);
    out.push_back(MatrixBC(Mat2::diag(ea, eb)));
  }
  return out;
}

BCClassification classify(const MatrixBC& bc, double tol) {
  BCClassification c;
  const double sa = self_adjointness_residual(bc);
  c.self_adjoint = {sa < tol, sa};
  c.majorana_compatible = is_majorana_compatible(bc, tol);
  c.chirality_preserving = is_chirality_preserving(bc, tol);
  c.family = FamilyMembership{};

  const Mat2& m = bc.matrix();

  // Family one shape: M11 = -M22 real, M12 = M21 purely imaginary.
  const bool shape_one = std::abs(m.m11.imag()) < tol &&
                         std::abs(m.m22.imag()) < tol &&
                         std::abs(m.m11 + m.m22) < tol &&
                         std::abs(m.m12 - m.m21) < tol &&
                         std::abs(m.m12.real()) < tol &&
                         std::abs(m.m11.real()) > tol;
  if (shape_one) {
    const double m2 = -1.0 / m.m11.real();
    const double m0 = -m.m12.imag() * m2 + 0.0;
    if (std::abs(m0 * m0 + m2 * m2 - 1.0) < 1e-9) {
      try {
        if (approx_equal(family_one(m0, m2, 1e-8).matrix(), m, 1e-9)) {
          c.family = {FamilyKind::one, m0, m2};
        }
      } catch (const std::invalid_argument&) {
      }
    }
  }

  // Family two shape: M Hermitian with equal real diagonal.
  if (c.family.kind == FamilyKind::none) {
    const bool shape_two = std::abs(m.m11.imag()) < tol &&
                           std::abs(m.m22.imag()) < tol &&
                           std::abs(m.m11 - m.m22) < tol &&
                           std::abs(m.m12 - std::conj(m.m21)) < tol &&
                           std::abs(m.m12.real()) < tol &&
                           std::abs(m.m11.real()) > tol;
    if (shape_two) {
      const double m1 = 1.0 / m.m11.real();
      const double m3 = -m.m12.imag() * m1 + 0.0;
      if (std::abs(m1 * m1 + m3 * m3 - 1.0) < 1e-9) {
        try {
          if (approx_equal(family_two(m1, m3, 1e-8).matrix(), m, 1e-9)) {
            c.family = {FamilyKind::two, m1, m3};
          }
        } catch (const std::invalid_argument&) {
        }
      }
    }
  }

  return c;
}

MatrixBC periodic_bc() { return MatrixBC(Mat2::identity()); }

MatrixBC antiperiodic_bc() { return MatrixBC(Mat2::identity() * Cx(-1.0)); }

MatrixBC plus_gamma5_bc() { return MatrixBC(sigma_z()); }

MatrixBC minus_gamma5_bc() { return MatrixBC(sigma_z() * Cx(-1.0)); }

}  // namespace wmbox
