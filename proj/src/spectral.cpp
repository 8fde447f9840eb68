#include "wmbox/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wmbox {

namespace {

/// cos- and sinc-like factors of the closed-form exponential, as functions
/// of the signed square q = (E^2 - m^2 c^4) (x / hbar c)^2. Positive q is
/// the oscillatory branch, negative q the evanescent one; the Taylor window
/// covers the crossover without 0/0.
void exp_factors(double q, double& cos_part, double& sinc_part) {
  if (std::abs(q) < 1e-6) {
    cos_part = 1.0 - q / 2.0 + q * q / 24.0 - q * q * q / 720.0;
    sinc_part = 1.0 - q / 6.0 + q * q / 120.0 - q * q * q / 5040.0;
    return;
  }
  if (q > 0.0) {
    const double z = std::sqrt(q);
    cos_part = std::cos(z);
    sinc_part = std::sin(z) / z;
    return;
  }
  const double z = std::sqrt(-q);
  cos_part = std::cosh(z);
  sinc_part = std::sinh(z) / z;
}

Vec2 phase_normalize(Vec2 v) {
  const double n = v.norm();
  if (n == 0.0) {
    return v;
  }
  v = (1.0 / n) * v;
  // First nonzero component real and positive; components below 1e-9 on a
  // unit vector count as zero.
  const Cx lead = std::abs(v.c1) > 1e-9 ? v.c1 : v.c2;
  const double mag = std::abs(lead);
  if (mag > 0.0) {
    v = (std::conj(lead) / mag) * v;
  }
  return v;
}

/// Null direction of a rank-one 2x2 matrix, from its larger row.
Vec2 null_direction(const Mat2& a) {
  const double r1 = std::norm(a.m11) + std::norm(a.m12);
  const double r2 = std::norm(a.m21) + std::norm(a.m22);
  Vec2 v = r1 >= r2 ? Vec2{-a.m12, a.m11} : Vec2{-a.m22, a.m21};
  return phase_normalize(v);
}

struct RootCandidate {
  double e = 0.0;
  double quality = 0.0;  // smallest singular value of M - T at e
};

}  // namespace

void EnergyWindow::validate() const {
  if (!(e_min < e_max)) {
    throw std::invalid_argument("EnergyWindow: require e_min < e_max");
  }
  if (scan_points < 64) {
    throw std::invalid_argument("EnergyWindow: need at least 64 scan points");
  }
}

Mat2 transfer_matrix_at(double x, double E, const PhysicalParams& params) {
  const double mc2 = params.mass * params.c * params.c;
  const double xr = x / (params.hbar * params.c);
  const double q = (E * E - mc2 * mc2) * xr * xr;
  double cos_part = 0.0;
  double sinc_part = 0.0;
  exp_factors(q, cos_part, sinc_part);
  // Q = E sigma_z - i m c^2 sigma_y = [[E, -mc2], [mc2, -E]]
  const Cx i_xr_s = Cx(0.0, xr * sinc_part);
  return Mat2{cos_part + i_xr_s * E, i_xr_s * (-mc2),
              i_xr_s * mc2, cos_part - i_xr_s * E};
}

Mat2 transfer_matrix(double E, const PhysicalParams& params) {
  return transfer_matrix_at(params.L, E, params);
}

Cx quantization_residual(double E, const MatrixBC& bc,
                         const PhysicalParams& params) {
  return (bc.matrix() - transfer_matrix(E, params)).det();
}

Spectrum solve_spectrum(const MatrixBC& bc, const EnergyWindow& window,
                        const PhysicalParams& params,
                        const SolveOptions& opts) {
  params.validate();
  window.validate();

  Spectrum spec;
  spec.window = window;
  spec.bc = bc;
  spec.params = params;

  const double sa = self_adjointness_residual(bc);
  const bool self_adjoint = sa < kDefaultTol;
  if (!self_adjoint) {
    if (!opts.allow_non_self_adjoint) {
      throw std::invalid_argument(
          "solve_spectrum: boundary condition is not self-adjoint "
          "(set allow_non_self_adjoint to proceed)");
    }
    spec.warnings.push_back(
        "non-self-adjoint boundary condition: only real roots located as "
        "modulus minima are reported");
  }

  // For a self-adjoint BC, det M = e^{i delta} and f e^{-i delta/2} is real
  // on the real E axis; sign changes of that rotation bracket the simple
  // roots.
  const Cx rot = std::polar(1.0, -0.5 * std::arg(bc.matrix().det()));
  auto g = [&](double E) { return rot * quantization_residual(E, bc, params); };
  auto s_min = [&](double E) {
    return singular_values(bc.matrix() - transfer_matrix(E, params))[1];
  };

  const std::size_t n = window.scan_points;
  const double h = (window.e_max - window.e_min) / static_cast<double>(n);
  // Pad one step each side so window-edge roots get full brackets.
  const std::size_t total = n + 3;
  std::vector<double> energies(total);
  std::vector<Cx> values(total);
  for (std::size_t j = 0; j < total; ++j) {
    energies[j] = window.e_min + h * (static_cast<double>(j) - 1.0);
  }
  parallel_for(opts.exec, total, [&](std::size_t j) {
    values[j] = g(energies[j]);
  });

  double gscale = 0.0;
  for (const Cx& v : values) {
    gscale = std::max(gscale, std::abs(v));
  }
  const double zero_tol = 1e-14 * std::max(gscale, 1.0);

  struct RefineJob {
    enum class Kind { direct, bisect, golden } kind;
    double lo;
    double hi;
  };
  std::vector<RefineJob> jobs;

  auto bisect = [&](double lo, double hi) {
    double flo = std::real(g(lo));
    for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max({1.0, std::abs(lo),
                                                             std::abs(hi)});
         ++it) {
      const double mid = 0.5 * (lo + hi);
      const double fm = std::real(g(mid));
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
  };

  // Golden-section on the smallest singular value of M - T, which vanishes
  // linearly at a root and so localizes double roots (where |det| flattens
  // quadratically) to machine precision.
  auto golden = [&](double a, double c) {
    constexpr double invphi = 0.6180339887498949;
    double lo = a;
    double hi = c;
    double x1 = hi - invphi * (hi - lo);
    double x2 = lo + invphi * (hi - lo);
    double f1 = s_min(x1);
    double f2 = s_min(x2);
    for (int it = 0; it < 160 && hi - lo > 1e-15 * std::max({1.0, std::abs(lo),
                                                             std::abs(hi)});
         ++it) {
      if (f1 < f2) {
        hi = x2;
        x2 = x1;
        f2 = f1;
        x1 = hi - invphi * (hi - lo);
        f1 = s_min(x1);
      } else {
        lo = x1;
        x1 = x2;
        f1 = f2;
        x2 = lo + invphi * (hi - lo);
        f2 = s_min(x2);
      }
    }
    return 0.5 * (lo + hi);
  };

  for (std::size_t j = 0; j + 1 < total; ++j) {
    const double ga = std::real(values[j]);
    const double gb = std::real(values[j + 1]);
    if (std::abs(ga) < zero_tol) {
      jobs.push_back({RefineJob::Kind::direct, energies[j], energies[j]});
    }
    if (self_adjoint && (ga < 0.0) != (gb < 0.0) && std::abs(ga) >= zero_tol &&
        std::abs(gb) >= zero_tol) {
      jobs.push_back({RefineJob::Kind::bisect, energies[j], energies[j + 1]});
    }
  }
  if (std::abs(std::real(values[total - 1])) < zero_tol) {
    jobs.push_back({RefineJob::Kind::direct, energies[total - 1],
                    energies[total - 1]});
  }
  for (std::size_t j = 1; j + 1 < total; ++j) {
    const double am = std::abs(values[j - 1]);
    const double a0 = std::abs(values[j]);
    const double ap = std::abs(values[j + 1]);
    if (a0 <= am && a0 <= ap) {
      jobs.push_back({RefineJob::Kind::golden, energies[j - 1],
                      energies[j + 1]});
    }
  }

  std::vector<RootCandidate> candidates(jobs.size());
  parallel_for(opts.exec, jobs.size(), [&](std::size_t i) {
    const RefineJob& job = jobs[i];
    double e = job.lo;
    if (job.kind == RefineJob::Kind::bisect) {
      e = bisect(job.lo, job.hi);
    } else if (job.kind == RefineJob::Kind::golden) {
      e = golden(job.lo, job.hi);
    }
    candidates[i] = {e, s_min(e)};
  });

  // Keep candidates that really are roots, inside the window, deduplicated.
  const double scale_e = params.hbar * params.c / params.L;
  const double cluster = opts.cluster_tol_factor * scale_e;
  std::vector<RootCandidate> roots;
  std::sort(candidates.begin(), candidates.end(),
            [](const RootCandidate& a, const RootCandidate& b) {
              return a.e < b.e;
            });
  for (const RootCandidate& cand : candidates) {
    if (cand.quality >= opts.root_accept_tol) {
      continue;
    }
    if (cand.e < window.e_min - cluster || cand.e > window.e_max + cluster) {
      continue;
    }
    if (!roots.empty() && cand.e - roots.back().e < cluster) {
      if (cand.quality < roots.back().quality) {
        roots.back() = cand;
      }
      continue;
    }
    roots.push_back(cand);
  }

  for (std::size_t i = 0; i + 1 < roots.size(); ++i) {
    if (roots[i + 1].e - roots[i].e < 2.0 * h) {
      spec.warnings.push_back(
          "window too coarse: adjacent roots closer than 2 grid steps");
      break;
    }
  }

  const double mc2 = params.mass * params.c * params.c;
  for (const RootCandidate& root : roots) {
    const Mat2 a = bc.matrix() - transfer_matrix(root.e, params);
    const auto sv = singular_values(a);
    const double w2 = root.e * root.e - mc2 * mc2;
    const double k = (w2 > 0.0 ? std::sqrt(w2) : 0.0) /
                     (params.hbar * params.c) * (root.e < 0.0 ? -1.0 : 1.0);
    const double deg_scale =
        std::max(1.0, std::max(bc.matrix().max_abs(),
                               transfer_matrix(root.e, params).max_abs()));
    if (sv[0] < opts.degeneracy_tol * deg_scale) {
      spec.pairs.push_back({k, root.e, Vec2{1.0, 0.0}, 0});
      spec.pairs.push_back({k, root.e, Vec2{0.0, 1.0}, 1});
    } else {
      spec.pairs.push_back({k, root.e, null_direction(a), 0});
    }
  }

  std::stable_sort(spec.pairs.begin(), spec.pairs.end(),
                   [](const Eigenpair& a, const Eigenpair& b) {
                     return a.E < b.E;
                   });
  return spec;
}

Spectrum weyl_spectrum(const PhaseBC& pbc, const EnergyWindow& window,
                       const PhysicalParams& params) {
  params.validate();
  window.validate();
  if (params.mass != 0.0) {
    throw std::invalid_argument(
        "weyl_spectrum: the one-component Weyl problem is massless");
  }
  if (pbc.branch != 1 && pbc.branch != 2) {
    throw std::invalid_argument("weyl_spectrum: branch must be 1 or 2");
  }

  Spectrum spec;
  spec.window = window;
  spec.bc = pbc;
  spec.params = params;

  const double sign = pbc.branch == 1 ? 1.0 : -1.0;
  const double scale = params.hbar * params.c / params.L;
  // E = sign * scale * (theta + 2 pi n); solve the window bounds for n.
  const double lo = (std::min(window.e_min, window.e_max) / scale) * sign;
  const double hi = (std::max(window.e_min, window.e_max) / scale) * sign;
  const double a = std::min(lo, hi);
  const double b = std::max(lo, hi);
  const double two_pi = 2.0 * std::numbers::pi;
  const long n_lo = static_cast<long>(std::ceil((a - pbc.theta) / two_pi - 1e-12));
  const long n_hi = static_cast<long>(std::floor((b - pbc.theta) / two_pi + 1e-12));
  for (long n = n_lo; n <= n_hi; ++n) {
    const double e = sign * scale * (pbc.theta + two_pi * static_cast<double>(n));
    const Vec2 amp = pbc.branch == 1 ? Vec2{1.0, 0.0} : Vec2{0.0, 1.0};
    spec.pairs.push_back({e / (params.hbar * params.c), e, amp, 0});
  }
  std::sort(spec.pairs.begin(), spec.pairs.end(),
            [](const Eigenpair& x, const Eigenpair& y) { return x.E < y.E; });
  return spec;
}

namespace {

GridWaveFunction sample_eigenfunction(const Eigenpair& pair,
                                      const PhysicalParams& params,
                                      std::size_t grid_points) {
  if (grid_points < kMinGridSize) {
    throw std::invalid_argument("eigenfunction: grid too small (N >= 16)");
  }
  std::vector<Vec2> samples(grid_points + 1);
  const double h = params.L / static_cast<double>(grid_points);
  for (std::size_t j = 0; j <= grid_points; ++j) {
    samples[j] =
        transfer_matrix_at(h * static_cast<double>(j), pair.E, params) *
        pair.amplitude;
  }
  GridWaveFunction f = make_grid_wave_function(std::move(samples), params);
  normalize(f);
  return f;
}

}  // namespace

GridWaveFunction eigenfunction(const Eigenpair& pair, const MatrixBC& /*bc*/,
                               const PhysicalParams& params,
                               std::size_t grid_points) {
  return sample_eigenfunction(pair, params, grid_points);
}

GridWaveFunction eigenfunction(const Eigenpair& pair, const PhaseBC& /*pbc*/,
                               const PhysicalParams& params,
                               std::size_t grid_points) {
  return sample_eigenfunction(pair, params, grid_points);
}

GridWaveFunction eigenfunction(const Eigenpair& pair, const Spectrum& spectrum,
                               std::size_t grid_points) {
  return sample_eigenfunction(pair, spectrum.params, grid_points);
}

double boundary_residual(const GridWaveFunction& f,
                         const std::variant<PhaseBC, MatrixBC>& bc) {
  const Vec2& first = f.samples.front();
  const Vec2& last = f.samples.back();
  if (std::holds_alternative<MatrixBC>(bc)) {
    return (last - std::get<MatrixBC>(bc).matrix() * first).norm();
  }
  const PhaseBC& pbc = std::get<PhaseBC>(bc);
  const Cx phase = std::polar(1.0, pbc.theta);
  return pbc.branch == 1 ? std::abs(last.c1 - phase * first.c1)
                         : std::abs(last.c2 - phase * first.c2);
}

}  // namespace wmbox
