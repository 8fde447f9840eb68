#include "wmbox/state.hpp"

#include <cmath>
#include <stdexcept>

namespace wmbox {

GridWaveFunction make_grid_wave_function(std::vector<Vec2> samples,
                                         const PhysicalParams& params) {
  params.validate();
  if (samples.size() < kMinGridSize + 1) {
    throw std::invalid_argument(
        "GridWaveFunction: need at least 17 samples (grid size N >= 16)");
  }
  for (const Vec2& s : samples) {
    if (!s.finite()) {
      throw std::invalid_argument("GridWaveFunction: non-finite sample");
    }
  }
  return GridWaveFunction{std::move(samples), params};
}

Cx inner_product(const GridWaveFunction& a, const GridWaveFunction& b) {
  if (a.samples.size() != b.samples.size()) {
    throw std::invalid_argument("inner_product: grid size mismatch");
  }
  const std::size_t n = a.grid_size();
  const double h = a.dx();
  Cx acc = 0.5 * (dot(a.samples[0], b.samples[0]) +
                  dot(a.samples[n], b.samples[n]));
  for (std::size_t j = 1; j < n; ++j) {
    acc += dot(a.samples[j], b.samples[j]);
  }
  return h * acc;
}

double l2_norm(const GridWaveFunction& f) {
  const std::size_t n = f.grid_size();
  const double h = f.dx();
  double acc = 0.5 * (std::norm(f.samples[0].c1) + std::norm(f.samples[0].c2) +
                      std::norm(f.samples[n].c1) + std::norm(f.samples[n].c2));
  for (std::size_t j = 1; j < n; ++j) {
    acc += std::norm(f.samples[j].c1) + std::norm(f.samples[j].c2);
  }
  return std::sqrt(h * acc);
}

void normalize(GridWaveFunction& f) {
  const double n = l2_norm(f);
  if (n < 1e-300) {
    throw std::invalid_argument("normalize: zero state");
  }
  const Cx s = 1.0 / n;
  for (Vec2& v : f.samples) {
    v = s * v;
  }
}

}  // namespace wmbox
