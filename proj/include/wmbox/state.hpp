#pragma once

#include <cstddef>
#include <vector>

#include "wmbox/algebra.hpp"
#include "wmbox/complex2.hpp"

namespace wmbox {

/// Two-component wave function sampled at x_j = j L / N for j = 0..N
/// (both endpoints included). One-component states embed with the unused
/// component identically zero.
struct GridWaveFunction {
  std::vector<Vec2> samples;
  PhysicalParams params;

  std::size_t grid_size() const { return samples.size() - 1; }
  double dx() const { return params.L / static_cast<double>(grid_size()); }
};

inline constexpr std::size_t kMinGridSize = 16;

/// Validates the grid invariants (N >= 16, finite params).
GridWaveFunction make_grid_wave_function(std::vector<Vec2> samples,
                                         const PhysicalParams& params);

/// Trapezoid-rule scalar product, first argument conjugated.
Cx inner_product(const GridWaveFunction& a, const GridWaveFunction& b);

double l2_norm(const GridWaveFunction& f);

/// Scales the samples so l2_norm == 1. Throws on a zero state.
void normalize(GridWaveFunction& f);

}  // namespace wmbox
