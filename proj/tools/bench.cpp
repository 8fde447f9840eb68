// Serial vs OpenMP timing for the data-parallel kernels, with a value
// cross-check between the two paths.

#include <chrono>
#include <cstdio>
#include <string>

#include "wmbox/acceptance.hpp"
#include "wmbox/evolution.hpp"

using namespace wmbox;
namespace chrono = std::chrono;

namespace {

template <typename F>
double time_ms(const F& fn) {
  const auto t0 = chrono::steady_clock::now();
  fn();
  const auto t1 = chrono::steady_clock::now();
  return chrono::duration<double, std::milli>(t1 - t0).count();
}

void report(const std::string& name, double serial_ms, double openmp_ms,
            double max_diff) {
  std::printf("%-28s %10.1f ms %10.1f ms   x%0.2f   max|diff| %.3e\n",
              name.c_str(), serial_ms, openmp_ms, serial_ms / openmp_ms,
              max_diff);
}

}  // namespace

int main() {
  std::printf("threads: %d\n", parallel_thread_count());
  std::printf("%-28s %13s %13s %8s\n", "kernel", "serial", "openmp",
              "speedup");

  PhysicalParams params;

  {
    // Quantization-determinant scan + refinement over a wide window.
    const MatrixBC bc = family_one(0.6, 0.8);
    const EnergyWindow window{-2000.0, 2000.0, 400000};
    Spectrum a;
    Spectrum b;
    SolveOptions sopts;
    sopts.exec = Exec::serial;
    const double ts = time_ms(
        [&] { a = solve_spectrum(bc, window, params, sopts); });
    sopts.exec = Exec::openmp;
    const double tp = time_ms(
        [&] { b = solve_spectrum(bc, window, params, sopts); });
    double diff = a.pairs.size() == b.pairs.size()
                      ? 0.0
                      : std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < a.pairs.size() && diff == 0.0; ++i) {
      diff = std::max(diff, std::abs(a.pairs[i].E - b.pairs[i].E));
    }
    report("spectrum scan (400k pts)", ts, tp, diff);
  }

  {
    // Two-phase enumeration lattice.
    std::vector<MatrixBC> a;
    std::vector<MatrixBC> b;
    const double ts = time_ms(
        [&] { a = enumerate_diagonal_majorana_bcs(3000, Exec::serial); });
    const double tp = time_ms(
        [&] { b = enumerate_diagonal_majorana_bcs(3000, Exec::openmp); });
    double diff = a.size() == b.size()
                      ? 0.0
                      : std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < a.size() && diff == 0.0; ++i) {
      diff = std::max(diff, max_abs_diff(a[i].matrix(), b[i].matrix()));
    }
    report("phase enumeration (3000^2)", ts, tp, diff);
  }

  {
    // Mode expansion + eigenbasis reconstruction on a large grid.
    const MatrixBC bc = periodic_bc();
    const EnergyWindow window{-600.0, 600.0, 16384};
    SolveOptions sopts;
    const Spectrum spectrum = solve_spectrum(bc, window, params, sopts);
    const std::size_t grid = 1 << 15;
    const GridWaveFunction state = make_random_majorana_state(
        bc, params, grid, window, 7u, Exec::openmp);

    ModeExpansion ea;
    ModeExpansion eb;
    const double ts_exp =
        time_ms([&] { ea = expand(state, spectrum, Exec::serial); });
    const double tp_exp =
        time_ms([&] { eb = expand(state, spectrum, Exec::openmp); });
    double diff = 0.0;
    for (std::size_t i = 0; i < ea.coefficients.size(); ++i) {
      diff = std::max(diff,
                      std::abs(ea.coefficients[i] - eb.coefficients[i]));
    }
    report("mode expansion", ts_exp, tp_exp, diff);

    GridWaveFunction ra;
    GridWaveFunction rb;
    const double ts_ev = time_ms([&] { ra = evolve(ea, 3.7, Exec::serial); });
    const double tp_ev = time_ms([&] { rb = evolve(eb, 3.7, Exec::openmp); });
    double rdiff = 0.0;
    for (std::size_t j = 0; j < ra.samples.size(); ++j) {
      rdiff = std::max(rdiff, (ra.samples[j] - rb.samples[j]).norm());
    }
    report("eigenbasis reconstruction", ts_ev, tp_ev, rdiff);
  }

  return 0;
}
