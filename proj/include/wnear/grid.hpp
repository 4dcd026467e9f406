#pragma once

// Rectangular phase-space grids: sampling layout, CSV I/O and bilinear
// interpolation (zero outside the grid).

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "wnear/basis.hpp"

namespace wnear {

/// Bounds and resolution of a grid, without values.
struct GridSpec {
  double x_min = -4.0, x_max = 4.0;
  double k_min = -4.0, k_max = 4.0;
  std::size_t nx = 101, nk = 101;

  double x_at(std::size_t i) const;
  double k_at(std::size_t j) const;
  std::size_t size() const { return nx * nk; }

  /// Throws Error("grid", "invalid_argument") unless min < max and n >= 2.
  void validate() const;
};

/// Sampled phase-space function. values[i * nk + j] is the sample at
/// (x_at(i), k_at(j)); `imag` is either empty or the same length.
struct PhaseGrid {
  GridSpec spec;
  std::vector<double> values;
  std::vector<double> imag;

  bool is_complex() const { return !imag.empty(); }
  double at(std::size_t i, std::size_t j) const { return values[i * spec.nk + j]; }

  /// Bilinear interpolation of the real part; 0 outside the rectangle.
  double interpolate(PhasePoint z) const;
};

/// Samples a real function on the grid.
template <class F>
PhaseGrid sample_grid(const GridSpec& spec, F&& f) {
  spec.validate();
  PhaseGrid g{spec, std::vector<double>(spec.size()), {}};
  for (std::size_t i = 0; i < spec.nx; ++i)
    for (std::size_t j = 0; j < spec.nk; ++j) g.values[i * spec.nk + j] = f(PhasePoint{spec.x_at(i), spec.k_at(j)});
  return g;
}

/// CSV with header `x,k,value` (or `x,k,re,im`), rows x-major then k, 17
/// significant digits.
void write_grid_csv(std::ostream& out, const PhaseGrid& grid);
void write_grid_csv(const std::string& path, const PhaseGrid& grid);

/// Reads the CSV format above. The x and k axes are recovered from the
/// distinct coordinates and must be uniformly spaced.
PhaseGrid read_grid_csv(std::istream& in);
PhaseGrid read_grid_csv(const std::string& path);

}  // namespace wnear
