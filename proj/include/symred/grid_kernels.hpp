#ifndef SYMRED_GRID_KERNELS_HPP
#define SYMRED_GRID_KERNELS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "symred/multipoly.hpp"

namespace symred {

/// Tensor grid: `resolution` equispaced points per axis on [lo[j], hi[j]].
/// Points are numbered with axis 0 most significant, so a smaller linear
/// index is a lexicographically smaller index tuple.
struct GridSpec {
  std::vector<double> lo;
  std::vector<double> hi;
  unsigned resolution = 2;

  std::size_t dims() const { return lo.size(); }
  /// resolution^dims, saturating at UINT64_MAX.
  std::uint64_t num_points() const;
  std::vector<std::uint32_t> unravel(std::uint64_t linear) const;
  std::vector<double> point(std::uint64_t linear) const;
};

struct GridMin {
  double value = 0.0;
  std::uint64_t linear = 0;
};

/// Minimum over all grid points; ties go to the smallest linear index.
GridMin grid_min_serial(const CompiledPoly& f, const GridSpec& grid);
GridMin grid_min_parallel(const CompiledPoly& f, const GridSpec& grid);

/// Values at every grid point in linear order.
std::vector<double> grid_values_serial(const CompiledPoly& f, const GridSpec& grid);
std::vector<double> grid_values_parallel(const CompiledPoly& f, const GridSpec& grid);

/// Neighbouring grid points (differing by one step along `axis`) with
/// strictly opposite signs; `from` is the lower-index end.
struct SignChange {
  std::uint64_t from = 0;
  std::uint64_t to = 0;
  std::size_t axis = 0;

  friend bool operator==(const SignChange&, const SignChange&) = default;
};

/// First sign change by (from, axis).
std::optional<SignChange> first_sign_change_serial(const std::vector<double>& values, const GridSpec& grid);
std::optional<SignChange> first_sign_change_parallel(const std::vector<double>& values, const GridSpec& grid);

inline GridMin grid_min(const CompiledPoly& f, const GridSpec& grid, bool parallel) {
  return parallel ? grid_min_parallel(f, grid) : grid_min_serial(f, grid);
}
inline std::vector<double> grid_values(const CompiledPoly& f, const GridSpec& grid, bool parallel) {
  return parallel ? grid_values_parallel(f, grid) : grid_values_serial(f, grid);
}
inline std::optional<SignChange> first_sign_change(const std::vector<double>& values, const GridSpec& grid,
                                                   bool parallel) {
  return parallel ? first_sign_change_parallel(values, grid) : first_sign_change_serial(values, grid);
}

}  // namespace symred

#endif  // SYMRED_GRID_KERNELS_HPP
