#include "symred/grid_kernels.hpp"

#include <omp.h>

#include <limits>

namespace symred {

namespace {

// Coordinates of grid point `linear`, written into x (length dims).
void fill_point(const GridSpec& g, std::uint64_t linear, double* x) {
  const std::size_t k = g.dims();
  const double denom = static_cast<double>(g.resolution - 1);
  for (std::size_t j = k; j-- > 0;) {
    const auto i = static_cast<double>(linear % g.resolution);
    linear /= g.resolution;
    x[j] = g.lo[j] + (g.hi[j] - g.lo[j]) * (i / denom);
  }
}

bool better(double v, std::uint64_t idx, const GridMin& cur) {
  return v < cur.value || (v == cur.value && idx < cur.linear);
}

bool opposite(double a, double b) { return (a < 0 && b > 0) || (a > 0 && b < 0); }

std::vector<std::uint64_t> strides_of(const GridSpec& g) {
  std::vector<std::uint64_t> strides(g.dims());
  std::uint64_t stride = 1;
  for (std::size_t j = g.dims(); j-- > 0;) {
    strides[j] = stride;
    stride *= g.resolution;
  }
  return strides;
}

// Sign change starting at `a`, smallest axis first.
std::optional<SignChange> sign_change_at(const std::vector<double>& v, const GridSpec& g,
                                         const std::vector<std::uint64_t>& strides, std::uint64_t a) {
  for (std::size_t j = 0; j < g.dims(); ++j) {
    const std::uint64_t coord = (a / strides[j]) % g.resolution;
    if (coord + 1 < g.resolution && opposite(v[a], v[a + strides[j]])) {
      return SignChange{a, a + strides[j], j};
    }
  }
  return std::nullopt;
}

}  // namespace

std::uint64_t GridSpec::num_points() const {
  std::uint64_t total = 1;
  for (std::size_t j = 0; j < dims(); ++j) {
    if (total > std::numeric_limits<std::uint64_t>::max() / resolution) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    total *= resolution;
  }
  return total;
}

std::vector<std::uint32_t> GridSpec::unravel(std::uint64_t linear) const {
  std::vector<std::uint32_t> idx(dims());
  for (std::size_t j = dims(); j-- > 0;) {
    idx[j] = static_cast<std::uint32_t>(linear % resolution);
    linear /= resolution;
  }
  return idx;
}

std::vector<double> GridSpec::point(std::uint64_t linear) const {
  std::vector<double> x(dims());
  fill_point(*this, linear, x.data());
  return x;
}

GridMin grid_min_serial(const CompiledPoly& f, const GridSpec& grid) {
  const std::uint64_t total = grid.num_points();
  std::vector<double> x(grid.dims());
  GridMin best{std::numeric_limits<double>::infinity(), 0};
  for (std::uint64_t i = 0; i < total; ++i) {
    fill_point(grid, i, x.data());
    const double v = f(x);
    if (better(v, i, best)) best = {v, i};
  }
  return best;
}

GridMin grid_min_parallel(const CompiledPoly& f, const GridSpec& grid) {
  const auto total = static_cast<std::int64_t>(grid.num_points());
  GridMin best{std::numeric_limits<double>::infinity(), 0};
#pragma omp parallel
  {
    std::vector<double> x(grid.dims());
    GridMin local{std::numeric_limits<double>::infinity(), 0};
#pragma omp for schedule(static) nowait
    for (std::int64_t i = 0; i < total; ++i) {
      fill_point(grid, static_cast<std::uint64_t>(i), x.data());
      const double v = f(x);
      if (better(v, static_cast<std::uint64_t>(i), local)) local = {v, static_cast<std::uint64_t>(i)};
    }
#pragma omp critical(symred_grid_min)
    {
      if (better(local.value, local.linear, best)) best = local;
    }
  }
  return best;
}

std::vector<double> grid_values_serial(const CompiledPoly& f, const GridSpec& grid) {
  const std::uint64_t total = grid.num_points();
  std::vector<double> out(total);
  std::vector<double> x(grid.dims());
  for (std::uint64_t i = 0; i < total; ++i) {
    fill_point(grid, i, x.data());
    out[i] = f(x);
  }
  return out;
}

std::vector<double> grid_values_parallel(const CompiledPoly& f, const GridSpec& grid) {
  const auto total = static_cast<std::int64_t>(grid.num_points());
  std::vector<double> out(static_cast<std::size_t>(total));
#pragma omp parallel
  {
    std::vector<double> x(grid.dims());
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < total; ++i) {
      fill_point(grid, static_cast<std::uint64_t>(i), x.data());
      out[static_cast<std::size_t>(i)] = f(x);
    }
  }
  return out;
}

std::optional<SignChange> first_sign_change_serial(const std::vector<double>& values, const GridSpec& grid) {
  const auto strides = strides_of(grid);
  for (std::uint64_t a = 0; a < values.size(); ++a) {
    if (auto sc = sign_change_at(values, grid, strides, a)) return sc;
  }
  return std::nullopt;
}

std::optional<SignChange> first_sign_change_parallel(const std::vector<double>& values, const GridSpec& grid) {
  const auto total = static_cast<std::int64_t>(values.size());
  const auto strides = strides_of(grid);
  std::int64_t first = total;
#pragma omp parallel for schedule(static) reduction(min : first)
  for (std::int64_t a = 0; a < total; ++a) {
    if (a < first && sign_change_at(values, grid, strides, static_cast<std::uint64_t>(a))) first = a;
  }
  if (first == total) return std::nullopt;
  return sign_change_at(values, grid, strides, static_cast<std::uint64_t>(first));
}

}  // namespace symred
