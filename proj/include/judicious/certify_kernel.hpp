#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "judicious/rational.hpp"
#include "judicious/reduce.hpp"

namespace judicious::verify {

inline constexpr std::size_t kMaxDims = 3;
inline constexpr double kDeclaredSlack = 1e-9;

// An affine form restricted to the epsilon-grid: its value at grid point g
// (free variable f = g[f] * epsilon) is (constant + sum step[f] g[f]) / den,
// with every quantity an exact integer.
struct GridForm {
  std::int64_t constant = 0;
  std::array<std::int64_t, kMaxDims> step{};
  std::int64_t den = 1;

  // Exact numerator of the maximum over the cell [g, g+1].
  std::int64_t max_numerator(const std::array<std::int64_t, kMaxDims>& cell) const {
    std::int64_t v = constant;
    for (std::size_t f = 0; f < kMaxDims; ++f) v += step[f] * (step[f] > 0 ? cell[f] + 1 : cell[f]);
    return v;
  }
};

// A reduced case laid out on a uniform grid of side epsilon. Cells cover
// [0, cells[f] * epsilon] in each free dimension (the last cell may
// overshoot the range; corner bounds over it remain valid).
struct CertGrid {
  std::size_t dims = 0;
  Rational epsilon;
  std::array<std::int64_t, kMaxDims> cells{1, 1, 1};
  std::vector<GridForm> constraints;
  std::array<GridForm, 3> linear;
  std::array<GridForm, 3> quadratic;
  bool empty = false;

  std::uint64_t total_cells() const {
    return static_cast<std::uint64_t>(cells[0]) * static_cast<std::uint64_t>(cells[1]) *
           static_cast<std::uint64_t>(cells[2]);
  }
  std::array<std::int64_t, kMaxDims> cell_at(std::uint64_t index) const;
};

CertGrid build_grid(const ReducedCase& rc, const Rational& epsilon);

// Rigorous lower bound on q~1 + q~2 + q~3 over one cell, or nullopt when the
// cell is provably inadmissible. Every floating-point step is widened by an
// ulp in the safe direction, so the result is below the exact infimum over
// the cell's admissible points.
std::optional<double> cell_lower_bound(const CertGrid& grid, const std::array<std::int64_t, kMaxDims>& cell);

// Lower bound on one part's cap from upper bounds on its two coefficients.
double qtilde_lower(double linear_hi, double quadratic_hi);

struct GridResult {
  double min_bound = std::numeric_limits<double>::infinity();
  std::uint64_t cells_total = 0;
  std::uint64_t cells_admissible = 0;
  std::uint64_t argmin = 0;  // linear cell index attaining min_bound (lowest on ties)
};

// Reference implementation: one pass over the cells in index order.
GridResult certify_grid_serial(const CertGrid& grid);
// OpenMP version; bit-identical result for every thread count.
GridResult certify_grid_parallel(const CertGrid& grid, int jobs = 0);

}  // namespace judicious::verify
