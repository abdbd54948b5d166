#include "judicious/certify_kernel.hpp"

namespace judicious::verify {

GridResult certify_grid_serial(const CertGrid& grid) {
  GridResult out;
  if (grid.empty) return out;
  out.cells_total = grid.total_cells();
  std::uint64_t index = 0;
  std::array<std::int64_t, kMaxDims> cell{};
  for (cell[0] = 0; cell[0] < grid.cells[0]; ++cell[0]) {
    for (cell[1] = 0; cell[1] < grid.cells[1]; ++cell[1]) {
      for (cell[2] = 0; cell[2] < grid.cells[2]; ++cell[2], ++index) {
        const auto bound = cell_lower_bound(grid, cell);
        if (!bound) continue;
        ++out.cells_admissible;
        if (*bound < out.min_bound) {
          out.min_bound = *bound;
          out.argmin = index;
        }
      }
    }
  }
  return out;
}

}  // namespace judicious::verify
