#include "judicious/certify_kernel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace judicious::verify {

namespace {

// Lowest bound wins; among equal bounds the lowest cell index, so the
// result does not depend on how cells were split among threads.
void merge_into(GridResult& acc, const GridResult& part) {
  acc.cells_admissible += part.cells_admissible;
  if (part.min_bound < acc.min_bound || (part.min_bound == acc.min_bound && part.argmin < acc.argmin)) {
    acc.min_bound = part.min_bound;
    acc.argmin = part.argmin;
  }
}

}  // namespace

GridResult certify_grid_parallel(const CertGrid& grid, int jobs) {
#ifdef _OPENMP
  GridResult out;
  if (grid.empty) return out;
  out.cells_total = grid.total_cells();
  const auto total = static_cast<std::int64_t>(out.cells_total);
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();

#pragma omp parallel num_threads(threads)
  {
    GridResult local;
#pragma omp for schedule(static) nowait
    for (std::int64_t index = 0; index < total; ++index) {
      const auto bound = cell_lower_bound(grid, grid.cell_at(static_cast<std::uint64_t>(index)));
      if (!bound) continue;
      ++local.cells_admissible;
      if (*bound < local.min_bound) {
        local.min_bound = *bound;
        local.argmin = static_cast<std::uint64_t>(index);
      }
    }
#pragma omp critical(judicious_certify_merge)
    merge_into(out, local);
  }
  return out;
#else
  (void)jobs;
  return certify_grid_serial(grid);
#endif
}

}  // namespace judicious::verify
