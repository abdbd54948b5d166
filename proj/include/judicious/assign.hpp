#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "judicious/highlow.hpp"
#include "judicious/hypergraph.hpp"
#include "judicious/lemma_solve.hpp"

namespace judicious {

inline constexpr PartId kUnassigned = 0xff;
using Coverage = std::array<std::uint64_t, kParts>;

struct FullPartition {
  std::vector<PartId> assignment;  // per vertex
  Coverage coverage{};             // edges meeting each part
  std::size_t trial = 0;

  std::uint64_t min_coverage() const;
};

// d(V_i) = number of edges with at least one vertex in part i.
// Throws std::invalid_argument on an unassigned vertex.
Coverage score(const Hypergraph& h, std::span<const PartId> assignment);

// High vertices keep their parts; each low vertex of positive degree takes one
// uniform draw u and goes to part 1, 2, 3 as u falls in [0, p1), [p1, p1+p2),
// [p1+p2, 1). Isolated vertices go to part 1.
FullPartition assign_low(const Hypergraph& h, const HighLowSplit& split, const HighPartition& p, const QTriple& q,
                         std::uint64_t seed);

// Trial t uses seed + t. Keeps the largest min coverage, earliest trial on
// ties. The parallel version returns exactly what the serial one does.
FullPartition run_trials_serial(const Hypergraph& h, const HighLowSplit& split, const HighPartition& p,
                                const QTriple& q, std::size_t trials, std::uint64_t seed);
FullPartition run_trials(const Hypergraph& h, const HighLowSplit& split, const HighPartition& p, const QTriple& q,
                         std::size_t trials, std::uint64_t seed, int jobs = 0);

struct ConcentrationParams {
  double alpha = 0;
  std::uint64_t m = 0;
  std::uint64_t e3 = 0;
  double z = 0;       // sqrt((9/2) ln 3) m^(1 - alpha/2)
  double target = 0;  // (19/27)(m - e3) - z
  bool vacuous = false;
  // sum of squared low degrees, against its bound 9 m^(2 - alpha)
  double low_degree_square_sum = 0;
  double low_degree_square_bound = 0;
};

double deviation_bound(std::uint64_t m, double alpha);

ConcentrationParams concentration_report(const Hypergraph& h, const HighLowSplit& split);

}  // namespace judicious
