#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "judicious/hypergraph.hpp"

namespace judicious {

inline constexpr std::size_t kParts = 3;
using PartId = std::uint8_t;  // 0, 1, 2 internally; printed as 1, 2, 3

// The t highest-degree vertices (ties to the smaller label) and the rest.
struct HighLowSplit {
  double alpha = 0;
  std::size_t t = 0;
  std::vector<Vertex> high;       // sorted by (degree desc, label asc)
  std::vector<Vertex> low;        // ascending label
  std::vector<std::int32_t> slot;  // vertex -> index into `high`, or -1

  bool is_high(Vertex v) const { return slot[v] >= 0; }
};

// t = min(n, ceil(m^alpha)). Throws std::invalid_argument unless
// 0 < alpha < 1/3 and m >= 1.
HighLowSplit split_high_low(const Hypergraph& h, double alpha);

// Multigraph on the high vertices; vertex i of the multigraph is
// split.high[i]. Multiplicity of {i, j} = number of hypergraph edges whose
// intersection with the high set is exactly {high[i], high[j]}.
class HighMultigraph {
 public:
  struct Pair {
    std::uint32_t u, v;
    std::uint64_t multiplicity;
  };

  HighMultigraph() = default;
  explicit HighMultigraph(std::size_t size) : size_(size), weight_(size * size, 0) {}

  std::size_t size() const { return size_; }
  std::uint64_t weight(std::size_t i, std::size_t j) const { return weight_[i * size_ + j]; }
  std::uint64_t total() const { return total_; }

  void add(std::size_t i, std::size_t j, std::uint64_t multiplicity = 1);
  // Nonzero pairs with u < v, lexicographic.
  std::vector<Pair> pairs() const;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> weight_;
  std::uint64_t total_ = 0;
};

HighMultigraph build_multigraph(const Hypergraph& h, const HighLowSplit& split);

// Internal edge counts x[i] and cross counts b[k], where b[k] joins the two
// parts other than k (b[0] = b23, b[1] = b13, b[2] = b12).
struct PartitionCounts {
  std::array<std::uint64_t, kParts> x{};
  std::array<std::uint64_t, kParts> b{};

  std::uint64_t objective() const { return b[0] + b[1] + b[2]; }
};

struct HighPartition {
  std::vector<PartId> part;  // per multigraph vertex
  PartitionCounts counts;
  std::uint64_t moves = 0;   // improving moves applied

  const std::array<std::uint64_t, kParts>& x() const { return counts.x; }
  const std::array<std::uint64_t, kParts>& b() const { return counts.b; }
  std::uint64_t objective() const { return counts.objective(); }
};

PartitionCounts count_partition(const HighMultigraph& g, std::span<const PartId> part);

struct Bipartition {
  std::vector<std::uint32_t> side1;
  std::vector<std::uint32_t> side2;
  std::uint64_t cut = 0;
};

// Greedy cut of the sub-multigraph induced by `vertices`, taken in the
// given order: each vertex joins the side holding less of its weight
// (ties: smaller side, then side 1). cut >= half the induced multiplicity.
Bipartition greedy_bipartition(const HighMultigraph& g, std::span<const std::uint32_t> vertices);

// Local search from a seeded uniform random 3-partition. Single-vertex moves
// are scanned first in (vertex, target part) order; merge-and-split moves
// (absorb part i into j, rebuild i from a greedy bipartition of k) only when
// no single move improves. Stops at a partition stationary under both.
HighPartition local_search_partition(const HighMultigraph& g, std::uint64_t seed);
HighPartition local_search_from(const HighMultigraph& g, std::vector<PartId> initial);

// High vertices without multigraph edges never change the objective. Each
// (in slot order) moves to the part missed by most of its 3-high edges given
// the current placement; it stays put on ties with its part, else the lowest
// part wins. Counts are unchanged.
void place_isolated_high(const Hypergraph& h, const HighLowSplit& split, const HighMultigraph& g, HighPartition& p);

// slack[k] = {b[k] - 2 x_i, b[k] - 2 x_j, b[k] - x_k / 2} with i < j the two
// parts other than k.
struct InequalityMargins {
  std::array<std::array<double, 3>, kParts> slack{};

  double min() const;
  bool all_nonnegative() const { return min() >= 0; }
};

InequalityMargins check_partition_inequalities(const PartitionCounts& counts);

}  // namespace judicious
