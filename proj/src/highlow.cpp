#include "judicious/highlow.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "judicious/rng.hpp"

namespace judicious {

namespace {

// The two parts other than k, ascending.
constexpr std::array<std::array<PartId, 2>, kParts> kOthers{{{1, 2}, {0, 2}, {0, 1}}};

std::size_t ceil_power(std::size_t m, double alpha) {
  const double r = std::pow(static_cast<double>(m), alpha);
  // absorb pow() rounding when m^alpha is an exact integer
  return static_cast<std::size_t>(std::ceil(r * (1 - 1e-12)));
}

class SearchState {
 public:
  SearchState(const HighMultigraph& g, std::vector<PartId> part) : g_(g), part_(std::move(part)) {
    const std::size_t n = g_.size();
    if (part_.size() != n) throw std::invalid_argument("partition size does not match multigraph");
    to_part_.assign(n * kParts, 0);
    for (std::size_t v = 0; v < n; ++v) {
      if (part_[v] >= kParts) throw std::invalid_argument("part index out of range");
      for (std::size_t u = 0; u < n; ++u) to_part_[v * kParts + part_[u]] += g_.weight(v, u);
    }
    counts_ = count_partition(g_, part_);
  }

  // First improving single-vertex move in (vertex, target) order.
  bool try_vertex_move() {
    for (std::size_t v = 0; v < g_.size(); ++v) {
      const PartId from = part_[v];
      for (PartId to = 0; to < kParts; ++to) {
        if (to == from) continue;
        if (weight_to(v, from) > weight_to(v, to)) {
          move_vertex(v, to);
          return true;
        }
      }
    }
    return false;
  }

  // First improving merge-and-split in (i, j) order, k the remaining part.
  bool try_compound_move() {
    for (PartId i = 0; i < kParts; ++i) {
      for (PartId j = 0; j < kParts; ++j) {
        if (i == j) continue;
        const auto k = static_cast<PartId>(kParts - i - j);
        std::vector<std::uint32_t> members;
        for (std::size_t v = 0; v < part_.size(); ++v) {
          if (part_[v] == k) members.push_back(static_cast<std::uint32_t>(v));
        }
        Bipartition split = greedy_bipartition(g_, members);
        // merging i into j loses b_ij (= b[k]); splitting k gains the cut
        if (split.cut <= counts_.b[k]) continue;
        for (std::size_t v = 0; v < part_.size(); ++v) {
          if (part_[v] == i) move_vertex(v, j, false);
        }
        for (auto v : split.side1) move_vertex(v, i, false);
        counts_ = count_partition(g_, part_);
        return true;
      }
    }
    return false;
  }

  const std::vector<PartId>& part() const { return part_; }
  const PartitionCounts& counts() const { return counts_; }

 private:
  std::uint64_t weight_to(std::size_t v, PartId p) const { return to_part_[v * kParts + p]; }

  void move_vertex(std::size_t v, PartId to, bool update_counts = true) {
    const PartId from = part_[v];
    if (from == to) return;
    if (update_counts) {
      // internal edges of v in `from` become cross edges, and vice versa for `to`
      const PartId third = static_cast<PartId>(kParts - from - to);
      const std::uint64_t w_from = weight_to(v, from);
      const std::uint64_t w_to = weight_to(v, to);
      const std::uint64_t w_third = weight_to(v, third);
      counts_.x[from] -= w_from;
      counts_.b[third] += w_from;
      counts_.b[third] -= w_to;
      counts_.x[to] += w_to;
      counts_.b[to] -= w_third;
      counts_.b[from] += w_third;
    }
    for (std::size_t u = 0; u < g_.size(); ++u) {
      const std::uint64_t w = g_.weight(u, v);
      if (w == 0) continue;
      to_part_[u * kParts + from] -= w;
      to_part_[u * kParts + to] += w;
    }
    part_[v] = to;
  }

  const HighMultigraph& g_;
  std::vector<PartId> part_;
  std::vector<std::uint64_t> to_part_;  // v * 3 + p -> weight from v into part p
  PartitionCounts counts_;
};

}  // namespace

HighLowSplit split_high_low(const Hypergraph& h, double alpha) {
  if (!(alpha > 0 && alpha < 1.0 / 3.0)) throw std::invalid_argument("alpha must lie in (0, 1/3)");
  const std::size_t m = h.num_edges();
  if (m == 0) throw std::invalid_argument("hypergraph has no edges (m = 0)");
  const std::size_t n = h.num_vertices();

  HighLowSplit split;
  split.alpha = alpha;
  split.t = std::min(n, ceil_power(m, alpha));

  const DegreeTable deg = degrees(h);
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return deg[a] > deg[b]; });

  split.high.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(split.t));
  split.slot.assign(n, -1);
  for (std::size_t i = 0; i < split.t; ++i) split.slot[split.high[i]] = static_cast<std::int32_t>(i);
  for (Vertex v = 0; v < n; ++v) {
    if (split.slot[v] < 0) split.low.push_back(v);
  }
  return split;
}

void HighMultigraph::add(std::size_t i, std::size_t j, std::uint64_t multiplicity) {
  if (i == j) throw std::invalid_argument("multigraph loops are not allowed");
  if (i >= size_ || j >= size_) throw std::out_of_range("multigraph vertex out of range");
  weight_[i * size_ + j] += multiplicity;
  weight_[j * size_ + i] += multiplicity;
  total_ += multiplicity;
}

std::vector<HighMultigraph::Pair> HighMultigraph::pairs() const {
  std::vector<Pair> out;
  for (std::uint32_t u = 0; u < size_; ++u)
    for (std::uint32_t v = u + 1; v < size_; ++v)
      if (auto w = weight(u, v); w > 0) out.push_back({u, v, w});
  return out;
}

HighMultigraph build_multigraph(const Hypergraph& h, const HighLowSplit& split) {
  HighMultigraph g(split.high.size());
  for (const Edge& e : h.edges()) {
    std::array<std::int32_t, 3> s{};
    int highs = 0;
    for (Vertex v : e) {
      if (split.is_high(v)) s[highs++] = split.slot[v];
    }
    if (highs == 2) g.add(static_cast<std::size_t>(s[0]), static_cast<std::size_t>(s[1]));
  }
  return g;
}

PartitionCounts count_partition(const HighMultigraph& g, std::span<const PartId> part) {
  PartitionCounts c;
  for (const auto& [u, v, w] : g.pairs()) {
    const PartId pu = part[u];
    const PartId pv = part[v];
    if (pu == pv) {
      c.x[pu] += w;
    } else {
      c.b[kParts - pu - pv] += w;
    }
  }
  return c;
}

Bipartition greedy_bipartition(const HighMultigraph& g, std::span<const std::uint32_t> vertices) {
  Bipartition out;
  for (std::uint32_t v : vertices) {
    std::uint64_t w1 = 0;
    std::uint64_t w2 = 0;
    for (auto u : out.side1) w1 += g.weight(v, u);
    for (auto u : out.side2) w2 += g.weight(v, u);
    bool to_side1;
    if (w1 != w2) {
      to_side1 = w1 < w2;
    } else {
      to_side1 = out.side1.size() <= out.side2.size();
    }
    if (to_side1) {
      out.side1.push_back(v);
      out.cut += w2;
    } else {
      out.side2.push_back(v);
      out.cut += w1;
    }
  }
  return out;
}

HighPartition local_search_from(const HighMultigraph& g, std::vector<PartId> initial) {
  SearchState state(g, std::move(initial));
  std::uint64_t moves = 0;
  while (state.try_vertex_move() || state.try_compound_move()) ++moves;
  HighPartition out;
  out.part = state.part();
  out.counts = state.counts();
  out.moves = moves;
  return out;
}

HighPartition local_search_partition(const HighMultigraph& g, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<PartId> initial(g.size());
  for (auto& p : initial) p = static_cast<PartId>(rng.below(kParts));
  return local_search_from(g, std::move(initial));
}

void place_isolated_high(const Hypergraph& h, const HighLowSplit& split, const HighMultigraph& g, HighPartition& p) {
  std::vector<std::array<std::uint32_t, 3>> inner;  // 3-high edges as slots
  for (const Edge& e : h.edges()) {
    if (split.is_high(e[0]) && split.is_high(e[1]) && split.is_high(e[2])) {
      inner.push_back({static_cast<std::uint32_t>(split.slot[e[0]]), static_cast<std::uint32_t>(split.slot[e[1]]),
                       static_cast<std::uint32_t>(split.slot[e[2]])});
    }
  }
  for (std::uint32_t v = 0; v < g.size(); ++v) {
    bool isolated = true;
    for (std::size_t u = 0; u < g.size() && isolated; ++u) isolated = g.weight(v, u) == 0;
    if (!isolated) continue;

    std::array<std::uint64_t, kParts> gain{};
    for (const auto& e : inner) {
      if (e[0] != v && e[1] != v && e[2] != v) continue;
      unsigned others = 0;
      for (auto u : e) {
        if (u != v) others |= 1u << p.part[u];
      }
      for (std::size_t r = 0; r < kParts; ++r) gain[r] += ((others >> r) & 1u) == 0;
    }
    PartId best = p.part[v];
    for (PartId r = 0; r < kParts; ++r) {
      if (gain[r] > gain[best]) best = r;
    }
    p.part[v] = best;
  }
}

double InequalityMargins::min() const {
  double m = slack[0][0];
  for (const auto& row : slack)
    for (double s : row) m = std::min(m, s);
  return m;
}

InequalityMargins check_partition_inequalities(const PartitionCounts& counts) {
  InequalityMargins out;
  for (std::size_t k = 0; k < kParts; ++k) {
    const auto b = static_cast<double>(counts.b[k]);
    const auto [i, j] = kOthers[k];
    out.slack[k] = {b - 2.0 * static_cast<double>(counts.x[i]), b - 2.0 * static_cast<double>(counts.x[j]),
                    b - 0.5 * static_cast<double>(counts.x[k])};
  }
  return out;
}

}  // namespace judicious
