#include "judicious/assign.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "judicious/rng.hpp"

namespace judicious {

namespace {

bool better(const FullPartition& a, const FullPartition& b) {
  const auto ma = a.min_coverage();
  const auto mb = b.min_coverage();
  if (ma != mb) return ma > mb;
  return a.trial < b.trial;
}

}  // namespace

std::uint64_t FullPartition::min_coverage() const {
  return std::min({coverage[0], coverage[1], coverage[2]});
}

Coverage score(const Hypergraph& h, std::span<const PartId> assignment) {
  if (assignment.size() != h.num_vertices()) throw std::invalid_argument("assignment size does not match vertex count");
  for (std::size_t v = 0; v < assignment.size(); ++v) {
    if (assignment[v] >= kParts) throw std::invalid_argument("vertex " + std::to_string(v) + " is unassigned");
  }
  Coverage cov{};
  for (const Edge& e : h.edges()) {
    const unsigned mask = (1u << assignment[e[0]]) | (1u << assignment[e[1]]) | (1u << assignment[e[2]]);
    for (std::size_t i = 0; i < kParts; ++i) cov[i] += (mask >> i) & 1u;
  }
  return cov;
}

FullPartition assign_low(const Hypergraph& h, const HighLowSplit& split, const HighPartition& p, const QTriple& q,
                         std::uint64_t seed) {
  const auto probs = q.p();
  const double first = probs[0];
  const double second = probs[0] + probs[1];
  const DegreeTable deg = degrees(h);

  FullPartition out;
  out.assignment.assign(h.num_vertices(), kUnassigned);
  for (std::size_t i = 0; i < split.high.size(); ++i) out.assignment[split.high[i]] = p.part[i];

  SplitMix64 rng(seed);
  for (Vertex v : split.low) {
    if (deg[v] == 0) continue;
    const double u = rng.uniform();
    out.assignment[v] = u < first ? 0 : (u < second ? 1 : 2);
  }
  for (std::size_t v = 0; v < deg.size(); ++v) {
    if (deg[v] == 0) out.assignment[v] = 0;
  }
  out.coverage = score(h, out.assignment);
  return out;
}

FullPartition run_trials_serial(const Hypergraph& h, const HighLowSplit& split, const HighPartition& p,
                                const QTriple& q, std::size_t trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  FullPartition best = assign_low(h, split, p, q, seed);
  for (std::size_t t = 1; t < trials; ++t) {
    FullPartition cand = assign_low(h, split, p, q, seed + t);
    cand.trial = t;
    if (better(cand, best)) best = std::move(cand);
  }
  return best;
}

FullPartition run_trials(const Hypergraph& h, const HighLowSplit& split, const HighPartition& p, const QTriple& q,
                         std::size_t trials, std::uint64_t seed, int jobs) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
#ifdef _OPENMP
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
  std::vector<FullPartition> best(static_cast<std::size_t>(threads));
  std::vector<char> has(static_cast<std::size_t>(threads), 0);
  const auto count = static_cast<std::int64_t>(trials);

#pragma omp parallel num_threads(threads)
  {
    const auto me = static_cast<std::size_t>(omp_get_thread_num());
#pragma omp for schedule(static)
    for (std::int64_t t = 0; t < count; ++t) {
      FullPartition cand = assign_low(h, split, p, q, seed + static_cast<std::uint64_t>(t));
      cand.trial = static_cast<std::size_t>(t);
      if (!has[me] || better(cand, best[me])) {
        best[me] = std::move(cand);
        has[me] = 1;
      }
    }
  }

  std::size_t pick = threads;
  for (std::size_t i = 0; i < best.size(); ++i) {
    if (!has[i]) continue;
    if (pick == static_cast<std::size_t>(threads) || better(best[i], best[pick])) pick = i;
  }
  return std::move(best[pick]);
#else
  (void)jobs;
  return run_trials_serial(h, split, p, q, trials, seed);
#endif
}

double deviation_bound(std::uint64_t m, double alpha) {
  return std::sqrt(4.5 * std::log(3.0)) * std::pow(static_cast<double>(m), 1.0 - alpha / 2.0);
}

ConcentrationParams concentration_report(const Hypergraph& h, const HighLowSplit& split) {
  if (h.num_edges() == 0) throw std::invalid_argument("hypergraph has no edges (m = 0)");
  ConcentrationParams out;
  out.alpha = split.alpha;
  out.m = h.num_edges();
  for (const Edge& e : h.edges()) {
    if (split.is_high(e[0]) && split.is_high(e[1]) && split.is_high(e[2])) ++out.e3;
  }
  out.z = deviation_bound(out.m, split.alpha);
  out.target = 19.0 / 27.0 * static_cast<double>(out.m - out.e3) - out.z;
  out.vacuous = out.target <= 0;

  const DegreeTable deg = degrees(h);
  for (Vertex v : split.low) out.low_degree_square_sum += static_cast<double>(deg[v]) * static_cast<double>(deg[v]);
  out.low_degree_square_bound = 9.0 * std::pow(static_cast<double>(out.m), 2.0 - split.alpha);
  return out;
}

}  // namespace judicious
