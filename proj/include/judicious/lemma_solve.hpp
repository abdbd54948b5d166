#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>

#include "judicious/highlow.hpp"
#include "judicious/hypergraph.hpp"
#include "judicious/rational.hpp"

namespace judicious {

// Largest value the per-part miss polynomial may take.
inline constexpr double kMissTarget = 8.0 / 27.0;
inline constexpr double kQtildeTolerance = 1e-14;
inline constexpr double kPostCheckSlack = 1e-12;

// Raised when the probability caps cannot be brought to sum 2, or a solved
// triple fails its post-check. Never expected on a valid instance.
class LemmaViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The profile's b-inequalities fail; points at a partitioner bug.
class ConstraintViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// m == e3: every edge lies inside the high set, nothing to solve.
class DegenerateInstance : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Edge counts by how many high vertices an edge has. b[k] counts 2-high
// edges between the two parts other than k, a[i] the 1-high edges whose
// high vertex is in part i. e3_miss[i] counts the 3-high edges with no
// vertex in part i.
struct EdgeProfile {
  std::array<std::uint64_t, kParts> x{};
  std::array<std::uint64_t, kParts> b{};
  std::array<std::uint64_t, kParts> a{};
  std::uint64_t c = 0;
  std::uint64_t e3 = 0;
  std::uint64_t m = 0;
  std::array<std::uint64_t, kParts> e3_miss{};

  std::uint64_t total() const;
};

EdgeProfile compute_profile(const Hypergraph& h, const HighLowSplit& split, const HighPartition& p);

// The profile scaled by 1 / (m - e3), held exactly.
struct LemmaInstance {
  std::array<Rational, kParts> x{};
  std::array<Rational, kParts> b{};
  std::array<Rational, kParts> a{};
  Rational c{};

  // b_jk + x_j + x_k and a_j + a_k for {i, j, k} = {0, 1, 2}.
  Rational linear(std::size_t i) const;
  Rational quadratic(std::size_t i) const;
  Rational sum() const;
  // True when b_ij >= max(2 x_i, 2 x_j, x_k / 2) for every pair.
  bool satisfies_constraints() const;
};

LemmaInstance normalize(const EdgeProfile& profile);

// q B_i + q^2 A_i + q^3 c
double eval_L(const LemmaInstance& inst, std::size_t i, double q);
double miss_polynomial(double linear, double quadratic, double cubic, double q);

// min(1, root of q B + q^2 A + q^3 c = 8/27), by bisection. The returned
// value is the upper end of the final bracket, so it is never below the
// exact root by more than rounding.
double qtilde(double linear, double quadratic, double cubic);

struct QTriple {
  std::array<double, kParts> q{};
  std::array<double, kParts> qtilde{};

  std::array<double, kParts> p() const { return {1 - q[0], 1 - q[1], 1 - q[2]}; }
};

// Removes the surplus sum(caps) - 2 starting with the smallest cap (ties:
// component 3, then 2, then 1), so a part whose miss polynomial is steep
// receives the low vertices first.
QTriple waterfill(const std::array<double, kParts>& caps);

QTriple solve_q(const LemmaInstance& inst);

// Expected number of edges meeting part i once low vertices are placed with
// p = 1 - q: m - (m - e3) L_i(q_i) - e3_miss[i].
double expected_coverage(const LemmaInstance& inst, const EdgeProfile& profile, const QTriple& q, std::size_t i);

}  // namespace judicious
