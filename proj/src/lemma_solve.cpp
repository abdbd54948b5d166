#include "judicious/lemma_solve.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace judicious {

namespace {

constexpr std::array<std::array<std::size_t, 2>, kParts> kOthers{{{1, 2}, {0, 2}, {0, 1}}};

// Float noise tolerated below 2 when capping; anything larger is a violation.
constexpr double kSumTolerance = 1e-12;

}  // namespace

std::uint64_t EdgeProfile::total() const {
  std::uint64_t s = c + e3;
  for (std::size_t i = 0; i < kParts; ++i) s += x[i] + b[i] + a[i];
  return s;
}

EdgeProfile compute_profile(const Hypergraph& h, const HighLowSplit& split, const HighPartition& p) {
  if (p.part.size() != split.high.size()) throw std::invalid_argument("partition does not cover the high set");
  EdgeProfile prof;
  prof.m = h.num_edges();
  for (const Edge& e : h.edges()) {
    std::array<PartId, 3> parts{};
    int highs = 0;
    for (Vertex v : e) {
      if (split.is_high(v)) parts[highs++] = p.part[static_cast<std::size_t>(split.slot[v])];
    }
    switch (highs) {
      case 0:
        ++prof.c;
        break;
      case 1:
        ++prof.a[parts[0]];
        break;
      case 2:
        if (parts[0] == parts[1]) {
          ++prof.x[parts[0]];
        } else {
          ++prof.b[kParts - parts[0] - parts[1]];
        }
        break;
      default: {
        ++prof.e3;
        for (PartId i = 0; i < kParts; ++i) {
          if (parts[0] != i && parts[1] != i && parts[2] != i) ++prof.e3_miss[i];
        }
      }
    }
  }
  return prof;
}

Rational LemmaInstance::linear(std::size_t i) const {
  const auto [j, k] = kOthers[i];
  return b[i] + x[j] + x[k];
}

Rational LemmaInstance::quadratic(std::size_t i) const {
  const auto [j, k] = kOthers[i];
  return a[j] + a[k];
}

Rational LemmaInstance::sum() const {
  Rational s = c;
  for (std::size_t i = 0; i < kParts; ++i) s += x[i] + b[i] + a[i];
  return s;
}

bool LemmaInstance::satisfies_constraints() const {
  for (std::size_t k = 0; k < kParts; ++k) {
    const auto [i, j] = kOthers[k];
    if (b[k] < 2 * x[i] || b[k] < 2 * x[j] || b[k] < x[k] / 2) return false;
  }
  return true;
}

LemmaInstance normalize(const EdgeProfile& profile) {
  if (profile.total() != profile.m) throw std::invalid_argument("edge profile does not sum to m");
  if (profile.m == profile.e3) throw DegenerateInstance("every edge lies inside the high set (m = e3)");
  const auto scale = static_cast<std::int64_t>(profile.m - profile.e3);
  auto frac = [&](std::uint64_t v) { return Rational(static_cast<std::int64_t>(v), scale); };

  LemmaInstance inst;
  for (std::size_t i = 0; i < kParts; ++i) {
    inst.x[i] = frac(profile.x[i]);
    inst.b[i] = frac(profile.b[i]);
    inst.a[i] = frac(profile.a[i]);
  }
  inst.c = frac(profile.c);
  if (!inst.satisfies_constraints()) {
    throw ConstraintViolation("high partition violates b_ij >= max(2x_i, 2x_j, x_k/2)");
  }
  return inst;
}

double miss_polynomial(double linear, double quadratic, double cubic, double q) {
  return q * (linear + q * (quadratic + q * cubic));
}

double eval_L(const LemmaInstance& inst, std::size_t i, double q) {
  return miss_polynomial(inst.linear(i).to_double(), inst.quadratic(i).to_double(), inst.c.to_double(), q);
}

double qtilde(double linear, double quadratic, double cubic) {
  if (linear < 0 || quadratic < 0 || cubic < 0) throw std::invalid_argument("qtilde coefficients must be nonnegative");
  if (miss_polynomial(linear, quadratic, cubic, 1.0) < kMissTarget) return 1.0;
  double lo = 0.0;
  double hi = 1.0;
  while (hi - lo > kQtildeTolerance) {
    const double mid = 0.5 * (lo + hi);
    if (miss_polynomial(linear, quadratic, cubic, mid) < kMissTarget) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return hi;
}

QTriple waterfill(const std::array<double, kParts>& caps) {
  const double total = caps[0] + caps[1] + caps[2];
  if (total < 2.0 - kSumTolerance) {
    throw LemmaViolation("probability caps sum to " + std::to_string(total) + " < 2");
  }
  QTriple out;
  out.qtilde = caps;
  out.q = caps;
  double surplus = total - 2.0;
  if (surplus >= 0) {
    // smallest cap first, ties from index 3 down
    std::array<std::size_t, kParts> order{2, 1, 0};
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return caps[a] < caps[b]; });
    for (std::size_t i : order) {
      if (surplus <= 0) break;
      const double take = std::min(out.q[i], surplus);
      out.q[i] -= take;
      surplus -= take;
    }
  } else {
    // rounding deficit (below kSumTolerance): top up from index 1
    for (std::size_t i = 0; i < kParts && surplus < 0; ++i) {
      const double give = std::min(1.0 - out.q[i], -surplus);
      out.q[i] += give;
      surplus += give;
    }
  }
  return out;
}

QTriple solve_q(const LemmaInstance& inst) {
  const double c = inst.c.to_double();
  std::array<double, kParts> caps{};
  for (std::size_t i = 0; i < kParts; ++i) {
    caps[i] = qtilde(inst.linear(i).to_double(), inst.quadratic(i).to_double(), c);
  }
  QTriple out = waterfill(caps);
  for (std::size_t i = 0; i < kParts; ++i) {
    if (eval_L(inst, i, out.q[i]) > kMissTarget + kPostCheckSlack) {
      throw LemmaViolation("post-check failed for part " + std::to_string(i + 1));
    }
  }
  return out;
}

double expected_coverage(const LemmaInstance& inst, const EdgeProfile& profile, const QTriple& q, std::size_t i) {
  const auto m = static_cast<double>(profile.m);
  const auto reduced = static_cast<double>(profile.m - profile.e3);
  return m - reduced * eval_L(inst, i, q.q[i]) - static_cast<double>(profile.e3_miss[i]);
}

}  // namespace judicious
