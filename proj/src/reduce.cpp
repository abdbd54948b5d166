#include "judicious/reduce.hpp"

#include <algorithm>
#include <stdexcept>

namespace judicious::verify {

namespace {

// Composes a form over system variables with the per-variable affine maps.
AffineForm compose(const LinearForm& form, const std::vector<AffineForm>& vars, std::size_t dims) {
  AffineForm out{Rational(0), std::vector<Rational>(dims, Rational(0))};
  for (std::size_t v = 0; v < form.size(); ++v) {
    if (form[v].is_zero()) continue;
    out.constant += form[v] * vars[v].constant;
    for (std::size_t f = 0; f < dims; ++f) out.coeff[f] += form[v] * vars[v].coeff[f];
  }
  return out;
}

// Extremes of an affine form over the box prod [0, upper[f]].
std::pair<Rational, Rational> range_over(const AffineForm& form, const std::vector<Rational>& upper) {
  Rational lo = form.constant;
  Rational hi = form.constant;
  for (std::size_t f = 0; f < upper.size(); ++f) {
    const Rational span = form.coeff[f] * upper[f];
    if (span.sign() > 0) {
      hi += span;
    } else {
      lo += span;
    }
  }
  return {lo, hi};
}

}  // namespace

Rational AffineForm::eval(std::span<const Rational> point) const {
  Rational s = constant;
  for (std::size_t f = 0; f < coeff.size(); ++f) s += coeff[f] * point[f];
  return s;
}

double AffineForm::eval(std::span<const double> point) const {
  double s = constant.to_double();
  for (std::size_t f = 0; f < coeff.size(); ++f) s += coeff[f].to_double() * point[f];
  return s;
}

bool ReducedCase::admissible(std::span<const Rational> point) const {
  if (empty) return false;
  for (std::size_t f = 0; f < dims(); ++f) {
    if (point[f].sign() < 0 || point[f] > upper[f]) return false;
  }
  return std::all_of(domain.begin(), domain.end(), [&](const AffineForm& g) { return g.eval(point).sign() >= 0; });
}

bool ReducedCase::admissible(std::span<const double> point, double tol) const {
  if (empty) return false;
  for (std::size_t f = 0; f < dims(); ++f) {
    if (point[f] < -tol || point[f] > upper[f].to_double() + tol) return false;
  }
  return std::all_of(domain.begin(), domain.end(), [&](const AffineForm& g) { return g.eval(point) >= -tol; });
}

ReducedCase reduce(const SystemSpec& spec, std::span<const std::size_t> active, std::optional<std::size_t> eliminate) {
  const std::size_t nv = spec.vars.size();
  ReducedCase out;
  out.system = spec.id;
  out.active.assign(active.begin(), active.end());

  // expr[v]: variable v as a linear form over the not-yet-eliminated variables
  std::vector<LinearForm> expr(nv, LinearForm(nv, Rational(0)));
  for (std::size_t v = 0; v < nv; ++v) expr[v][v] = 1;
  std::vector<bool> eliminated(nv, false);

  for (std::size_t idx : active) {
    const BoundaryCondition& cond = spec.boundary.at(idx);
    LinearForm h(nv, Rational(0));
    for (std::size_t v = 0; v < nv; ++v) {
      if (cond.form[v].is_zero()) continue;
      for (std::size_t u = 0; u < nv; ++u) h[u] += cond.form[v] * expr[v][u];
    }
    std::size_t pivot = nv;
    if (!h[cond.pivot].is_zero()) {
      pivot = cond.pivot;
    } else {
      for (std::size_t u = 0; u < nv; ++u) {
        if (!h[u].is_zero()) {
          pivot = u;
          break;
        }
      }
    }
    if (pivot == nv) continue;  // implied by the earlier conditions

    // pivot = -(1/h[pivot]) * sum_{u != pivot} h[u] u
    LinearForm sub(nv, Rational(0));
    for (std::size_t u = 0; u < nv; ++u) {
      if (u != pivot) sub[u] = -h[u] / h[pivot];
    }
    for (auto& e : expr) {
      const Rational c = e[pivot];
      if (c.is_zero()) continue;
      e[pivot] = 0;
      for (std::size_t u = 0; u < nv; ++u) e[u] += c * sub[u];
    }
    eliminated[pivot] = true;
  }

  std::vector<std::size_t> remaining;
  for (std::size_t v = 0; v < nv; ++v) {
    if (!eliminated[v]) remaining.push_back(v);
  }

  LinearForm sum(nv, Rational(0));
  for (std::size_t v = 0; v < nv; ++v) {
    for (std::size_t u = 0; u < nv; ++u) sum[u] += spec.sum_coeffs[v] * expr[v][u];
  }

  std::size_t elim = nv;
  if (eliminate) {
    if (std::find(remaining.begin(), remaining.end(), *eliminate) == remaining.end() || sum[*eliminate].is_zero()) {
      throw std::invalid_argument("cannot eliminate " + spec.vars.at(*eliminate) + " from the sum constraint");
    }
    elim = *eliminate;
  }
  for (std::size_t v : remaining) {
    if (!eliminate && sum[v] == Rational(1)) elim = v;
  }
  if (elim == nv) {
    for (std::size_t v : remaining) {
      if (!sum[v].is_zero()) elim = v;
    }
  }

  std::vector<std::size_t> free;
  for (std::size_t v : remaining) {
    if (v != elim) free.push_back(v);
  }
  for (std::size_t v : free) out.free_names.push_back(spec.vars[v]);
  const std::size_t dims = free.size();

  if (elim == nv) {
    // sum constraint reads 0 = 1
    out.empty = true;
    out.vars.assign(nv, AffineForm{Rational(0), std::vector<Rational>(dims, Rational(0))});
    out.upper.assign(dims, Rational(0));
    return out;
  }
  out.eliminated = spec.vars[elim];

  // elim = (1 - sum_{f} sum[f] f) / sum[elim]
  for (std::size_t v = 0; v < nv; ++v) {
    AffineForm a{Rational(0), std::vector<Rational>(dims, Rational(0))};
    const Rational ce = expr[v][elim];
    a.constant = ce / sum[elim];
    for (std::size_t f = 0; f < dims; ++f) a.coeff[f] = expr[v][free[f]] - ce * sum[free[f]] / sum[elim];
    out.vars.push_back(std::move(a));
  }

  for (std::size_t f = 0; f < dims; ++f) {
    const Rational s = sum[free[f]];
    if (s.sign() <= 0) {
      throw std::logic_error("free variable " + spec.vars[free[f]] + " is not bounded by the sum constraint");
    }
    out.upper.push_back(Rational(1) / s);
  }

  for (std::size_t i = 0; i < 3; ++i) {
    out.linear[i] = compose(spec.linear[i], out.vars, dims);
    out.quadratic[i] = compose(spec.quadratic[i], out.vars, dims);
  }

  std::vector<AffineForm> constraints;
  for (const auto& g : spec.domain) constraints.push_back(compose(g, out.vars, dims));
  for (std::size_t v = 0; v < nv; ++v) constraints.push_back(out.vars[v]);
  for (auto& g : constraints) {
    auto [lo, hi] = range_over(g, out.upper);
    if (lo.sign() >= 0) continue;
    if (hi.sign() < 0) out.empty = true;
    if (std::find(out.domain.begin(), out.domain.end(), g) == out.domain.end()) out.domain.push_back(std::move(g));
  }
  return out;
}

std::vector<ReducedCase> reduce_all(const SystemSpec& spec, std::span<const std::size_t> active) {
  std::vector<ReducedCase> out;
  for (std::size_t v = 0; v < spec.vars.size(); ++v) {
    try {
      out.push_back(reduce(spec, active, v));
    } catch (const std::logic_error&) {
      // v is fixed by a condition or absent from the sum, or another variable would be unbounded
    }
  }
  return out;
}

ReducedCase reduce_case(const SystemSpec& spec, const CaseSpec& c) {
  if (c.system != spec.id) throw std::invalid_argument("case belongs to a different system");
  return reduce(spec, c.active);
}

}  // namespace judicious::verify
