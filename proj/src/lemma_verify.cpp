#include "judicious/lemma_verify.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <map>
#include <sstream>
#include <stdexcept>

#include "judicious/lemma_solve.hpp"

namespace judicious::verify {

namespace {

using Point = std::vector<Rational>;  // full system variable vector

struct AnalyticCase {
  std::string name;
  SystemId system;           // system whose variables the quantity reads
  std::vector<std::size_t> active;
  std::string quantity;
  std::vector<Point> critical;
};

constexpr std::array<SystemId, 6> kTableSystems{SystemId::k1a, SystemId::k1b, SystemId::k1c,
                                                SystemId::k1d, SystemId::k1e, SystemId::k1f};

// Value of `form` at a full variable vector given in doubles.
double apply(const LinearForm& form, std::span<const double> v) {
  double s = 0;
  for (std::size_t i = 0; i < form.size(); ++i) s += form[i].to_double() * v[i];
  return s;
}

double reciprocal_or_inf(double x) { return x > 0 ? 1.0 / x : std::numeric_limits<double>::infinity(); }

Point jensen_point(const SystemSpec& spec) {
  Point p(spec.vars.size(), Rational(0));
  for (const char* a : {"a1", "a2", "a3"}) p[spec.var_index(a)] = Rational(1, 3);
  return p;
}

std::vector<AnalyticCase> analytic_cases() {
  std::vector<AnalyticCase> out;
  out.push_back({"system2", SystemId::k2, {}, "(8/27)(1/(b13+x1) + 1/(b12+x1)) - 1",
                 {Point{Rational(2, 11), Rational(4, 11), Rational(4, 11)}}});
  for (SystemId id : {SystemId::k1a, SystemId::k1b, SystemId::k1c, SystemId::k1d}) {
    out.push_back({"a-zero/" + std::string(system_name(id)), id, {3, 4, 5}, "(8/27) sum 1/B_i - 2", {}});
  }
  for (SystemId id : kTableSystems) {
    const auto& spec = builtin_system(id);
    out.push_back({"jensen/" + std::string(system_name(id)), id, {0, 1, 2},
                   "sqrt(8/27) sum 1/sqrt(A_i) - 2", {jensen_point(spec)}});
  }
  const auto& fp = builtin_system(SystemId::k1fPrime);
  const Point equal_abc{Rational(4, 9), Rational(4, 9), Rational(4, 9), 0, 0, 0};
  const Point lagrange{Rational(4, 27), Rational(4, 27), Rational(29, 54), 0, 0, Rational(5, 18)};
  const Point residual{Rational(16, 81), Rational(40, 81), Rational(40, 81), 0, Rational(5, 81), 0};
  for (std::size_t i = 1; i < 6; ++i) {
    for (std::size_t j = i + 1; j < 6; ++j) {
      for (std::size_t k = j + 1; k < 6; ++k) {
        std::string name = "1f'/" + fp.boundary[i].label + "," + fp.boundary[j].label + "," + fp.boundary[k].label;
        out.push_back({std::move(name), SystemId::k1fPrime, {i, j, k}, "8/3 - sqrt-sum",
                       {equal_abc, lagrange, residual}});
      }
    }
  }
  return out;
}

double quantity(const AnalyticCase& c, const SystemSpec& spec, std::span<const double> v) {
  switch (c.system) {
    case SystemId::k2: {
      const double x1 = v[0], b12 = v[1], b13 = v[2];
      return 8.0 / 27.0 * (reciprocal_or_inf(b13 + x1) + reciprocal_or_inf(b12 + x1)) - 1.0;
    }
    case SystemId::k1fPrime: {
      std::array<double, 6> arr{};
      std::copy(v.begin(), v.end(), arr.begin());
      return sqrt_sum_margin(arr);
    }
    default:
      break;
  }
  double s = 0;
  if (c.name.starts_with("a-zero/")) {
    for (std::size_t i = 0; i < 3; ++i) s += reciprocal_or_inf(apply(spec.linear[i], v));
    return 8.0 / 27.0 * s - 2.0;
  }
  for (std::size_t i = 0; i < 3; ++i) s += reciprocal_or_inf(std::sqrt(apply(spec.quadratic[i], v)));
  return std::sqrt(8.0 / 27.0) * s - 2.0;
}

std::string format_bound(double b) {
  if (std::isinf(b)) return "inf";
  std::ostringstream os;
  os << std::fixed << std::setprecision(6) << b;
  return os.str();
}

std::string format_eps(const Rational& eps) {
  std::ostringstream os;
  os << eps.to_double();
  return os.str();
}

}  // namespace

CertifiedBound certify_case(const ReducedCase& reduced, const Rational& epsilon, int jobs) {
  const CertGrid grid = build_grid(reduced, epsilon);
  const GridResult r = jobs == 1 ? certify_grid_serial(grid) : certify_grid_parallel(grid, jobs);
  CertifiedBound out;
  out.spec.system = reduced.system;
  std::copy_n(reduced.active.begin(), std::min<std::size_t>(3, reduced.active.size()), out.spec.active.begin());
  out.epsilon = epsilon;
  out.boxes_total = r.cells_total;
  out.boxes_feasible = r.cells_admissible;
  out.bound = std::isinf(r.min_bound) ? r.min_bound : r.min_bound - kDeclaredSlack;
  out.certified = out.bound > 2.0;
  return out;
}

namespace {

CertifiedBound best_tiling(const SystemSpec& spec, const CaseSpec& c, const Rational& epsilon, int jobs) {
  std::optional<CertifiedBound> best;
  for (const ReducedCase& rc : reduce_all(spec, c.active)) {
    if (!rc.empty && build_grid(rc, epsilon).total_cells() > kMaxCells) continue;
    CertifiedBound b = certify_case(rc, epsilon, jobs);
    b.eliminated = rc.eliminated;
    if (!best || b.bound > best->bound) best = std::move(b);
  }
  if (!best) throw std::logic_error("case " + c.label() + " has no tiling within the cell budget");
  best->spec = c;
  return *best;
}

}  // namespace

CertifiedBound certify_case(const CaseSpec& c, const Rational& epsilon, int jobs) {
  CertifiedBound out = best_tiling(builtin_system(c.system), c, epsilon, jobs);
  if (auto alt = alternate_reading(c.system)) out.alternate_bound = best_tiling(*alt, c, epsilon, jobs).bound;
  return out;
}

std::vector<std::string> analytic_case_names() {
  std::vector<std::string> names;
  for (const auto& c : analytic_cases()) names.push_back(c.name);
  return names;
}

double sqrt_sum_margin(const std::array<double, 6>& v) {
  const double A = v[0], B = v[1], C = v[2], a1 = v[3], a2 = v[4], a3 = v[5];
  constexpr double k = 32.0 / 27.0;
  const double s = A + B + C + std::sqrt(A * A + k * (a2 + a3)) + std::sqrt(B * B + k * (a1 + a3)) +
                   std::sqrt(C * C + k * (a1 + a2));
  return 8.0 / 3.0 - s;
}

SpotCheck spot_check_analytic(std::string_view name) {
  const auto cases = analytic_cases();
  auto it = std::find_if(cases.begin(), cases.end(), [&](const AnalyticCase& c) { return c.name == name; });
  if (it == cases.end()) throw std::invalid_argument("unknown analytic case '" + std::string(name) + "'");
  const AnalyticCase& c = *it;
  const SystemSpec& spec = builtin_system(c.system);
  const ReducedCase rc = reduce(spec, c.active);

  SpotCheck out;
  out.name = c.name;
  out.quantity = c.quantity;
  out.coords = rc.free_names;
  out.margin = std::numeric_limits<double>::infinity();

  auto consider = [&](std::span<const double> freept) {
    std::vector<double> full(spec.vars.size());
    for (std::size_t v = 0; v < full.size(); ++v) full[v] = rc.vars[v].eval(freept);
    const double q = quantity(c, spec, full);
    ++out.points;
    if (q < out.margin) {
      out.margin = q;
      out.worst_point.assign(freept.begin(), freept.end());
    }
  };

  if (!rc.empty) {
    const Rational step = Rational::parse("0.001");
    CertGrid grid = build_grid(rc, step);
    std::array<std::int64_t, kMaxDims> n{1, 1, 1};
    for (std::size_t f = 0; f < rc.dims(); ++f) {
      const Rational r = rc.upper[f] / step;
      n[f] = r.num() / r.den() + 1;  // grid points 0..floor(upper/step)
    }
    std::array<std::int64_t, kMaxDims> g{};
    std::vector<double> pt(rc.dims());
    for (g[0] = 0; g[0] < n[0]; ++g[0]) {
      for (g[1] = 0; g[1] < n[1]; ++g[1]) {
        for (g[2] = 0; g[2] < n[2]; ++g[2]) {
          bool ok = true;
          for (const auto& form : grid.constraints) {
            std::int64_t val = form.constant;
            for (std::size_t f = 0; f < kMaxDims; ++f) val += form.step[f] * g[f];
            if (val < 0) {
              ok = false;
              break;
            }
          }
          if (!ok) continue;
          for (std::size_t f = 0; f < rc.dims(); ++f) pt[f] = static_cast<double>(g[f]) * kSpotCheckStep;
          consider(pt);
        }
      }
    }
    // known critical points that lie in this case
    for (const Point& p : c.critical) {
      Point freept;
      for (const auto& fname : rc.free_names) freept.push_back(p[spec.var_index(fname)]);
      bool matches = rc.admissible(freept);
      for (std::size_t v = 0; matches && v < p.size(); ++v) matches = rc.vars[v].eval(freept) == p[v];
      if (!matches) continue;
      std::vector<double> d;
      for (const auto& r : freept) d.push_back(r.to_double());
      consider(d);
    }
  }
  out.passed = out.margin >= -kSpotCheckTolerance;
  return out;
}

Rational lagrange_anchor_value() {
  // A = B, a1 = a2 = 0: 2A + 2C + 2 sqrt(A^2 + (32/27) a3)
  const Rational A(4, 27), C(29, 54), a3(5, 18);
  const auto root = exact_sqrt(A * A + Rational(32, 27) * a3);
  if (!root) throw std::logic_error("anchor radicand is not a perfect square");
  return 2 * A + 2 * C + 2 * *root;
}

Rational residual_anchor_value() {
  // B = C, a1 = a3 = 0, a2 eliminated through 7A/12 + 5C/3 + a2 = 1
  const Rational A(16, 81), C(40, 81);
  const Rational lead = A + 3 * C - Rational(8, 3);
  const Rational a2 = 1 - Rational(7, 12) * A - Rational(5, 3) * C;
  return lead * lead - (2 * A * A + 2 * C * C + Rational(128, 27) * a2);
}

Rational system2_chain_minimum() {
  const Rational x1(2, 11);
  return Rational(32, 27) / (1 + x1 / 2);
}

bool CertificationReport::all_certified() const {
  return std::all_of(computed.begin(), computed.end(), [](const CertifiedBound& b) { return b.certified; });
}

bool CertificationReport::all_spot_checks_pass() const {
  return std::all_of(spot_checks.begin(), spot_checks.end(), [](const SpotCheck& s) { return s.passed; });
}

std::vector<const CertifiedBound*> CertificationReport::failures() const {
  std::vector<const CertifiedBound*> out;
  for (const auto& b : computed) {
    if (!b.certified) out.push_back(&b);
  }
  return out;
}

CertificationReport full_report(const ReportOptions& options) {
  std::vector<SystemId> systems = options.systems;
  if (systems.empty()) systems.assign(kTableSystems.begin(), kTableSystems.end());
  for (SystemId id : systems) {
    if (std::find(kTableSystems.begin(), kTableSystems.end(), id) == kTableSystems.end()) {
      throw std::invalid_argument("system " + std::string(system_name(id)) + " has no case table");
    }
  }

  CertificationReport report;
  for (SystemId id : kTableSystems) {
    if (std::find(systems.begin(), systems.end(), id) == systems.end()) continue;
    for (const CaseSpec& c : enumerate_cases(builtin_system(id))) {
      if (!c.computed()) {
        report.analytic.push_back(c);
        continue;
      }
      const Rational eps = options.epsilon.value_or(*c.epsilon);
      report.computed.push_back(certify_case(c, eps, options.jobs));
    }
  }

  if (options.spot_checks) {
    const bool all = options.systems.empty();
    auto selected = [&](SystemId id) { return all || std::find(systems.begin(), systems.end(), id) != systems.end(); };
    for (const auto& c : analytic_cases()) {
      bool run = false;
      if (c.system == SystemId::k2) {
        run = all;
      } else if (c.system == SystemId::k1fPrime) {
        run = selected(SystemId::k1e) || selected(SystemId::k1f);
      } else {
        run = selected(c.system);
      }
      if (run) report.spot_checks.push_back(spot_check_analytic(c.name));
    }
  }
  return report;
}

void write_csv(std::ostream& out, const CertificationReport& report) {
  out << "system,conditions,epsilon,bound,paper_bound,status\n";
  std::vector<std::pair<CaseSpec, const CertifiedBound*>> rows;
  for (const auto& c : report.analytic) rows.emplace_back(c, nullptr);
  for (const auto& b : report.computed) rows.emplace_back(b.spec, &b);
  std::stable_sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) {
    if (x.first.system != y.first.system) return x.first.system < y.first.system;
    return x.first.row < y.first.row;
  });
  for (const auto& [c, b] : rows) {
    std::string conds = c.label();
    std::replace(conds.begin(), conds.end(), ',', ';');
    conds.erase(std::remove(conds.begin(), conds.end(), ' '), conds.end());
    out << system_name(c.system) << ',' << conds << ',';
    if (b == nullptr) {
      out << ",,2*,analytic\n";
      continue;
    }
    out << format_eps(b->epsilon) << ',' << format_bound(b->bound) << ',';
    if (c.table_bound) out << std::fixed << std::setprecision(3) << *c.table_bound << std::defaultfloat;
    out << ',' << (b->certified ? "certified" : "failed") << '\n';
  }
}

void write_text(std::ostream& out, const CertificationReport& report) {
  std::map<SystemId, std::vector<std::pair<CaseSpec, const CertifiedBound*>>> by_system;
  for (const auto& c : report.analytic) by_system[c.system].emplace_back(c, nullptr);
  for (const auto& b : report.computed) by_system[b.spec.system].emplace_back(b.spec, &b);

  for (auto& [id, rows] : by_system) {
    std::sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) { return x.first.row < y.first.row; });
    const SystemSpec& spec = builtin_system(id);
    const bool literal = alternate_reading(id).has_value();
    out << "System" << system_name(id) << '\n';
    for (const auto& cond : spec.boundary) out << std::setw(10) << cond.label;
    out << std::setw(8) << "eps" << std::setw(12) << "bound" << std::setw(11) << "table";
    if (literal) out << std::setw(12) << "alt";
    out << "  status\n";
    for (const auto& [c, b] : rows) {
      for (std::size_t k = 0; k < spec.boundary.size(); ++k) {
        const bool on = std::find(c.active.begin(), c.active.end(), k) != c.active.end();
        out << std::setw(10) << (on ? "x" : "");
      }
      if (b == nullptr) {
        out << std::setw(8) << "" << std::setw(12) << "2*" << std::setw(11) << "2*";
        if (literal) out << std::setw(12) << "";
        out << "  analytic\n";
        continue;
      }
      std::ostringstream table;
      if (c.table_bound) {
        table << std::fixed << std::setprecision(3) << *c.table_bound;
        if (c.status == CaseStatus::kEither) table.str("2*|" + table.str());
      }
      out << std::setw(8) << format_eps(b->epsilon) << std::setw(12) << format_bound(b->bound) << std::setw(11)
          << table.str();
      if (literal) out << std::setw(12) << (b->alternate_bound ? format_bound(*b->alternate_bound) : "");
      out << "  " << (b->certified ? "certified" : "FAILED");
      if (c.same_as_1e) out << " (= 1e)";
      out << '\n';
    }
    out << '\n';
  }
  for (const auto& [id, rows] : by_system) {
    const auto note = alternate_reading_note(id);
    if (!note.empty()) out << "System" << system_name(id) << ' ' << note << '\n';
  }
  out << "status uses the systems as tabulated; the alt column is informational.\n\n";

  if (!report.spot_checks.empty()) {
    out << "Closed-form cases (numeric spot checks, grid step " << kSpotCheckStep << ")\n";
    for (const auto& s : report.spot_checks) {
      out << "  " << std::left << std::setw(34) << s.name << std::right << " margin " << std::setw(14)
          << std::setprecision(9) << s.margin << std::defaultfloat << std::setprecision(6) << " at (";
      for (std::size_t i = 0; i < s.worst_point.size(); ++i) {
        if (i) out << ", ";
        out << s.coords[i] << '=' << s.worst_point[i];
      }
      out << ")  " << (s.passed ? "ok" : "FAILED") << '\n';
    }
    out << '\n';
  }
  out << "overall: " << (report.all_certified() && report.all_spot_checks_pass() ? "CERTIFIED" : "FAILED") << '\n';
}

}  // namespace judicious::verify
