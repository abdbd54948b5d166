#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "judicious/lemma_solve.hpp"
#include "judicious/lemma_verify.hpp"

using namespace judicious;
using namespace judicious::verify;

namespace {

const CaseSpec& case_by_label(const std::vector<CaseSpec>& cases, std::string_view label) {
  for (const auto& c : cases) {
    if (c.label() == label) return c;
  }
  FAIL("no case " << label);
  throw std::logic_error("unreachable");
}

Rational coeff(const SystemSpec& s, const LinearForm& f, std::string_view var) { return f[s.var_index(var)]; }

// A point of one of the 1a..1d systems written back as a normalized
// instance, using the substitutions each system was derived under.
LemmaInstance to_instance(SystemId id, const SystemSpec& s, const std::vector<Rational>& v) {
  auto at = [&](std::string_view name) { return v[s.var_index(name)]; };
  LemmaInstance in;
  in.a = {at("a1"), at("a2"), at("a3")};
  const Rational half(1, 2);
  switch (id) {
    case SystemId::k1a: {
      const Rational x = at("x23");
      in.x = {4 * x, x, x};
      in.b = {at("b23"), at("b13"), 8 * x};
      break;
    }
    case SystemId::k1b: {
      const Rational x1 = at("x1"), x = at("x23");
      in.x = {x1, x, x};
      in.b = {x1 * half, at("b13"), 2 * x1};
      break;
    }
    case SystemId::k1c: {
      const Rational x1 = at("x1");
      in.x = {x1, at("x2"), at("x3")};
      in.b = {x1 * half, 2 * x1, 2 * x1};
      break;
    }
    case SystemId::k1d: {
      const Rational x2 = at("x2");
      in.x = {4 * x2, x2, at("x3")};
      in.b = {2 * x2, 8 * x2, at("b12")};
      break;
    }
    default: FAIL("no instance map");
  }
  return in;
}

double caps_sum(const LemmaInstance& in) {
  double s = 0;
  for (std::size_t i = 0; i < 3; ++i) s += qtilde(in.linear(i).to_double(), in.quadratic(i).to_double(), 0);
  return s;
}

struct Sampled {
  int points = 0;
  int violating = 0;
  double min_sum = 1e9;
  bool min_violates = false;
};

// Exact grid points k/1000 of the case's free box that the reduction admits.
Sampled sample_case(const SystemSpec& s, const CaseSpec& c, std::mt19937_64& rng, int want) {
  Sampled out;
  const auto rc = reduce(s, c.active);
  for (int t = 0; t < 200 * want && out.points < want; ++t) {
    std::vector<Rational> p;
    for (std::size_t f = 0; f < rc.dims(); ++f) {
      const auto hi = rc.upper[f] * Rational(1000);
      p.push_back(Rational(std::uniform_int_distribution<std::int64_t>(0, hi.num() / hi.den())(rng), 1000));
    }
    if (!rc.admissible(std::span<const Rational>(p))) continue;
    std::vector<Rational> v;
    for (const auto& g : rc.vars) v.push_back(g.eval(std::span<const Rational>(p)));
    const auto in = to_instance(s.id, s, v);
    REQUIRE(in.sum() == Rational(1));
    ++out.points;
    const bool ok = in.satisfies_constraints();
    if (!ok) ++out.violating;
    const double sum = caps_sum(in);
    if (sum < out.min_sum) {
      out.min_sum = sum;
      out.min_violates = !ok;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("builtin systems carry their derived coefficients") {
  const auto& a = builtin_system(SystemId::k1a);
  CHECK(coeff(a, a.sum_coeffs, "x23") == Rational(14));
  CHECK(coeff(a, a.linear[2], "x23") == Rational(13));
  const auto& c = builtin_system(SystemId::k1c);
  CHECK(coeff(c, c.sum_coeffs, "x1") == Rational(11, 2));
  const auto& d = builtin_system(SystemId::k1d);
  CHECK(coeff(d, d.sum_coeffs, "x2") == Rational(15));
  const auto& f = builtin_system(SystemId::k1f);
  CHECK(coeff(f, f.sum_coeffs, "A") == Rational(7, 12));
  CHECK(coeff(f, f.sum_coeffs, "B") == Rational(2, 3));
  // B <= 13/4 A
  REQUIRE(f.domain.size() == 3);
  CHECK(coeff(f, f.domain[2], "A") == Rational(13, 4));
  CHECK(coeff(f, f.domain[2], "B") == Rational(-1));
  CHECK(builtin_system(SystemId::k1fPrime).domain.size() == 2);
  CHECK(parse_system_name("1f'") == SystemId::k1fPrime);
  CHECK(!parse_system_name("1g"));
}

TEST_CASE("case enumeration follows the tables") {
  const auto a = enumerate_cases(builtin_system(SystemId::k1a));
  REQUIRE(a.size() == 20);
  CHECK(a[0].status == CaseStatus::kAnalytic);
  CHECK(a[0].label() == "x23=0, b13=8x23, b23=2x23");
  CHECK(a[19].status == CaseStatus::kEither);
  CHECK(a[19].label() == "a1=0, a2=0, a3=0");
  CHECK(*a[19].table_bound == 2.046);
  CHECK(std::count_if(a.begin(), a.end(), [](const CaseSpec& c) { return c.computed(); }) == 19);

  const auto c = enumerate_cases(builtin_system(SystemId::k1c));
  const auto& r = case_by_label(c, "x2=x3, x2=x1, a1=0");
  CHECK(r.row == 11);
  CHECK(*r.epsilon == Rational(1, 1000));
  CHECK(*r.table_bound == 2.005);

  const auto e = enumerate_cases(builtin_system(SystemId::k1e));
  CHECK(std::count_if(e.begin(), e.end(), [](const CaseSpec& c) { return c.computed(); }) == 9);
  const auto f = enumerate_cases(builtin_system(SystemId::k1f));
  CHECK(std::count_if(f.begin(), f.end(), [](const CaseSpec& c) { return c.same_as_1e; }) == 3);
}

TEST_CASE("a 1a row certifies and its bound sits below sampled values") {
  const auto& s = builtin_system(SystemId::k1a);
  const auto cases = enumerate_cases(s);
  const auto& c = case_by_label(cases, "x23=0, b13=8x23, a1=0");
  const auto cb = certify_case(c, Rational(1, 500));
  CHECK(cb.certified);
  CHECK(cb.bound > 2.0);
  CHECK(cb.bound <= 2.158);

  // oracle: dense sampling of the slice through the reduced coordinates
  const auto rc = reduce_case(s, c);
  double best = 1e9;
  std::mt19937_64 rng(2);
  for (int t = 0; t < 100000; ++t) {
    std::vector<double> p(rc.dims());
    for (std::size_t f = 0; f < rc.dims(); ++f) p[f] = std::uniform_real_distribution<double>(0, rc.upper[f].to_double())(rng);
    if (!rc.admissible(std::span<const double>(p))) continue;
    double sum = 0;
    for (std::size_t i = 0; i < 3; ++i) sum += qtilde(std::max(0.0, rc.linear[i].eval(p)), std::max(0.0, rc.quadratic[i].eval(p)), 0);
    best = std::min(best, sum);
  }
  CHECK(cb.bound <= best);
  CHECK(best - cb.bound < 0.05);
}

TEST_CASE("coarse boxes lose certification") {
  const auto& s = builtin_system(SystemId::k1a);
  const auto cases = enumerate_cases(s);
  const auto& c = case_by_label(cases, "b13=8x23, b23=2x23, a1=0");
  CHECK(!certify_case(c, Rational(1, 50)).certified);
  CHECK(certify_case(c, *c.epsilon).certified);
}

TEST_CASE("computed 1a, 1b, 1d cases map to admissible instances with sum q~ > 2") {
  std::mt19937_64 rng(7);
  for (auto id : {SystemId::k1a, SystemId::k1b, SystemId::k1d}) {
    const auto& s = builtin_system(id);
    for (const auto& c : enumerate_cases(s)) {
      if (!c.computed()) continue;
      const auto r = sample_case(s, c, rng, 300);
      INFO(system_name(id), " ", c.label());
      CHECK(r.points > 0);
      CHECK(r.violating == 0);
      CHECK(r.min_sum > 2.0);
    }
  }
}

TEST_CASE("1c as printed admits points outside the instance constraints") {
  std::mt19937_64 rng(9);
  const auto& s = builtin_system(SystemId::k1c);
  const auto alt = *alternate_reading(SystemId::k1c);
  int below_two = 0;
  for (const auto& c : enumerate_cases(s)) {
    if (!c.computed()) continue;
    const auto printed = sample_case(s, c, rng, 300);
    if (printed.min_sum < 2.0) {
      ++below_two;
      CHECK(printed.min_violates);
    }
    const auto fixed = sample_case(alt, c, rng, 300);
    INFO(c.label());
    CHECK(fixed.violating == 0);
    CHECK(fixed.min_sum > 2.0);
  }
  CHECK(below_two > 0);
}

TEST_CASE("1c with x1 >= 4 x2 certifies every computed row") {
  const auto alt = *alternate_reading(SystemId::k1c);
  for (const auto& c : enumerate_cases(builtin_system(SystemId::k1c))) {
    if (!c.computed()) continue;
    double best = -1;
    for (const auto& rc : reduce_all(alt, c.active)) {
      if (build_grid(rc, *c.epsilon).total_cells() > kMaxCells) continue;
      best = std::max(best, certify_case(rc, *c.epsilon, 0).bound);
    }
    INFO(c.label());
    CHECK(best > 2.0);
  }
}

TEST_CASE("every spot check holds") {
  const auto names = analytic_case_names();
  CHECK(names.size() == 21);
  for (const auto& n : names) {
    const auto sc = spot_check_analytic(n);
    INFO(n, " margin ", sc.margin);
    CHECK(sc.passed);
    CHECK(sc.margin >= -kSpotCheckTolerance);
    CHECK(sc.points > 0);
  }
  const auto s2 = spot_check_analytic("system2");
  CHECK(std::abs(s2.margin - 7.0 / 81.0) < 1e-12);
  REQUIRE(s2.worst_point.size() >= 1);
}

TEST_CASE("anchors are exact") {
  CHECK(lagrange_anchor_value() == Rational(23, 9));
  CHECK(residual_anchor_value() == Rational(256, 2187));
  CHECK(system2_chain_minimum() == Rational(88, 81));
}

TEST_CASE("1f' square-root sum") {
  const double t = 4.0 / 9.0;
  CHECK(std::abs(sqrt_sum_margin({t, t, t, 0, 0, 0})) < 1e-12);
  // S <= 8/3 throughout 1f', with equality along A=B=C, a1=a2=a3
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0, 1);
  double worst = 1;
  for (int i = 0; i < 100000; ++i) {
    std::array<double, 3> abc{u(rng), u(rng), u(rng)};
    std::sort(abc.begin(), abc.end());
    const double scale = std::array{0.0, 0.05, 1.0}[i % 3];
    std::array<double, 6> v{abc[0], abc[1], abc[2], scale * u(rng), scale * u(rng), scale * u(rng)};
    const double sum = 7.0 / 12.0 * v[0] + 2.0 / 3.0 * v[1] + v[2] + v[3] + v[4] + v[5];
    for (auto& x : v) x /= sum;
    worst = std::min(worst, sqrt_sum_margin(v));
  }
  CHECK(worst >= -1e-12);
  // t = 4/27 on that curve: 9/4 t + 3 s = 1 with s = 2/9
  const double c = 4.0 / 27.0, s = 2.0 / 9.0;
  CHECK(std::abs(sqrt_sum_margin({c, c, c, s, s, s})) < 1e-12);
}

TEST_CASE("report for one system") {
  ReportOptions opt;
  opt.systems = {SystemId::k1a};
  const auto rep = full_report(opt);
  CHECK(rep.computed.size() == 19);
  CHECK(rep.analytic.size() == 1);
  CHECK(rep.all_certified());
  CHECK(rep.all_spot_checks_pass());
  for (const auto& sc : rep.spot_checks) CHECK(sc.name.ends_with("/1a"));

  std::ostringstream csv;
  write_csv(csv, rep);
  std::istringstream lines(csv.str());
  std::string line;
  std::getline(lines, line);
  CHECK(line == "system,conditions,epsilon,bound,paper_bound,status");
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    CHECK(line.starts_with("1a,"));
  }
  CHECK(rows == 20);

  std::ostringstream text;
  write_text(text, rep);
  CHECK(text.str().find("overall: CERTIFIED") != std::string::npos);

  opt.jobs = 3;
  const auto par = full_report(opt);
  REQUIRE(par.computed.size() == rep.computed.size());
  for (std::size_t i = 0; i < rep.computed.size(); ++i) CHECK(par.computed[i].bound == rep.computed[i].bound);
  std::ostringstream csv2;
  write_csv(csv2, par);
  CHECK(csv2.str() == csv.str());
}

TEST_CASE("report with a coarse epsilon names the failing cases") {
  ReportOptions opt;
  opt.systems = {SystemId::k1a};
  opt.epsilon = Rational(1, 10);
  opt.spot_checks = false;
  const auto rep = full_report(opt);
  CHECK(!rep.all_certified());
  const auto bad = rep.failures();
  REQUIRE(!bad.empty());
  CHECK(bad.front()->spec.label() == "x23=0, b13=8x23, a1=0");
  std::ostringstream text;
  write_text(text, rep);
  CHECK(text.str().find("overall: FAILED") != std::string::npos);
}
