#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "judicious/cases.hpp"
#include "judicious/certify_kernel.hpp"
#include "judicious/reduce.hpp"
#include "judicious/systems.hpp"

namespace judicious::verify {

struct CertifiedBound {
  CaseSpec spec;
  Rational epsilon;
  double bound = 0;  // min cell bound minus kDeclaredSlack; +inf when nothing is admissible
  std::uint64_t boxes_total = 0;
  std::uint64_t boxes_feasible = 0;
  bool certified = false;  // bound > 2
  std::string eliminated;  // variable solved from the sum constraint in the best tiling
  // Same case under the system's alternate reading, for the report only.
  std::optional<double> alternate_bound;
};

CertifiedBound certify_case(const ReducedCase& reduced, const Rational& epsilon, int jobs = 1);
// Tiles the case once per admissible choice of eliminated variable (skipping
// tilings above kMaxCells) and keeps the best bound.
CertifiedBound certify_case(const CaseSpec& c, const Rational& epsilon, int jobs = 1);

inline constexpr std::uint64_t kMaxCells = std::uint64_t{1} << 22;

// Closed-form cases, checked numerically: the decisive quantity is evaluated
// on a 1e-3 grid of the case's admissible region plus its known critical
// points, and the worst margin is reported (>= 0 means the argument holds
// there).
struct SpotCheck {
  std::string name;
  std::string quantity;
  double margin = 0;
  std::vector<double> worst_point;  // free-variable coordinates
  std::vector<std::string> coords;
  std::uint64_t points = 0;
  bool passed = false;
};

inline constexpr double kSpotCheckTolerance = 1e-9;
inline constexpr double kSpotCheckStep = 1e-3;

// "system2"; "a-zero/<sys>" for 1a..1d; "jensen/<sys>" for 1a..1f;
// "1f'/<three conditions>" for the ten boundary cases of 1f'.
std::vector<std::string> analytic_case_names();
SpotCheck spot_check_analytic(std::string_view name);

// 8/3 minus the square-root sum for a point of 1f' given as
// (A, B, C, a1, a2, a3).
double sqrt_sum_margin(const std::array<double, 6>& v);

// Exact anchor values: the interior critical point of the A=B, a1=a2=0 case
// (evaluates to 23/9) and the residual of the B=C, a1=a3=0 case at
// (A, C) = (16/81, 40/81) (evaluates to 256/2187).
Rational lagrange_anchor_value();
Rational residual_anchor_value();
// The minimum of the System2 chain, (32/27) / (1 + x1/2) at x1 = 2/11.
Rational system2_chain_minimum();

struct ReportOptions {
  std::optional<Rational> epsilon;   // overrides every table value
  std::vector<SystemId> systems;     // empty = 1a..1f
  int jobs = 1;
  bool spot_checks = true;
};

struct CertificationReport {
  std::vector<CaseSpec> analytic;       // rows settled in closed form
  std::vector<CertifiedBound> computed;  // computed and either rows
  std::vector<SpotCheck> spot_checks;

  bool all_certified() const;
  bool all_spot_checks_pass() const;
  std::vector<const CertifiedBound*> failures() const;
};

CertificationReport full_report(const ReportOptions& options);

void write_csv(std::ostream& out, const CertificationReport& report);
void write_text(std::ostream& out, const CertificationReport& report);

}  // namespace judicious::verify
