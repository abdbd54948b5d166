#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "judicious/rational.hpp"
#include "judicious/systems.hpp"

namespace judicious::verify {

enum class CaseStatus {
  kComputed,  // certified by box subdivision
  kAnalytic,  // settled by a closed-form argument, spot-checked only
  kEither,    // closed-form argument exists, and we also certify it
};

std::string_view status_name(CaseStatus s);

// Three of a system's six boundary conditions held at equality, plus the
// tabulated reference data for that row.
struct CaseSpec {
  SystemId system{};
  std::array<std::size_t, 3> active{};  // ascending indices into SystemSpec::boundary
  CaseStatus status = CaseStatus::kComputed;
  std::size_t row = 0;                  // 1-based row of the system's table
  std::optional<Rational> epsilon;      // table box side, when computed
  std::optional<double> table_bound;    // tabulated lower bound, when computed
  bool same_as_1e = false;              // 1f row with B=A, identical to the 1e row

  bool computed() const { return status != CaseStatus::kAnalytic; }
  std::string label() const;            // e.g. "x23=0, b13=8x23, a1=0"
};

// All C(6,3) = 20 cases of 1a..1f in table order (lexicographic subsets).
std::vector<CaseSpec> enumerate_cases(const SystemSpec& spec);

}  // namespace judicious::verify
