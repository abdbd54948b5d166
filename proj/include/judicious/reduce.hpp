#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "judicious/cases.hpp"
#include "judicious/rational.hpp"
#include "judicious/systems.hpp"

namespace judicious::verify {

// constant + coeff . free
struct AffineForm {
  Rational constant;
  std::vector<Rational> coeff;

  Rational eval(std::span<const Rational> point) const;
  double eval(std::span<const double> point) const;
  bool operator==(const AffineForm&) const = default;
};

// A case after substituting its active conditions and solving the sum
// constraint for one variable. Free variable f ranges over [0, upper[f]];
// a free point is admissible iff every domain form is >= 0 there.
struct ReducedCase {
  SystemId system{};
  std::vector<std::size_t> active;
  std::vector<std::string> free_names;
  std::vector<Rational> upper;
  std::string eliminated;
  bool empty = false;  // no admissible point at all

  std::vector<AffineForm> vars;  // every system variable in terms of the free ones
  std::array<AffineForm, 3> linear;
  std::array<AffineForm, 3> quadratic;
  std::vector<AffineForm> domain;  // residual constraints, trivially-true ones dropped

  std::size_t dims() const { return free_names.size(); }
  bool admissible(std::span<const Rational> point) const;
  bool admissible(std::span<const double> point, double tol = 0) const;
};

// Applies the active equalities in order, each eliminating its pivot (or the
// first variable it still mentions), then eliminates `eliminate` from the sum
// constraint; by default the last remaining variable with coefficient 1
// (else the last nonzero one). Throws if a free variable is unbounded.
ReducedCase reduce(const SystemSpec& spec, std::span<const std::size_t> active,
                   std::optional<std::size_t> eliminate = std::nullopt);
// One reduction per variable that can be eliminated from the sum constraint.
// All describe the same slice in different coordinates.
std::vector<ReducedCase> reduce_all(const SystemSpec& spec, std::span<const std::size_t> active);
ReducedCase reduce_case(const SystemSpec& spec, const CaseSpec& c);

}  // namespace judicious::verify
