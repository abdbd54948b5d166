#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "judicious/rational.hpp"

namespace judicious::verify {

enum class SystemId { k1a, k1b, k1c, k1d, k1e, k1f, k1fPrime, k2 };

std::string_view system_name(SystemId id);
std::optional<SystemId> parse_system_name(std::string_view name);

// Homogeneous linear form over a system's variables.
using LinearForm = std::vector<Rational>;

// `form` == 0. `pivot` is the variable substituted away when this condition
// becomes active and still mentions it.
struct BoundaryCondition {
  std::string label;
  LinearForm form;
  std::size_t pivot = 0;
};

// One of the fixed six-variable systems (c already eliminated). A point is
// admissible when every variable is >= 0, sum_coeffs . v == 1, and every
// domain form is >= 0. For part i the miss polynomial is
// q B_i(v) + q^2 A_i(v).
struct SystemSpec {
  SystemId id{};
  std::vector<std::string> vars;
  LinearForm sum_coeffs;
  std::vector<LinearForm> domain;
  std::array<LinearForm, 3> linear;
  std::array<LinearForm, 3> quadratic;
  std::vector<BoundaryCondition> boundary;

  std::size_t var_index(std::string_view name) const;
};

// 1a, 1b, 1c, 1d, 1e, 1f, 1f', 2 with the canonical quadratic pattern
// A_i = a_j + a_k throughout.
const std::vector<SystemSpec>& builtin_systems();
const SystemSpec& builtin_system(SystemId id);

// Second readings, reported next to the canonical ones. 1b and 1d as
// literally printed: 1b's third miss term is linear in (a1 + a2), 1d's third
// quadratic coefficient is (a1 + a3). 1c with the extra domain constraint
// x1 >= 4 x2, which its derivation carries (b23 = x1/2 and b23 >= 2 x2).
// nullopt for the other systems.
std::optional<SystemSpec> alternate_reading(SystemId id);
std::string_view alternate_reading_note(SystemId id);

}  // namespace judicious::verify
