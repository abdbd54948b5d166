#include "judicious/systems.hpp"

#include <stdexcept>
#include <utility>

namespace judicious::verify {

namespace {

using Term = std::pair<std::string_view, Rational>;

class Builder {
 public:
  Builder(SystemId id, std::vector<std::string> vars) {
    spec_.id = id;
    spec_.vars = std::move(vars);
  }

  LinearForm form(std::initializer_list<Term> terms) const {
    LinearForm f(spec_.vars.size(), Rational(0));
    for (const auto& [name, coeff] : terms) f[spec_.var_index(name)] += coeff;
    return f;
  }

  Builder& sum(std::initializer_list<Term> terms) {
    spec_.sum_coeffs = form(terms);
    return *this;
  }
  Builder& domain(std::initializer_list<Term> terms) {
    spec_.domain.push_back(form(terms));
    return *this;
  }
  Builder& linear(std::size_t i, std::initializer_list<Term> terms) {
    spec_.linear[i] = form(terms);
    return *this;
  }
  Builder& canonical_quadratic() {
    spec_.quadratic[0] = form({{"a2", 1}, {"a3", 1}});
    spec_.quadratic[1] = form({{"a1", 1}, {"a3", 1}});
    spec_.quadratic[2] = form({{"a1", 1}, {"a2", 1}});
    return *this;
  }
  Builder& condition(std::string label, std::string_view pivot, std::initializer_list<Term> terms) {
    spec_.boundary.push_back({std::move(label), form(terms), spec_.var_index(pivot)});
    return *this;
  }
  Builder& a_conditions() {
    condition("a1=0", "a1", {{"a1", 1}});
    condition("a2=0", "a2", {{"a2", 1}});
    condition("a3=0", "a3", {{"a3", 1}});
    return *this;
  }

  SystemSpec build() { return std::move(spec_); }

 private:
  SystemSpec spec_;
};

const Rational kHalf(1, 2);

SystemSpec make_1a() {
  Builder s(SystemId::k1a, {"x23", "b23", "b13", "a1", "a2", "a3"});
  s.sum({{"x23", 14}, {"b23", 1}, {"b13", 1}, {"a1", 1}, {"a2", 1}, {"a3", 1}})
      .domain({{"b13", 1}, {"x23", -8}})
      .domain({{"b23", 1}, {"x23", -2}})
      .linear(0, {{"b23", 1}, {"x23", 2}})
      .linear(1, {{"b13", 1}, {"x23", 5}})
      .linear(2, {{"x23", 13}})
      .canonical_quadratic()
      .condition("x23=0", "x23", {{"x23", 1}})
      .condition("b13=8x23", "b13", {{"b13", 1}, {"x23", -8}})
      .condition("b23=2x23", "b23", {{"b23", 1}, {"x23", -2}})
      .a_conditions();
  return s.build();
}

SystemSpec make_1b() {
  Builder s(SystemId::k1b, {"x1", "x23", "b13", "a1", "a2", "a3"});
  s.sum({{"x1", Rational(7, 2)}, {"x23", 2}, {"b13", 1}, {"a1", 1}, {"a2", 1}, {"a3", 1}})
      .domain({{"b13", 1}, {"x1", -2}})
      .domain({{"x1", 2}, {"x23", -8}})
      .linear(0, {{"x1", kHalf}, {"x23", 2}})
      .linear(1, {{"b13", 1}, {"x1", 1}, {"x23", 1}})
      .linear(2, {{"x1", 3}, {"x23", 1}})
      .canonical_quadratic()
      .condition("x23=0", "x23", {{"x23", 1}})
      .condition("b13=2x1", "b13", {{"b13", 1}, {"x1", -2}})
      .condition("x1=4x23", "x1", {{"x1", 1}, {"x23", -4}})
      .a_conditions();
  return s.build();
}

SystemSpec make_1c() {
  Builder s(SystemId::k1c, {"x1", "x2", "x3", "a1", "a2", "a3"});
  s.sum({{"x1", Rational(11, 2)}, {"x2", 1}, {"x3", 1}, {"a1", 1}, {"a2", 1}, {"a3", 1}})
      .domain({{"x1", 1}, {"x2", -1}})
      .domain({{"x2", 1}, {"x3", -1}})
      .linear(0, {{"x1", kHalf}, {"x2", 1}, {"x3", 1}})
      .linear(1, {{"x1", 3}, {"x3", 1}})
      .linear(2, {{"x1", 3}, {"x2", 1}})
      .canonical_quadratic()
      .condition("x3=0", "x3", {{"x3", 1}})
      .condition("x2=x3", "x2", {{"x2", 1}, {"x3", -1}})
      .condition("x2=x1", "x2", {{"x2", 1}, {"x1", -1}})
      .a_conditions();
  return s.build();
}

SystemSpec make_1d() {
  Builder s(SystemId::k1d, {"x2", "x3", "b12", "a1", "a2", "a3"});
  s.sum({{"x2", 15}, {"x3", 1}, {"b12", 1}, {"a1", 1}, {"a2", 1}, {"a3", 1}})
      .domain({{"b12", 1}, {"x2", -8}})
      .domain({{"x2", 1}, {"x3", -1}})
      .linear(0, {{"x2", 3}, {"x3", 1}})
      .linear(1, {{"x2", 12}, {"x3", 1}})
      .linear(2, {{"b12", 1}, {"x2", 5}})
      .canonical_quadratic()
      .condition("b12=8x2", "b12", {{"b12", 1}, {"x2", -8}})
      .condition("x2=x3", "x2", {{"x2", 1}, {"x3", -1}})
      .condition("x3=0", "x3", {{"x3", 1}})
      .a_conditions();
  return s.build();
}

Builder abc_system(SystemId id) {
  Builder s(id, {"A", "B", "C", "a1", "a2", "a3"});
  s.domain({{"C", 1}, {"B", -1}})
      .domain({{"B", 1}, {"A", -1}})
      .canonical_quadratic()
      .condition("A=0", "A", {{"A", 1}})
      .condition("B=A", "B", {{"B", 1}, {"A", -1}})
      .condition("C=B", "C", {{"C", 1}, {"B", -1}})
      .a_conditions();
  return s;
}

SystemSpec make_1e() {
  Builder s = abc_system(SystemId::k1e);
  s.sum({{"A", Rational(1, 4)}, {"B", 1}, {"C", 1}, {"a1", 1}, {"a2", 1}, {"a3", 1}})
      .linear(0, {{"B", 1}})
      .linear(1, {{"A", 1}})
      .linear(2, {{"C", 1}});
  return s.build();
}

SystemSpec make_1f(bool with_ratio_cap) {
  Builder s = abc_system(with_ratio_cap ? SystemId::k1f : SystemId::k1fPrime);
  s.sum({{"A", Rational(7, 12)}, {"B", Rational(2, 3)}, {"C", 1}, {"a1", 1}, {"a2", 1}, {"a3", 1}})
      .linear(0, {{"A", 1}})
      .linear(1, {{"B", 1}})
      .linear(2, {{"C", 1}});
  if (with_ratio_cap) s.domain({{"A", Rational(13, 4)}, {"B", -1}});
  return s.build();
}

SystemSpec make_2() {
  // q1 = 1 is fixed, so part 1 carries no form
  Builder s(SystemId::k2, {"x1", "b12", "b13"});
  s.sum({{"b12", 1}, {"b13", 1}, {"x1", Rational(3, 2)}})
      .domain({{"b12", 1}, {"x1", -2}})
      .domain({{"b13", 1}, {"x1", -2}})
      .linear(0, {})
      .linear(1, {{"b13", 1}, {"x1", 1}})
      .linear(2, {{"b12", 1}, {"x1", 1}});
  SystemSpec spec = s.build();
  for (auto& q : spec.quadratic) q.assign(spec.vars.size(), Rational(0));
  return spec;
}

}  // namespace

std::string_view system_name(SystemId id) {
  switch (id) {
    case SystemId::k1a: return "1a";
    case SystemId::k1b: return "1b";
    case SystemId::k1c: return "1c";
    case SystemId::k1d: return "1d";
    case SystemId::k1e: return "1e";
    case SystemId::k1f: return "1f";
    case SystemId::k1fPrime: return "1f'";
    case SystemId::k2: return "2";
  }
  return "?";
}

std::optional<SystemId> parse_system_name(std::string_view name) {
  for (const auto& s : builtin_systems()) {
    if (system_name(s.id) == name) return s.id;
  }
  return std::nullopt;
}

std::size_t SystemSpec::var_index(std::string_view name) const {
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (vars[i] == name) return i;
  }
  throw std::invalid_argument("system " + std::string(system_name(id)) + " has no variable '" + std::string(name) + "'");
}

const std::vector<SystemSpec>& builtin_systems() {
  static const std::vector<SystemSpec> systems = {make_1a(), make_1b(),      make_1c(),     make_1d(),
                                                  make_1e(), make_1f(true), make_1f(false), make_2()};
  return systems;
}

const SystemSpec& builtin_system(SystemId id) {
  for (const auto& s : builtin_systems()) {
    if (s.id == id) return s;
  }
  throw std::invalid_argument("unknown system");
}

std::optional<SystemSpec> alternate_reading(SystemId id) {
  if (id == SystemId::k1b) {
    SystemSpec s = builtin_system(id);
    // q3 (3x1 + x23) + q3 (a1 + a2)
    s.linear[2][s.var_index("a1")] += 1;
    s.linear[2][s.var_index("a2")] += 1;
    s.quadratic[2].assign(s.vars.size(), Rational(0));
    return s;
  }
  if (id == SystemId::k1c) {
    SystemSpec s = builtin_system(id);
    LinearForm g(s.vars.size(), Rational(0));
    g[s.var_index("x1")] = 1;
    g[s.var_index("x2")] = -4;
    s.domain.push_back(std::move(g));
    return s;
  }
  if (id == SystemId::k1d) {
    SystemSpec s = builtin_system(id);
    s.quadratic[2] = s.quadratic[1];  // a1 + a3
    return s;
  }
  return std::nullopt;
}

std::string_view alternate_reading_note(SystemId id) {
  switch (id) {
    case SystemId::k1b:
      return "alt: third miss term q3 (3x1 + x23) + q3 (a1 + a2), linear in q3 as printed";
    case SystemId::k1c:
      return "alt: domain also x1 >= 4x2 (from b23 = x1/2 and b23 >= 2x2)";
    case SystemId::k1d:
      return "alt: third quadratic coefficient a1 + a3 as printed";
    default:
      return "";
  }
}

}  // namespace judicious::verify
