#include "judicious/cases.hpp"

#include <stdexcept>

namespace judicious::verify {

namespace {

// Case tables, rows in lexicographic order of the active condition
// triple. eps is in thousandths (0 = no computation); bound 0 marks a row
// proved in closed form only.
struct TableRow {
  int eps;
  double bound;
};
using Table = std::array<TableRow, 20>;

constexpr Table kTable1a{{{0, 0},        {2, 2.078}, {2, 2.077}, {2, 2.077}, {2, 2.077}, {2, 2.078}, {2, 2.077},
                          {2, 2.085},    {2, 2.086}, {2, 2.086}, {1, 2.005}, {2, 2.033}, {2, 2.033}, {2, 2.057},
                          {2, 2.057},    {2, 2.043}, {2, 2.045}, {2, 2.044}, {2, 2.041}, {2, 2.046}}};
constexpr Table kTable1b{{{0, 0},        {2, 2.042}, {2, 2.069}, {2, 2.069}, {2, 2.077}, {2, 2.078}, {2, 2.077},
                          {2, 2.072},    {2, 2.072}, {2, 2.070}, {1, 2.005}, {2, 2.033}, {2, 2.033}, {2, 2.026},
                          {2, 2.026},    {2, 2.024}, {2, 2.045}, {2, 2.044}, {2, 2.041}, {2, 2.025}}};
constexpr Table kTable1c{{{0, 0},        {2, 2.042}, {2, 2.069}, {2, 2.069}, {1, 2.019}, {2, 2.036}, {2, 2.037},
                          {2, 2.027},    {2, 2.028}, {2, 2.026}, {1, 2.005}, {2, 2.033}, {2, 2.033}, {2, 2.026},
                          {2, 2.026},    {2, 2.024}, {1, 2.042}, {1, 2.042}, {1, 2.042}, {1, 2.033}}};
constexpr Table kTable1d{{{0, 0},        {2, 2.077}, {2, 2.077}, {2, 2.078}, {1, 2.019}, {2, 2.036}, {2, 2.037},
                          {2, 2.047},    {2, 2.047}, {2, 2.041}, {1, 2.005}, {2, 2.033}, {2, 2.033}, {2, 2.044},
                          {2, 2.045},    {2, 2.041}, {1, 2.042}, {1, 2.042}, {1, 2.042}, {1, 2.042}}};
// 1e and 1f share their table; only rows with A=0 are computed.
constexpr Table kTable1ef{{{0, 0}, {2, 2.077}, {2, 2.077}, {2, 2.078}, {2, 2.075}, {2, 2.076}, {2, 2.076},
                           {2, 2.086}, {2, 2.085}, {2, 2.084}, {0, 0}, {0, 0}, {0, 0}, {0, 0},
                           {0, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}}};

const Table& table_for(SystemId id) {
  switch (id) {
    case SystemId::k1a: return kTable1a;
    case SystemId::k1b: return kTable1b;
    case SystemId::k1c: return kTable1c;
    case SystemId::k1d: return kTable1d;
    case SystemId::k1e:
    case SystemId::k1f: return kTable1ef;
    default: throw std::invalid_argument("no case table for system " + std::string(system_name(id)));
  }
}

}  // namespace

std::string_view status_name(CaseStatus s) {
  switch (s) {
    case CaseStatus::kComputed: return "computed";
    case CaseStatus::kAnalytic: return "analytic";
    case CaseStatus::kEither: return "either";
  }
  return "?";
}

std::string CaseSpec::label() const {
  const auto& spec = builtin_system(system);
  std::string out;
  for (std::size_t i = 0; i < active.size(); ++i) {
    if (i) out += ", ";
    out += spec.boundary[active[i]].label;
  }
  return out;
}

std::vector<CaseSpec> enumerate_cases(const SystemSpec& spec) {
  const Table& table = table_for(spec.id);
  if (spec.boundary.size() != 6) throw std::invalid_argument("system must have six boundary conditions");
  const bool abc = spec.id == SystemId::k1e || spec.id == SystemId::k1f;

  std::vector<CaseSpec> out;
  std::size_t row = 0;
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = i + 1; j < 6; ++j) {
      for (std::size_t k = j + 1; k < 6; ++k) {
        const TableRow& t = table[row];
        CaseSpec c;
        c.system = spec.id;
        c.active = {i, j, k};
        c.row = ++row;
        if (t.eps == 0) {
          c.status = CaseStatus::kAnalytic;
        } else {
          c.status = (!abc && row == 20) ? CaseStatus::kEither : CaseStatus::kComputed;
          c.epsilon = Rational(t.eps, 1000);
          c.table_bound = t.bound;
        }
        // conditions 0 and 1 are A=0 and B=A
        c.same_as_1e = spec.id == SystemId::k1f && i == 0 && j == 1 && c.computed();
        out.push_back(c);
      }
    }
  }
  return out;
}

}  // namespace judicious::verify
