#include "judicious/certify_kernel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace judicious::verify {

namespace {

constexpr std::int64_t kExactDoubleLimit = std::int64_t{1} << 53;

double up(double x) { return std::nextafter(x, std::numeric_limits<double>::infinity()); }
double down(double x) { return std::nextafter(x, -std::numeric_limits<double>::infinity()); }

// 32/27 rounded up and 16/27 rounded down.
const double kRadicandCoeffHi = up(32.0 / 27.0);
const double kNumeratorLo = down(16.0 / 27.0);

std::int64_t lcm_checked(std::int64_t a, std::int64_t b) {
  const std::int64_t g = std::gcd(a, b);
  const __int128 l = static_cast<__int128>(a / g) * b;
  if (l > kExactDoubleLimit) throw OverflowError("grid denominator too large");
  return static_cast<std::int64_t>(l);
}

GridForm to_grid(const AffineForm& form, const Rational& epsilon, const std::array<std::int64_t, kMaxDims>& cells) {
  std::vector<Rational> scaled;
  for (const auto& c : form.coeff) scaled.push_back(c * epsilon);
  std::int64_t den = form.constant.den();
  for (const auto& s : scaled) den = lcm_checked(den, s.den());

  GridForm g;
  g.den = den;
  g.constant = (form.constant * Rational(den)).num();
  __int128 bound = g.constant < 0 ? -static_cast<__int128>(g.constant) : g.constant;
  for (std::size_t f = 0; f < scaled.size(); ++f) {
    g.step[f] = (scaled[f] * Rational(den)).num();
    bound += (g.step[f] < 0 ? -static_cast<__int128>(g.step[f]) : g.step[f]) * (cells[f] + 1);
  }
  // numerators must stay exactly representable as doubles
  if (bound >= kExactDoubleLimit) throw OverflowError("grid form out of exact range");
  return g;
}

double upper_value(const GridForm& g, const std::array<std::int64_t, kMaxDims>& cell) {
  const std::int64_t n = g.max_numerator(cell);
  if (n <= 0) return 0.0;
  return up(static_cast<double>(n) / static_cast<double>(g.den));
}

}  // namespace

std::array<std::int64_t, kMaxDims> CertGrid::cell_at(std::uint64_t index) const {
  std::array<std::int64_t, kMaxDims> cell{};
  for (std::size_t f = kMaxDims; f-- > 0;) {
    const auto c = static_cast<std::uint64_t>(cells[f]);
    cell[f] = static_cast<std::int64_t>(index % c);
    index /= c;
  }
  return cell;
}

CertGrid build_grid(const ReducedCase& rc, const Rational& epsilon) {
  if (epsilon.sign() <= 0) throw std::invalid_argument("epsilon must be positive");
  if (rc.dims() > kMaxDims) throw std::invalid_argument("too many free dimensions");
  CertGrid grid;
  grid.dims = rc.dims();
  grid.epsilon = epsilon;
  grid.empty = rc.empty;
  if (rc.empty) return grid;

  for (std::size_t f = 0; f < rc.dims(); ++f) {
    const Rational r = rc.upper[f] / epsilon;
    std::int64_t n = r.num() / r.den();
    if (n * r.den() < r.num()) ++n;
    grid.cells[f] = std::max<std::int64_t>(n, 1);
  }
  for (const auto& g : rc.domain) grid.constraints.push_back(to_grid(g, epsilon, grid.cells));
  for (std::size_t i = 0; i < 3; ++i) {
    grid.linear[i] = to_grid(rc.linear[i], epsilon, grid.cells);
    grid.quadratic[i] = to_grid(rc.quadratic[i], epsilon, grid.cells);
  }
  return grid;
}

double qtilde_lower(double linear_hi, double quadratic_hi) {
  if (linear_hi <= 0 && quadratic_hi <= 0) return 1.0;
  // root of q B + q^2 A = 8/27 is (16/27) / (B + sqrt(B^2 + (32/27) A))
  const double radicand = up(up(linear_hi * linear_hi) + up(kRadicandCoeffHi * quadratic_hi));
  const double denom = up(linear_hi + up(std::sqrt(radicand)));
  return std::min(1.0, down(kNumeratorLo / denom));
}

std::optional<double> cell_lower_bound(const CertGrid& grid, const std::array<std::int64_t, kMaxDims>& cell) {
  for (const auto& g : grid.constraints) {
    if (g.max_numerator(cell) < 0) return std::nullopt;
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < 3; ++i) {
    const double q = qtilde_lower(upper_value(grid.linear[i], cell), upper_value(grid.quadratic[i], cell));
    sum = i == 0 ? q : down(sum + q);
  }
  return sum;
}

}  // namespace judicious::verify
