#include "plab/qseries.hpp"

#include "plab/arith.hpp"
#include "plab/error.hpp"

#include <cmath>
#include <string>

namespace plab::qseries {

QPoint QPoint::from_t(const Real& t, unsigned digits) {
  DigitsScope scope(digits);
  if (t <= 0) throw DomainError("t must be positive");
  QPoint pt;
  pt.t = Real(t);
  pt.q = exp(-2 * pi() * pt.t);
  pt.digits = digits;
  return pt;
}

QPoint QPoint::from_t(const std::string& t, unsigned digits) {
  DigitsScope scope(digits);
  return from_t(parse_real(t), digits);
}

Real product_tail_bound(const Real& q, std::size_t trunc) {
  Real one_minus = 1 - q;
  return pow(q, Real(trunc + 1)) / (one_minus * one_minus);
}

std::size_t required_trunc(const Real& q, const Real& target) {
  if (q <= 0 || q >= 1) throw DomainError("q must lie in (0, 1)");
  if (target <= 0) throw DomainError("target must be positive");
  Real one_minus = 1 - q;
  Real estimate = log(target * one_minus * one_minus) / log(q) - 1;
  std::size_t n = estimate > 0 ? static_cast<std::size_t>(estimate.convert_to<double>()) : 0;
  while (n > 0 && product_tail_bound(q, n - 1) < target) --n;
  while (product_tail_bound(q, n) >= target) ++n;
  return n;
}

Evaluation u_breve(std::uint64_t p, const QPoint& pt, std::size_t trunc, const Real& target) {
  arith::require_admissible(p);
  DigitsScope scope(pt.digits);
  Real tail = product_tail_bound(pt.q, trunc);
  if (tail >= target)
    throw PrecisionError("truncation " + std::to_string(trunc) + " too shallow at t=" + format_real(pt.t, 10) +
                         "; need at least " + std::to_string(required_trunc(pt.q, target)));
  const arith::ExactRational e = arith::cusp_order(p);
  const std::vector<int> chi = arith::character_table(p);
  Real log_value = to_real(e) * (-2 * pi() * pt.t);
  Real qn = 1;
  for (std::size_t n = 1; n <= trunc; ++n) {
    qn *= pt.q;
    int c = chi[n % p];
    if (c > 0)
      log_value += log1p(-qn);
    else if (c < 0)
      log_value -= log1p(-qn);
  }
  Evaluation ev;
  ev.trunc = trunc;
  ev.log_value = log_value;
  ev.value = exp(log_value);
  ev.bound = ev.value * expm1(tail);
  return ev;
}

Evaluation u_breve(std::uint64_t p, const QPoint& pt) {
  DigitsScope scope(pt.digits);
  Real target = pow(Real(10), -static_cast<int>(pt.digits > 10 ? pt.digits - 5 : 5));
  return u_breve(p, pt, required_trunc(pt.q, target), target);
}

Evaluation u_at(std::uint64_t p, const QPoint& pt) {
  DigitsScope scope(pt.digits);
  return u_breve(p, QPoint::from_t(1 / (Real(p) * pt.t), pt.digits));
}

std::optional<Real> partition_series_tail(const Real& q, std::size_t n_max) {
  const Real c = pi() * sqrt(Real(2) / 3);
  const Real m = Real(n_max + 1);
  const Real slope = c / (2 * sqrt(m)) + log(q);
  if (slope >= 0) return std::nullopt;
  // n -> c sqrt n + n log q is concave, so it sits under its tangent at N+1.
  Real first = exp(c * sqrt(m) + m * log(q));
  return first / (1 - exp(slope));
}

SchurRatio schur_ratio(const QPoint& pt, const partitions::PartitionTable& plus,
                       const partitions::PartitionTable& minus, const Real& tolerance) {
  if (plus.order() != minus.order()) throw DomainError("tables must share the truncation order");
  DigitsScope scope(pt.digits);
  const std::size_t n_max = plus.order();
  auto tail = partition_series_tail(pt.q, n_max);
  if (!tail) throw PrecisionError("series tail not yet geometric at N=" + std::to_string(n_max));
  Real sum_plus = 0, sum_minus = 0, qn = 1;
  for (std::size_t n = 0; n <= n_max; ++n) {
    if (plus.coeffs[n] != 0) sum_plus += to_real(plus.coeffs[n]) * qn;
    if (minus.coeffs[n] != 0) sum_minus += to_real(minus.coeffs[n]) * qn;
    qn *= pt.q;
  }
  SchurRatio out;
  out.ratio = sum_plus / sum_minus;
  // Both dropped tails lie in [0, T]; the ratio moves by at most this much.
  out.bound = *tail / sum_minus + sum_plus * *tail / (sum_minus * sum_minus);
  if (out.bound > tolerance)
    throw PrecisionError("schur ratio tail bound " + format_real(out.bound, 6) + " exceeds tolerance at N=" +
                         std::to_string(n_max));
  return out;
}

namespace {

Real rr_backward(const std::vector<Real>& powers, std::size_t depth) {
  Real x = 1;
  for (std::size_t j = depth - 1; j >= 1; --j) x = 1 + powers[j] / x;
  return x;
}

}  // namespace

ContinuedFraction rr_cf(const QPoint& pt, std::size_t depth) {
  if (depth < 1) throw DomainError("depth must be at least 1");
  DigitsScope scope(pt.digits);
  std::vector<Real> powers(depth);
  powers[0] = 1;
  for (std::size_t j = 1; j < depth; ++j) powers[j] = powers[j - 1] * pt.q;
  const Real head = pow(pt.q, Real(1) / 5);
  ContinuedFraction out;
  out.value = head / rr_backward(powers, depth);
  out.gap = depth > 1 ? abs(out.value - head / rr_backward(powers, depth - 1)) : Real(0);
  return out;
}

Complex psi_leading(std::uint64_t p, unsigned digits) {
  arith::require_admissible(p);
  DigitsScope scope(digits);
  // Truncated to degree one: (c0 + c1 X)(1 + f X) = c0 + (c1 + c0 f) X,
  // with f = -zeta^r for chi(r) = 1 and +zeta^r for chi(r) = -1.
  Complex c0(Real(1), Real(0));
  Complex c1;
  for (std::uint64_t r = 1; r < p; ++r) {
    int c = arith::chi(p, static_cast<std::int64_t>(r));
    Complex z = root_of_unity(static_cast<long long>(r), static_cast<long long>(p));
    Complex f = c > 0 ? Complex() - z : z;
    c1 = c1 + c0 * f;
  }
  return Complex() - c1;
}

ConcavityReport log_concavity_of_h(std::uint64_t p, const std::vector<Real>& grid, unsigned digits) {
  DigitsScope scope(digits);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] <= 0) throw DomainError("grid values must be positive");
    if (i > 0 && grid[i] <= grid[i - 1]) throw DomainError("grid must be strictly increasing");
  }
  ConcavityReport report;
  if (grid.size() < 3) return report;
  std::vector<Real> f;
  f.reserve(grid.size());
  for (const Real& t : grid) f.push_back(u_breve(p, QPoint::from_t(t, digits)).log_value);
  for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
    Real h1 = grid[i] - grid[i - 1];
    Real h2 = grid[i + 1] - grid[i];
    // Reduces to f(t-h) - 2f(t) + f(t+h) on a uniform grid.
    Real d = (h1 + h2) / 2 * ((f[i + 1] - f[i]) / h2 - (f[i] - f[i - 1]) / h1);
    report.t.push_back(grid[i]);
    if (!report.max_value || d > *report.max_value) report.max_value = d;
    report.second_diff.push_back(std::move(d));
  }
  return report;
}

}  // namespace plab::qseries
