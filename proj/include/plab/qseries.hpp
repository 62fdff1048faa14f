#pragma once

#include "plab/partitions.hpp"
#include "plab/real.hpp"

#include <cstdint>
#include <optional>
#include <vector>

// High-precision q-series on the imaginary axis, tau = i t, q = e^{-2 pi t}.
namespace plab::qseries {

struct QPoint {
  Real t;
  Real q;
  unsigned digits = 50;

  /// Throws DomainError unless t > 0.
  static QPoint from_t(const Real& t, unsigned digits);
  static QPoint from_t(const std::string& t, unsigned digits);
};

struct Evaluation {
  Real value;
  Real log_value;
  Real bound;  // certified bound on |value - exact|
  std::size_t trunc = 0;
};

/// Certified bound q^{N+1}/(1-q)^2 on the tail of sum chi(n) log(1 - q^n).
Real product_tail_bound(const Real& q, std::size_t trunc);

/// Smallest N with product_tail_bound(q, N) < target.
std::size_t required_trunc(const Real& q, const Real& target);

/// q^{e_p} prod_{n <= trunc} (1 - q^n)^{chi(n)}, summed in log space.
/// Throws PrecisionError (naming the required truncation) when the tail
/// bound exceeds `target`.
Evaluation u_breve(std::uint64_t p, const QPoint& pt, std::size_t trunc, const Real& target);

/// As above with trunc chosen to reach 10^{-(digits - 5)}.
Evaluation u_breve(std::uint64_t p, const QPoint& pt);

/// u(i t) through the Fricke involution: u(i t) = u_breve(i/(p t)).
Evaluation u_at(std::uint64_t p, const QPoint& pt);

struct SchurRatio {
  Real ratio;
  Real bound;  // certified bound on |ratio - full-series ratio|
};

/// Bound on sum_{n > N} p_A(n) q^n for any part set, from p_A(n) <= p(n)
/// < exp(pi sqrt(2n/3)). Returns nullopt if the terms are not yet
/// decreasing geometrically at n = N+1.
std::optional<Real> partition_series_tail(const Real& q, std::size_t n_max);

/// sum p_+(n) q^n / sum p_-(n) q^n over both tables, which must share N.
/// Throws PrecisionError when the dropped tails cannot be certified below
/// `tolerance`.
SchurRatio schur_ratio(const QPoint& pt, const partitions::PartitionTable& plus,
                       const partitions::PartitionTable& minus, const Real& tolerance);

struct ContinuedFraction {
  Real value;
  Real gap;  // |depth - (depth-1)| iterate difference; 0 for depth 1
};

/// q^{1/5} / (1 + q/(1 + q^2/(1 + ...))) with `depth` levels, evaluated
/// backwards. depth = 1 gives q^{1/5}.
ContinuedFraction rr_cf(const QPoint& pt, std::size_t depth);

/// Linear coefficient of prod_{r=1}^{p-1} (1 - X zeta^r)^{chi(r)} is -S_p;
/// returns S_p.
Complex psi_leading(std::uint64_t p, unsigned digits = kDefaultDigits);

struct ConcavityReport {
  std::vector<Real> t;               // interior grid points
  std::vector<Real> second_diff;     // f(t-)-2f(t)+f(t+) of log u_breve on a uniform grid,
                                     // generalized to divided differences otherwise
  std::optional<Real> max_value;     // empty when fewer than three points
};

/// Second differences of t -> log u_breve(i t). Requires a strictly
/// increasing grid of positive values.
ConcavityReport log_concavity_of_h(std::uint64_t p, const std::vector<Real>& grid, unsigned digits);

}  // namespace plab::qseries
