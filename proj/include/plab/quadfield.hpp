#pragma once

#include "plab/real.hpp"

#include <gmpxx.h>

#include <cstdint>

// Invariants of the real quadratic field Q(sqrt p) for an admissible prime p.
namespace plab::quadfield {

/// eps = (t + u sqrt p)/2 with t^2 - p u^2 = 4 * norm_sign.
struct Unit {
  mpz_class t;
  mpz_class u;
  int norm_sign = 0;
};

/// Fundamental unit from the period of the continued fraction of
/// (1 + sqrt p)/2. Throws ConsistencyError if the period exceeds
/// `max_period` or the result fails the norm equation.
Unit fundamental_unit(std::uint64_t p, std::size_t max_period = 1u << 20);

/// Test oracle: smallest u >= 1 with p u^2 +- 4 a perfect square.
/// Returns a unit with norm_sign = 0 if none exists with u <= max_u.
Unit fundamental_unit_search(std::uint64_t p, std::uint64_t max_u);

/// log((t + u sqrt p)/2) at the current working precision.
Real regulator(std::uint64_t p, const Unit& unit);

struct SineClassNumber {
  long h = 0;
  Real raw;       // value before rounding
  Real distance;  // |raw - h|
};

/// -(1/R) sum_{0<r<p/2} chi(r) log sin(pi r/p), rounded. Throws
/// PrecisionError when the unrounded value is 0.25 or more from an integer.
SineClassNumber class_number_sine(std::uint64_t p, const Real& regulator);

/// Number of cycles of reduced indefinite forms of discriminant p. Shares no
/// code with the sine route. For p = 1 (mod 4) prime the unit has norm -1,
/// so narrow and wide class numbers agree.
long class_number_forms(std::uint64_t p);

/// (2h / sqrt p) * R
Real l_one(std::uint64_t p, long h, const Real& regulator);

struct SeriesEstimate {
  double value = 0;
  double bound = 0;  // certified bound on |value - L(1,chi)| excluding rounding
};

/// Partial sums of chi(n)/n over whole periods, n <= periods * p.
/// Independent of the class number formula.
SeriesEstimate l_one_series(std::uint64_t p, std::uint64_t periods);

/// Cross-checks the closed form against l_one_series; throws PrecisionError
/// if they disagree beyond the certified bound plus `slack`.
Real l_one_checked(std::uint64_t p, long h, const Real& regulator, double slack = 1e-9);

/// sum_{r=1}^{p} chi(r) e^{2 pi i r/p}
Complex gauss_sum(std::uint64_t p);

/// prod_{r=1}^{(p-1)/2} (zeta^{-r/2} - zeta^{r/2})^{chi(r)}, zeta = e^{2 pi i/p}
Complex kappa(std::uint64_t p);

struct Invariants {
  std::uint64_t p = 0;
  unsigned digits = kDefaultDigits;
  Unit unit;
  Real epsilon;
  Real regulator;
  long h = 0;  // sine route
  long h_forms = 0;
  Real l1;
  Complex gauss;
};

/// Computes everything and checks the cross-route invariants. Throws
/// ConsistencyError if the two class numbers differ.
Invariants compute_invariants(std::uint64_t p, unsigned digits = kDefaultDigits);

}  // namespace plab::quadfield
