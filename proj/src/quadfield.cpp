#include "plab/quadfield.hpp"

#include "plab/arith.hpp"
#include "plab/error.hpp"

#include <cmath>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace plab::quadfield {
namespace {

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool is_square(unsigned __int128 n, std::uint64_t& root) {
  auto r = static_cast<unsigned __int128>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  root = static_cast<std::uint64_t>(r);
  return r * r == n;
}

std::string str(std::uint64_t p) { return std::to_string(p); }

}  // namespace

Unit fundamental_unit(std::uint64_t p, std::size_t max_period) {
  arith::require_admissible(p);
  const std::int64_t D = static_cast<std::int64_t>(p);
  const std::int64_t s = static_cast<std::int64_t>(isqrt(p));

  // Complete quotients x_k = (m_k + sqrt p)/d_k starting at (1 + sqrt p)/2.
  std::int64_t m = 1;
  std::int64_t d = 2;
  // Convergents h_j/k_j of (1 + sqrt p)/2; h holds h_{j-1}, h_prev h_{j-2}.
  mpz_class h = 1, h_prev = 0;
  mpz_class k = 0, k_prev = 1;
  std::int64_t m1 = 0, d1 = 0;
  for (std::size_t step = 0; step <= max_period + 1; ++step) {
    std::int64_t a = (m + s) / d;
    mpz_class h_next = a * h + h_prev;
    mpz_class k_next = a * k + k_prev;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
    m = a * d - m;
    d = (D - m * m) / d;
    if (step == 0) {
      m1 = m;
      d1 = d;
      continue;
    }
    if (m == m1 && d == d1) {
      // Period length is `step`; eps = h_{step-1} - k_{step-1} * conj((1 + sqrt p)/2).
      Unit unit;
      unit.t = 2 * h_prev - k_prev;
      unit.u = k_prev;
      mpz_class norm = unit.t * unit.t - mpz_class(str(p)) * unit.u * unit.u;
      if (norm == 4)
        unit.norm_sign = 1;
      else if (norm == -4)
        unit.norm_sign = -1;
      else
        throw ConsistencyError("continued fraction unit fails the norm equation at p=" + str(p));
      return unit;
    }
  }
  throw ConsistencyError("no period within " + std::to_string(max_period) + " steps at p=" + str(p));
}

Unit fundamental_unit_search(std::uint64_t p, std::uint64_t max_u) {
  Unit unit;
  for (std::uint64_t u = 1; u <= max_u; ++u) {
    unsigned __int128 pu2 = static_cast<unsigned __int128>(p) * u * u;
    std::uint64_t t = 0;
    // Norm -1 first: for p = 5, u = 1 both signs occur and t = 1 is smaller.
    if (pu2 >= 4 && is_square(pu2 - 4, t) && t > 0) {
      unit.t = mpz_class(str(t));
      unit.u = mpz_class(str(u));
      unit.norm_sign = -1;
      return unit;
    }
    if (is_square(pu2 + 4, t)) {
      unit.t = mpz_class(str(t));
      unit.u = mpz_class(str(u));
      unit.norm_sign = 1;
      return unit;
    }
  }
  return unit;
}

Real regulator(std::uint64_t p, const Unit& unit) {
  Real eps = (to_real(unit.t) + to_real(unit.u) * sqrt(Real(p))) / 2;
  return log(eps);
}

SineClassNumber class_number_sine(std::uint64_t p, const Real& reg) {
  arith::require_admissible(p);
  if (reg <= 0) throw DomainError("regulator must be positive");
  Real sum = 0;
  const Real step = pi() / Real(p);
  for (std::uint64_t r = 1; 2 * r < p; ++r) {
    int c = arith::chi(p, static_cast<std::int64_t>(r));
    Real term = log(sin(step * Real(r)));
    if (c > 0)
      sum += term;
    else if (c < 0)
      sum -= term;
  }
  SineClassNumber out;
  out.raw = -sum / reg;
  Real rounded = round(out.raw);
  out.distance = abs(out.raw - rounded);
  if (out.distance >= Real("0.25"))
    throw PrecisionError("sine class number at p=" + str(p) + " is not near an integer; raise precision");
  out.h = rounded.convert_to<long>();
  return out;
}

long class_number_forms(std::uint64_t p) {
  arith::require_admissible(p);
  using Form = std::tuple<std::int64_t, std::int64_t, std::int64_t>;
  const std::int64_t D = static_cast<std::int64_t>(p);
  const std::int64_t s = static_cast<std::int64_t>(isqrt(p));

  // Reduced: 0 < b < sqrt D and sqrt D - b < 2|a| < sqrt D + b. D is not a
  // square, so with s = floor(sqrt D) these become integer inequalities.
  std::set<Form> reduced;
  for (std::int64_t b = 1; b <= s; b += 2) {
    std::int64_t neg_ac = (D - b * b) / 4;
    for (std::int64_t a = 1; a <= neg_ac; ++a) {
      if (neg_ac % a != 0) continue;
      if (2 * a + b < s + 1 || 2 * a - b > s) continue;
      std::int64_t c = neg_ac / a;
      reduced.emplace(a, b, -c);
      reduced.emplace(-a, b, c);
    }
  }

  auto next = [&](const Form& f) {
    auto [a, b, c] = f;
    std::int64_t width = 2 * (c < 0 ? -c : c);
    std::int64_t shift = (s + b) % width;
    std::int64_t b2 = s - shift;
    std::int64_t num = b2 * b2 - D;
    if (num % (4 * c) != 0) throw ConsistencyError("reduction step left the lattice at p=" + str(p));
    return Form{c, b2, num / (4 * c)};
  };

  std::set<Form> seen;
  long cycles = 0;
  for (const Form& start : reduced) {
    if (seen.count(start)) continue;
    ++cycles;
    Form f = start;
    do {
      if (!reduced.count(f)) throw ConsistencyError("reduction step left the reduced set at p=" + str(p));
      seen.insert(f);
      f = next(f);
    } while (f != start);
  }
  return cycles;
}

Real l_one(std::uint64_t p, long h, const Real& reg) {
  if (h < 1) throw DomainError("class number must be positive");
  if (reg <= 0) throw DomainError("regulator must be positive");
  return 2 * Real(h) / sqrt(Real(p)) * reg;
}

SeriesEstimate l_one_series(std::uint64_t p, std::uint64_t periods) {
  arith::require_admissible(p);
  if (periods < 2) throw DomainError("need at least two periods");
  std::vector<int> chi = arith::character_table(p);
  // Compensated summation; the term count reaches millions.
  long double sum = 0, carry = 0;
  const std::uint64_t last = periods * p;
  for (std::uint64_t n = 1; n <= last; ++n) {
    int c = chi[n % p];
    if (c == 0) continue;
    long double y = static_cast<long double>(c) / static_cast<long double>(n) - carry;
    long double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
  // Block m of the tail is sum_a chi(a)/(mp + a). Since sum chi(a) and
  // sum chi(a) a vanish, expanding 1/(mp + a) in a/(mp) leaves
  // |block_m| <= |S2|/(mp)^3 + 1/(4 m^4), S2 = sum chi(a) a^2.
  double s2 = 0;
  for (std::uint64_t a = 1; a < p; ++a) s2 += chi[a] * static_cast<double>(a) * static_cast<double>(a);
  double km1 = static_cast<double>(periods - 1);
  double pd = static_cast<double>(p);
  SeriesEstimate out;
  out.value = static_cast<double>(sum);
  out.bound = std::fabs(s2) / (pd * pd * pd) / (2 * km1 * km1) + 1.0 / (12 * km1 * km1 * km1);
  return out;
}

Real l_one_checked(std::uint64_t p, long h, const Real& reg, double slack) {
  Real closed = l_one(p, h, reg);
  SeriesEstimate series = l_one_series(p, 20000);
  double gap = std::fabs(closed.convert_to<double>() - series.value);
  if (gap > series.bound + slack)
    throw PrecisionError("L(1,chi) routes disagree at p=" + str(p) + " by " + std::to_string(gap));
  return closed;
}

Complex gauss_sum(std::uint64_t p) {
  arith::require_admissible(p);
  Complex sum;
  for (std::uint64_t r = 1; r <= p; ++r) {
    int c = arith::chi(p, static_cast<std::int64_t>(r));
    if (c == 0) continue;
    Complex z = root_of_unity(static_cast<long long>(r), static_cast<long long>(p));
    sum = c > 0 ? sum + z : sum - z;
  }
  return sum;
}

Complex kappa(std::uint64_t p) {
  arith::require_admissible(p);
  Complex product(Real(1), Real(0));
  const long long den = 2 * static_cast<long long>(p);
  for (std::uint64_t r = 1; 2 * r < p; ++r) {
    int c = arith::chi(p, static_cast<std::int64_t>(r));
    long long rr = static_cast<long long>(r);
    Complex factor = root_of_unity(-rr, den) - root_of_unity(rr, den);
    if (c > 0)
      product *= factor;
    else if (c < 0)
      product /= factor;
  }
  return product;
}

Invariants compute_invariants(std::uint64_t p, unsigned digits) {
  arith::require_admissible(p);
  DigitsScope scope(digits);
  Invariants inv;
  inv.p = p;
  inv.digits = digits;
  inv.unit = fundamental_unit(p);
  inv.epsilon = (to_real(inv.unit.t) + to_real(inv.unit.u) * sqrt(Real(p))) / 2;
  inv.regulator = log(inv.epsilon);
  inv.h = class_number_sine(p, inv.regulator).h;
  inv.h_forms = class_number_forms(p);
  if (inv.h != inv.h_forms)
    throw ConsistencyError("class numbers disagree at p=" + str(p) + ": sine " + std::to_string(inv.h) +
                           ", forms " + std::to_string(inv.h_forms));
  inv.l1 = l_one_checked(p, inv.h, inv.regulator);
  inv.gauss = gauss_sum(p);
  return inv;
}

}  // namespace plab::quadfield
