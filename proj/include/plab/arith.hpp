#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

// Exact integer and rational primitives shared by every other module.
namespace plab::arith {

/// Exact rational, always canonical (lowest terms, positive denominator).
using ExactRational = mpq_class;

ExactRational make_rational(long long num, long long den);

struct Admissibility {
  bool admissible = false;  // prime and congruent to 1 mod 4
  bool above_five = false;
};

bool is_prime(std::uint64_t n);

/// Total on p >= 2. The separate `above_five` flag records the p > 5
/// assumption; p = 5 remains usable throughout the library.
Admissibility is_admissible_prime(std::uint64_t p);

/// Throws DomainError unless p is prime and p = 1 (mod 4).
void require_admissible(std::uint64_t p);

/// Jacobi symbol (a/n) for odd n > 0 via the binary reciprocity reduction.
int jacobi(std::int64_t a, std::uint64_t n);

/// Legendre symbol (n/p). Requires p admissible; the caller is trusted.
inline int chi(std::uint64_t p, std::int64_t n) { return jacobi(n, p); }

/// Euler's criterion n^((p-1)/2) mod p mapped to {-1, 0, 1}.
int chi_euler(std::uint64_t p, std::int64_t n);

/// The full table chi(p, 0..p-1).
std::vector<int> character_table(std::uint64_t p);

/// x^2 - x + 1/6
ExactRational bernoulli2(const ExactRational& x);

/// Exponent of q at infinity of the modular unit, as the half-range
/// Siegel sum (p/2) * sum_{r=1}^{(p-1)/2} chi(r) B2(r/p).
ExactRational cusp_order_siegel(std::uint64_t p);

/// Closed form (1/(4p)) * sum_{a=1}^{p-1} chi(a) a^2.
ExactRational cusp_order_closed(std::uint64_t p);

/// Both routes; throws ConsistencyError if they differ.
ExactRational cusp_order(std::uint64_t p);

/// All admissible primes in [lo, hi].
std::vector<std::uint64_t> admissible_primes(std::uint64_t lo, std::uint64_t hi);

}  // namespace plab::arith
