#include "plab/arith.hpp"

#include "plab/error.hpp"

#include <string>
#include <utility>

namespace plab::arith {
namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::uint64_t reduce(std::int64_t a, std::uint64_t n) {
  if (a >= 0) return static_cast<std::uint64_t>(a) % n;
  // -(a + 1) avoids overflow at INT64_MIN
  std::uint64_t r = static_cast<std::uint64_t>(-(a + 1)) % n;
  return n - 1 - r;
}

}  // namespace

ExactRational make_rational(long long num, long long den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  ExactRational q(mpz_class(std::to_string(num)), mpz_class(std::to_string(den)));
  q.canonicalize();
  return q;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This witness set is deterministic for all 64-bit n.
  for (std::uint64_t a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Admissibility is_admissible_prime(std::uint64_t p) {
  Admissibility a;
  a.admissible = p % 4 == 1 && is_prime(p);
  a.above_five = a.admissible && p > 5;
  return a;
}

void require_admissible(std::uint64_t p) {
  if (!is_admissible_prime(p).admissible)
    throw DomainError("p=" + std::to_string(p) + " is not a prime congruent to 1 mod 4");
}

int jacobi(std::int64_t a_signed, std::uint64_t n) {
  if (n == 0 || (n & 1) == 0) throw DomainError("Jacobi symbol needs an odd positive modulus");
  std::uint64_t a = reduce(a_signed, n);
  int t = 1;
  while (a != 0) {
    while ((a & 1) == 0) {
      a >>= 1;
      std::uint64_t r = n & 7;
      if (r == 3 || r == 5) t = -t;
    }
    std::swap(a, n);
    if ((a & 3) == 3 && (n & 3) == 3) t = -t;
    a %= n;
  }
  return n == 1 ? t : 0;
}

int chi_euler(std::uint64_t p, std::int64_t n) {
  std::uint64_t a = reduce(n, p);
  if (a == 0) return 0;
  std::uint64_t e = pow_mod(a, (p - 1) / 2, p);
  return e == 1 ? 1 : -1;
}

std::vector<int> character_table(std::uint64_t p) {
  std::vector<int> table(p);
  for (std::uint64_t r = 0; r < p; ++r) table[r] = chi(p, static_cast<std::int64_t>(r));
  return table;
}

ExactRational bernoulli2(const ExactRational& x) {
  ExactRational result = x * x - x + ExactRational(1, 6);
  result.canonicalize();
  return result;
}

ExactRational cusp_order_siegel(std::uint64_t p) {
  require_admissible(p);
  ExactRational sum = 0;
  for (std::uint64_t r = 1; r <= (p - 1) / 2; ++r) {
    int c = chi(p, static_cast<std::int64_t>(r));
    ExactRational x(mpz_class(std::to_string(r)), mpz_class(std::to_string(p)));
    x.canonicalize();
    if (c > 0)
      sum += bernoulli2(x);
    else if (c < 0)
      sum -= bernoulli2(x);
  }
  ExactRational result = sum * ExactRational(mpz_class(std::to_string(p)), 2);
  result.canonicalize();
  return result;
}

ExactRational cusp_order_closed(std::uint64_t p) {
  require_admissible(p);
  mpz_class sum = 0;
  for (std::uint64_t a = 1; a < p; ++a) {
    mpz_class sq = mpz_class(std::to_string(a));
    sq *= sq;
    int c = chi(p, static_cast<std::int64_t>(a));
    if (c > 0)
      sum += sq;
    else if (c < 0)
      sum -= sq;
  }
  ExactRational result(sum, mpz_class(std::to_string(p)) * 4);
  result.canonicalize();
  return result;
}

ExactRational cusp_order(std::uint64_t p) {
  ExactRational siegel = cusp_order_siegel(p);
  ExactRational closed = cusp_order_closed(p);
  if (siegel != closed)
    throw ConsistencyError("cusp order mismatch at p=" + std::to_string(p) + ": " + siegel.get_str() +
                           " vs " + closed.get_str());
  return siegel;
}

std::vector<std::uint64_t> admissible_primes(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = lo < 5 ? 5 : lo; p <= hi; ++p)
    if (is_admissible_prime(p).admissible) out.push_back(p);
  return out;
}

}  // namespace plab::arith
