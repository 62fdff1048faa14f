#include "plab/arith.hpp"
#include "plab/error.hpp"

#include <doctest.h>

#include <numeric>
#include <random>

using namespace plab;
using namespace plab::arith;

namespace {

std::vector<bool> sieve(std::size_t n) {
  std::vector<bool> prime(n + 1, true);
  prime[0] = false;
  if (n >= 1) prime[1] = false;
  for (std::size_t i = 2; i * i <= n; ++i)
    if (prime[i])
      for (std::size_t j = i * i; j <= n; j += i) prime[j] = false;
  return prime;
}

// Direct enumeration of squares mod p.
int legendre_by_squares(std::uint64_t p, std::int64_t n) {
  std::int64_t r = ((n % static_cast<std::int64_t>(p)) + p) % p;
  if (r == 0) return 0;
  for (std::uint64_t x = 1; x < p; ++x)
    if (x * x % p == static_cast<std::uint64_t>(r)) return 1;
  return -1;
}

}  // namespace

TEST_SUITE("arith") {
  TEST_CASE("admissibility") {
    CHECK(is_admissible_prime(13).admissible);
    CHECK(is_admissible_prime(13).above_five);
    CHECK_FALSE(is_admissible_prime(7).admissible);
    CHECK_FALSE(is_admissible_prime(25).admissible);
    CHECK(is_admissible_prime(5).admissible);
    CHECK_FALSE(is_admissible_prime(5).above_five);
    CHECK_FALSE(is_admissible_prime(2).admissible);
    CHECK_THROWS_AS(require_admissible(7), DomainError);
    CHECK_NOTHROW(require_admissible(1993));
  }

  TEST_CASE("primality agrees with a sieve") {
    auto prime = sieve(20000);
    for (std::uint64_t n = 0; n <= 20000; ++n) REQUIRE(is_prime(n) == prime[n]);
    CHECK(is_prime(2305843009213693951ULL));
    CHECK_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
  }

  TEST_CASE("admissible primes list") {
    auto ps = admissible_primes(5, 100);
    std::vector<std::uint64_t> expected{5, 13, 17, 29, 37, 41, 53, 61, 73, 89, 97};
    CHECK(ps == expected);
  }

  TEST_CASE("character examples") {
    CHECK(chi(5, 2) == -1);
    CHECK(chi(5, 4) == 1);
    CHECK(chi(13, 2) == -1);
    CHECK(chi(13, 0) == 0);
    CHECK(chi(13, -1) == 1);
  }

  TEST_CASE("reciprocity route matches Euler and the squares oracle") {
    for (auto p : admissible_primes(5, 400)) {
      for (std::int64_t n = -2 * static_cast<std::int64_t>(p); n <= 2 * static_cast<std::int64_t>(p); ++n) {
        int expected = legendre_by_squares(p, n);
        REQUIRE(chi(p, n) == expected);
        REQUIRE(chi_euler(p, n) == expected);
      }
    }
  }

  TEST_CASE("character is completely multiplicative and balanced") {
    for (auto p : admissible_primes(5, 300)) {
      auto table = character_table(p);
      CHECK(std::accumulate(table.begin(), table.end(), 0) == 0);
      for (std::uint64_t a = 0; a < p; ++a)
        for (std::uint64_t b = 0; b < p; b += 7) REQUIRE(table[a * b % p] == table[a] * table[b]);
      CHECK(table[p - 1] == 1);  // p = 1 mod 4 makes chi even
    }
  }

  TEST_CASE("bernoulli polynomial") {
    CHECK(bernoulli2(0) == mpq_class(1, 6));
    CHECK(bernoulli2(mpq_class(1, 5)) == mpq_class(1, 150));
    CHECK(bernoulli2(mpq_class(1, 2)) == mpq_class(-1, 12));
  }

  TEST_CASE("cusp order") {
    CHECK(cusp_order(5) == mpq_class(1, 5));
    CHECK(cusp_order(13) == 1);
    for (auto p : admissible_primes(5, 200)) REQUIRE(cusp_order_siegel(p) == cusp_order_closed(p));
  }

  TEST_CASE("rationals are canonical and satisfy field axioms") {
    CHECK(make_rational(6, -4) == mpq_class(-3, 2));
    CHECK(make_rational(6, -4).get_den() == 2);
    CHECK_THROWS_AS(make_rational(1, 0), DomainError);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> d(-1000, 1000);
    for (int i = 0; i < 500; ++i) {
      long long b = d(rng), e = d(rng);
      if (b == 0) b = 1;
      if (e == 0) e = 3;
      auto x = make_rational(d(rng), b), y = make_rational(d(rng), e), z = make_rational(d(rng), 7);
      REQUIRE(mpq_class(x + y) == mpq_class(y + x));
      REQUIRE(mpq_class((x * y) * z) == mpq_class(x * (y * z)));
      REQUIRE(mpq_class(x * (y + z)) == mpq_class(x * y + x * z));
      if (x != 0) REQUIRE(mpq_class(x / x) == 1);
    }
  }
}
