#include "plab/arith.hpp"
#include "plab/error.hpp"
#include "plab/quadfield.hpp"

#include <doctest.h>

using namespace plab;
using namespace plab::quadfield;

namespace {

// Smallest (t, u) with t^2 - p u^2 = +-4, checking norm -1 first at each u.
std::tuple<long, long, int> pell_oracle(long p) {
  for (long u = 1;; ++u) {
    for (int s : {-1, 1}) {
      long target = p * u * u + 4 * s;
      if (target <= 0) continue;
      long t = static_cast<long>(std::llround(std::sqrt(static_cast<double>(target))));
      for (long c = std::max(1L, t - 1); c <= t + 1; ++c)
        if (c * c == target) return {c, u, s};
    }
  }
}

}  // namespace

TEST_SUITE("quadfield") {
  TEST_CASE("fundamental units of small fields") {
    auto u5 = fundamental_unit(5);
    CHECK(u5.t == 1);
    CHECK(u5.u == 1);
    CHECK(u5.norm_sign == -1);
    auto u13 = fundamental_unit(13);
    CHECK(u13.t == 3);
    CHECK(u13.u == 1);
    CHECK(u13.norm_sign == -1);
    auto u17 = fundamental_unit(17);
    CHECK(u17.t == 8);
    CHECK(u17.u == 2);
    CHECK(u17.norm_sign == -1);
  }

  TEST_CASE("continued fraction unit matches the exhaustive search") {
    for (auto p : arith::admissible_primes(5, 200)) {
      auto cf = fundamental_unit(p);
      auto [t, u, s] = pell_oracle(static_cast<long>(p));
      REQUIRE(cf.t == t);
      REQUIRE(cf.u == u);
      REQUIRE(cf.norm_sign == s);
      if (cf.u <= 100000) {
        auto search = fundamental_unit_search(p, 100000);
        REQUIRE(search.t == cf.t);
        REQUIRE(search.u == cf.u);
      }
      mpz_class norm = cf.t * cf.t - p * cf.u * cf.u;
      REQUIRE(norm == 4 * cf.norm_sign);
    }
  }

  TEST_CASE("large units come from the continued fraction") {
    auto u = fundamental_unit(1949);
    mpz_class norm = u.t * u.t - 1949 * u.u * u.u;
    CHECK(abs(norm) == 4);
  }

  TEST_CASE("class numbers by both routes") {
    DigitsScope scope(64);
    for (auto p : arith::admissible_primes(5, 500)) {
      auto reg = regulator(p, fundamental_unit(p));
      auto sine = class_number_sine(p, reg);
      long expected = p == 229 || p == 257 ? 3 : p == 401 ? 5 : 1;
      REQUIRE(sine.h == expected);
      REQUIRE(class_number_forms(p) == expected);
      REQUIRE(sine.distance < 1e-20);
    }
  }

  TEST_CASE("L(1,chi) routes agree") {
    DigitsScope scope(64);
    auto inv = compute_invariants(5, 64);
    Real closed = 2 / sqrt(Real(5)) * log((1 + sqrt(Real(5))) / 2);
    CHECK(abs(inv.l1 - closed) < Real("1e-60"));
    CHECK(abs(inv.l1 - Real("0.43040894096400403889")) < Real("1e-19"));
    for (std::uint64_t p : {5u, 13u, 229u, 401u}) {
      auto i = compute_invariants(p, 64);
      auto s = l_one_series(p, 20000);
      CHECK(std::abs(static_cast<double>(i.l1) - s.value) <= s.bound + 1e-12);
      CHECK_NOTHROW(l_one_checked(p, i.h, i.regulator));
    }
    auto i13 = compute_invariants(13, 64);
    CHECK(abs(i13.l1 - 2 / sqrt(Real(13)) * log((3 + sqrt(Real(13))) / 2)) < Real("1e-60"));
  }

  TEST_CASE("wrong class number fails the L(1,chi) cross-check") {
    DigitsScope scope(64);
    auto inv = compute_invariants(229, 64);
    CHECK_THROWS_AS(l_one_checked(229, 1, inv.regulator), PrecisionError);
  }

  TEST_CASE("Gauss sum is sqrt p") {
    DigitsScope scope(64);
    for (std::uint64_t p : {5u, 13u, 101u, 449u}) {
      auto g = gauss_sum(p);
      CHECK(abs(g.re - sqrt(Real(p))) < Real("1e-55"));
      CHECK(abs(g.im) < Real("1e-55"));
    }
  }

  TEST_CASE("cyclotomic product is the inverse unit power") {
    DigitsScope scope(64);
    for (std::uint64_t p : {5u, 13u, 229u}) {
      auto inv = compute_invariants(p, 64);
      auto k = kappa(p);
      CHECK(abs(k.re - exp(-Real(inv.h) * inv.regulator)) < Real("1e-50"));
      CHECK(abs(k.im) < Real("1e-50"));
    }
  }

  TEST_CASE("invariants of Q(sqrt 5)") {
    DigitsScope scope(64);
    auto inv = compute_invariants(5, 64);
    CHECK(inv.h == 1);
    CHECK(inv.h_forms == 1);
    CHECK(abs(inv.epsilon - (1 + sqrt(Real(5))) / 2) < Real("1e-60"));
    CHECK_THROWS_AS(compute_invariants(7, 64), DomainError);
  }
}
