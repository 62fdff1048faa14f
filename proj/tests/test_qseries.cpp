#include "plab/arith.hpp"
#include "plab/error.hpp"
#include "plab/qseries.hpp"
#include "plab/quadfield.hpp"

#include <doctest.h>

using namespace plab;
using namespace plab::qseries;

TEST_SUITE("qseries") {
  TEST_CASE("points") {
    DigitsScope scope(50);
    auto pt = QPoint::from_t(std::string("0.5"), 50);
    CHECK(abs(pt.q - exp(-pi())) < Real("1e-48"));
    CHECK_THROWS_AS(QPoint::from_t(std::string("0"), 50), DomainError);
    CHECK_THROWS_AS(QPoint::from_t(std::string("-1"), 50), DomainError);
    CHECK_THROWS_AS(QPoint::from_t(std::string("abc"), 50), DomainError);
  }

  TEST_CASE("tail bound and truncation") {
    DigitsScope scope(50);
    Real q("0.5");
    auto n = required_trunc(q, Real("1e-30"));
    CHECK(product_tail_bound(q, n) < Real("1e-30"));
    CHECK(product_tail_bound(q, n - 1) >= Real("1e-30"));
    auto pt = QPoint::from_t(std::string("0.05"), 50);
    try {
      u_breve(5, pt, 10, Real("1e-30"));
      FAIL("expected a precision failure");
    } catch (const PrecisionError& e) {
      CHECK(std::string(e.what()).find("trunc") != std::string::npos);
    }
  }

  TEST_CASE("product matches a direct truncated product") {
    DigitsScope scope(50);
    for (std::uint64_t p : {5u, 13u}) {
      auto pt = QPoint::from_t(std::string("0.3"), 50);
      Real direct = exp(to_real(arith::cusp_order(p)) * log(pt.q));
      for (std::size_t n = 1; n <= 400; ++n) {
        Real f = 1 - pow(pt.q, Real(n));
        int c = arith::chi(p, static_cast<std::int64_t>(n));
        if (c == 1) direct *= f;
        if (c == -1) direct /= f;
      }
      auto ev = u_breve(p, pt);
      CHECK(abs(ev.value - direct) <= ev.bound + Real("1e-45"));
    }
  }

  TEST_CASE("limit at the cusp is the inverse unit") {
    DigitsScope scope(64);
    Real phi_inv = (sqrt(Real(5)) - 1) / 2;
    auto ev = u_breve(5, QPoint::from_t(std::string("0.05"), 64));
    CHECK(abs(ev.value - phi_inv) < Real("1e-10"));
    auto inv13 = quadfield::compute_invariants(13, 64);
    auto ev13 = u_breve(13, QPoint::from_t(std::string("0.02"), 64));
    CHECK(abs(ev13.value - exp(-Real(inv13.h) * inv13.regulator)) < Real("1e-10"));
  }

  TEST_CASE("large t is dominated by the leading power") {
    DigitsScope scope(50);
    auto pt = QPoint::from_t(std::string("20"), 50);
    Real lead = exp(to_real(arith::cusp_order(13)) * log(pt.q));
    CHECK(abs(u_breve(13, pt).value / lead - 1) < Real("1e-50"));
  }

  TEST_CASE("involution") {
    DigitsScope scope(50);
    auto pt = QPoint::from_t(std::string("0.4"), 50);
    auto a = u_at(5, pt);
    auto b = u_breve(5, QPoint::from_t(1 / (5 * pt.t), 50));
    CHECK(abs(a.value - b.value) < Real("1e-45"));
  }

  TEST_CASE("decreasing and concave on approach to the cusp") {
    DigitsScope scope(50);
    for (std::uint64_t p : {5u, 13u}) {
      Real prev = 0;
      for (int i = 1; i <= 20; ++i) {
        auto v = u_breve(p, QPoint::from_t(Real(i) / 40, 50)).value;
        if (i > 1) REQUIRE(v < prev);
        prev = v;
      }
    }
  }

  TEST_CASE("log second differences") {
    DigitsScope scope(50);
    std::vector<Real> grid;
    for (int i = 1; i <= 40; ++i) grid.push_back(Real(i) / 20);
    for (std::uint64_t p : {5u, 13u}) {
      auto rep = log_concavity_of_h(p, grid, 50);
      REQUIRE(rep.max_value.has_value());
      CHECK(*rep.max_value < Real("1e-6"));
      CHECK(rep.second_diff.size() == 38);
    }
    auto single = log_concavity_of_h(5, {Real("0.5")}, 50);
    CHECK(single.second_diff.empty());
    CHECK_FALSE(single.max_value.has_value());
    CHECK_THROWS_AS(log_concavity_of_h(5, {Real("0.5"), Real("0.4"), Real("0.6")}, 50), DomainError);
  }

  TEST_CASE("Schur ratio") {
    DigitsScope scope(64);
    auto plus = partitions::generate_table(partitions::PartSet::plus(5), 2000);
    auto minus = partitions::generate_table(partitions::PartSet::minus(5), 2000);
    auto pt = QPoint::from_t(std::string("0.15"), 64);
    auto sr = schur_ratio(pt, plus, minus, Real("1e-40"));
    auto ub = u_breve(5, pt);
    Real qe = exp(log(pt.q) / 5);
    CHECK(abs(sr.ratio * ub.value - qe) <= sr.bound * ub.value + sr.ratio * ub.bound + Real("1e-54"));
    CHECK(abs(sr.ratio / qe - (1 + sqrt(Real(5))) / 2) < Real("1e-3"));

    auto far = QPoint::from_t(std::string("50"), 64);
    CHECK(abs(schur_ratio(far, plus, minus, Real("1e-40")).ratio - 1) < Real("1e-100"));

    auto small_p = partitions::generate_table(partitions::PartSet::plus(5), 50);
    auto small_m = partitions::generate_table(partitions::PartSet::minus(5), 50);
    CHECK_THROWS_AS(schur_ratio(QPoint::from_t(std::string("0.01"), 64), small_p, small_m, Real("1e-40")),
                    PrecisionError);
  }

  TEST_CASE("partition series tail") {
    DigitsScope scope(50);
    Real q = exp(-2 * pi() * Real("0.15"));
    auto bound = partition_series_tail(q, 2000);
    REQUIRE(bound.has_value());
    auto table = partitions::generate_table(partitions::PartSet::classical(), 3000);
    Real actual = 0;
    for (std::size_t n = 2001; n <= 3000; ++n) actual += to_real(table.coeffs[n]) * pow(q, Real(n));
    CHECK(actual <= *bound);
    CHECK_FALSE(partition_series_tail(Real("0.999"), 5).has_value());
  }

  TEST_CASE("continued fraction") {
    DigitsScope scope(64);
    auto pt = QPoint::from_t(std::string("0.2"), 64);
    CHECK(abs(rr_cf(pt, 1).value - exp(log(pt.q) / 5)) < Real("1e-60"));
    for (const char* t : {"0.1", "0.2", "0.5"}) {
      auto p = QPoint::from_t(std::string(t), 64);
      CHECK(abs(rr_cf(p, 200).value - u_breve(5, p).value) < Real("1e-40"));
    }
    auto near = QPoint::from_t(std::string("0.01"), 64);
    CHECK(abs(rr_cf(near, 2000).value - (sqrt(Real(5)) - 1) / 2) < Real("1e-10"));
    CHECK_THROWS_AS(rr_cf(pt, 0), DomainError);
  }

  TEST_CASE("leading coefficient of the cyclotomic product") {
    DigitsScope scope(64);
    for (std::uint64_t p : {5u, 13u}) {
      auto s = psi_leading(p, 64);
      CHECK(abs(s.re - sqrt(Real(p))) < Real("1e-55"));
      CHECK(abs(s.im) < Real("1e-55"));
    }
  }
}
