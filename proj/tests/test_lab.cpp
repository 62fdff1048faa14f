#include "plab/error.hpp"
#include "plab/lab.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>

using namespace plab;
using namespace plab::lab;

namespace {

const Table& find(const Report& r, const std::string& name) {
  for (const auto& t : r.tables)
    if (t.name == name) return t;
  throw std::runtime_error("no table " + name);
}

Cell summary(const Report& r, const std::string& key) {
  for (const auto& [k, v] : r.summary)
    if (k == key) return v;
  throw std::runtime_error("no summary " + key);
}

}  // namespace

TEST_SUITE("lab") {
  TEST_CASE("csv rendering escapes and orders") {
    Report r;
    r.command = "demo";
    r.header = {{"p", 5}};
    auto& t = r.table("t", {"a", "b"});
    t.add({1, "x,y"});
    t.add({Cell(), "say \"hi\""});
    r.note("ok", true);
    std::string csv = r.render(Format::csv);
    CHECK(csv == "# command=demo\n# p=5\n# table=t\na,b\n1,\"x,y\"\n,\"say \"\"hi\"\"\"\n# summary ok=true\n# passed=true\n");
  }

  TEST_CASE("json rendering keeps big integers as strings") {
    Report r;
    r.command = "demo";
    r.table("t", {"n", "v"}).add({3, "123456789012345678901234567890"});
    auto j = nlohmann::json::parse(r.render(Format::json));
    CHECK(j["command"] == "demo");
    CHECK(j["tables"][0]["rows"][0][0] == 3);
    CHECK(j["tables"][0]["rows"][0][1] == "123456789012345678901234567890");
    CHECK(j["passed"] == true);
  }

  TEST_CASE("names round trip") {
    for (auto name : {"invariants", "series", "scan-conjecture", "petersson", "cesaro", "schur", "meinardus",
                      "appendix-excl1", "acceptance"})
      CHECK(to_string(*parse_command(name)) == name);
    CHECK_FALSE(parse_command("bogus").has_value());
    CHECK(to_string(*parse_set("plus-excl1")) == "plus-excl1");
    CHECK_FALSE(parse_set("odd").has_value());
  }

  TEST_CASE("validation happens before work") {
    ExperimentConfig c;
    c.command = Command::invariants;
    c.p = 7;
    CHECK_THROWS_AS(run(c), DomainError);
    c.p = 5;
    c.digits = 5;
    CHECK_THROWS_AS(run(c), DomainError);
    c = ExperimentConfig{};
    c.command = Command::petersson;
    c.n_max = 5;
    CHECK_THROWS_AS(run(c), DomainError);
    c = ExperimentConfig{};
    c.command = Command::scan_conjecture;
    c.k_min = 2;
    c.k_max = 1;
    CHECK_THROWS_AS(c.validate(), DomainError);
    c = ExperimentConfig{};
    c.command = Command::schur;
    c.t_grid = {"0.1", "-2"};
    CHECK_THROWS_AS(c.validate(), DomainError);
    c.t_grid = {"x"};
    CHECK_THROWS_AS(c.validate(), DomainError);
    c = ExperimentConfig{};
    c.command = Command::series;
    c.set = SetKind::classical;
    c.p = 4;
    CHECK_NOTHROW(c.validate());
  }

  TEST_CASE("header describes the run") {
    ExperimentConfig c;
    c.command = Command::series;
    c.set = SetKind::minus;
    c.n_max = 20;
    c.k = 1;
    auto r = run(c);
    std::string csv = r.render(Format::csv);
    CHECK(csv.rfind("# command=series\n# version=1.0.0\n# digits=64\n# p=5\n# set=minus\n# nmax=20\n# k=1\n", 0) == 0);
    CHECK(find(r, "series").rows.size() == 21);
  }

  TEST_CASE("invariants of p = 13") {
    auto r = run_invariants(13, 40);
    const auto& rows = find(r, "invariants").rows;
    auto value = [&](const std::string& key) {
      for (const auto& row : rows)
        if (row[0].text() == key) return row[1].text();
      return std::string();
    };
    CHECK(value("unit_t") == "3");
    CHECK(value("unit_u") == "1");
    CHECK(value("h_sine") == "1");
    CHECK(value("h_forms") == "1");
    CHECK(value("cusp_order") == "1");
    CHECK(value("epsilon").rfind("3.302775637731994646559610633735247973125", 0) == 0);
  }

  TEST_CASE("pointwise ratios mark undefined entries") {
    auto r = run_petersson(5, 200, 40);
    const auto& rows = find(r, "ratios").rows;
    CHECK(rows[1][3].text() == "undefined");
    CHECK(rows[0][3].text() == "1");
    CHECK(std::get<std::int64_t>(summary(r, "inequality_threshold").raw()) == 3);
  }

  TEST_CASE("partial sums start at one") {
    auto r = run_cesaro(5, 100, 40);
    CHECK(find(r, "ratios").rows[0][3].text() == "1");
    CHECK(std::get<bool>(summary(r, "gap_decreasing").raw()));
  }

  TEST_CASE("scan budget refusal carries the estimate") {
    ExperimentConfig c;
    c.command = Command::scan_conjecture;
    c.p_max = 1987;
    c.n_max = 100000;
    try {
      run(c);
      FAIL("expected refusal");
    } catch (const BudgetError& e) {
      CHECK(e.estimate() > c.budget);
      CHECK(e.estimate() == doctest::Approx(scan_cost(c)));
    }
  }

  TEST_CASE("scan is order stable and resumes from checkpoints") {
    ExperimentConfig c;
    c.command = Command::scan_conjecture;
    c.p_max = 41;
    c.n_max = 600;
    c.k_min = -1;
    c.k_max = 2;
    auto serial = run(c).render(Format::csv);
    c.jobs = 4;
    CHECK(run(c).render(Format::csv) == serial);

    auto dir = std::filesystem::temp_directory_path() / "plab-scan-test";
    std::filesystem::remove_all(dir);
    c.checkpoint_dir = dir.string();
    c.jobs = 2;
    CHECK(run(c).render(Format::csv) == serial);
    std::size_t files = 0;
    for ([[maybe_unused]] auto& e : std::filesystem::directory_iterator(dir)) ++files;
    CHECK(files == 13);  // 6 primes, two sets each, plus classical
    CHECK(run(c).render(Format::csv) == serial);
    std::filesystem::remove_all(dir);
  }

  TEST_CASE("scan verdict") {
    ExperimentConfig c;
    c.command = Command::scan_conjecture;
    c.p_max = 13;
    c.n_max = 2000;
    c.k_min = 0;
    c.k_max = 0;
    auto r = run(c);
    CHECK(r.passed);
    const auto& rows = find(r, "scan").rows;
    REQUIRE(rows.size() == 5);
    CHECK(rows[0][1].text() == "plus");
    CHECK(rows[0][3].text() == "119");
    CHECK(rows[4][1].text() == "classical");
    CHECK(rows[4][3].text() == "25");
  }

  TEST_CASE("schur report improves toward the unit") {
    auto r = run_schur(5, {"0.2", "0.1", "0.05"}, 40);
    CHECK(std::get<bool>(summary(r, "limit_gap_decreasing").raw()));
    CHECK(std::get<bool>(summary(r, "decreasing_on_profile").raw()));
    for (const auto& row : find(r, "schur").rows) CHECK(std::get<bool>(row[8].raw()));
  }

  TEST_CASE("meinardus and appendix reports") {
    auto m = run_meinardus(5, {1000, 10000}, 40);
    CHECK(std::get<bool>(summary(m, "plus_ratio_trending_to_one").raw()));
    CHECK(summary(m, "exponent").text() == "-3/4");
    auto a = run_appendix(5, 2000, 40);
    CHECK(std::get<std::int64_t>(summary(a, "inequality_threshold").raw()) == 4);
    CHECK(summary(a, "exponent_excl1").text() == "-5/4");
  }

  TEST_CASE("reruns are byte identical") {
    ExperimentConfig c;
    c.command = Command::petersson;
    c.n_max = 300;
    CHECK(run(c).render(Format::json) == run(c).render(Format::json));
    c.command = Command::schur;
    CHECK(run(c).render(Format::csv) == run(c).render(Format::csv));
  }
}
