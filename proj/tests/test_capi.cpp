#include "plab/plab.h"

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string text(plab_status (*fn)(const plab_table*, size_t, char*, size_t, size_t*), const plab_table* t,
                 size_t n) {
  size_t needed = 0;
  fn(t, n, nullptr, 0, &needed);
  std::string s(needed + 1, '\0');
  REQUIRE(fn(t, n, s.data(), s.size(), nullptr) == PLAB_OK);
  s.resize(needed);
  return s;
}

std::string field_value(const plab_field* f, const char* key) {
  char buf[256];
  REQUIRE(plab_field_get(f, key, buf, sizeof buf, nullptr) == PLAB_OK);
  return buf;
}

}  // namespace

TEST_SUITE("capi") {
  TEST_CASE("version and arithmetic") {
    CHECK(std::string(plab_version()) == "1.0.0");
    int above = -1;
    CHECK(plab_is_admissible_prime(13, &above) == 1);
    CHECK(above == 1);
    CHECK(plab_is_admissible_prime(7, nullptr) == 0);
    CHECK(plab_chi(13, 2) == -1);
    char buf[16];
    size_t needed = 0;
    CHECK(plab_cusp_order(5, buf, sizeof buf, &needed) == PLAB_OK);
    CHECK(std::string(buf) == "1/5");
    CHECK(needed == 3);
    CHECK(plab_cusp_order(7, buf, sizeof buf, nullptr) == PLAB_E_USAGE);
    CHECK(std::string(plab_last_error()).find("7") != std::string::npos);
  }

  TEST_CASE("buffer protocol") {
    char small[2] = {'x', 'y'};
    size_t needed = 0;
    CHECK(plab_cusp_order(5, small, sizeof small, &needed) == PLAB_E_BUFFER);
    CHECK(needed == 3);
    CHECK(small[0] == 'x');
  }

  TEST_CASE("field handle") {
    plab_field* f = nullptr;
    REQUIRE(plab_field_create(229, 40, &f) == PLAB_OK);
    CHECK(plab_field_class_number(f) == 3);
    CHECK(field_value(f, "t") == "15");
    CHECK(field_value(f, "norm") == "-1");
    CHECK(field_value(f, "h_forms") == "3");
    char buf[8];
    CHECK(plab_field_get(f, "nope", buf, sizeof buf, nullptr) == PLAB_E_USAGE);
    plab_field_destroy(f);
    CHECK(plab_field_create(9, 40, &f) == PLAB_E_USAGE);
    CHECK(plab_field_create(5, 40, nullptr) == PLAB_E_USAGE);
  }

  TEST_CASE("table handles") {
    plab_table* t = nullptr;
    REQUIRE(plab_table_create(PLAB_SET_CLASSICAL, 0, 100, &t) == PLAB_OK);
    CHECK(plab_table_order(t) == 100);
    CHECK(text(plab_table_coeff, t, 100) == "190569292");
    plab_table* d1 = nullptr;
    REQUIRE(plab_table_diff(t, 1, &d1) == PLAB_OK);
    CHECK(plab_table_k(d1) == 1);
    char buf[64];
    CHECK(plab_table_rho(t, d1, 4, buf, sizeof buf, nullptr) == PLAB_OK);
    CHECK(std::string(buf) == "2/5");
    plab_scan_result scan{};
    CHECK(plab_table_scan(t, &scan) == PLAB_OK);
    CHECK(scan.last_violation == 25);
    CHECK(scan.undefined_count == 0);
    CHECK(plab_table_coeff(t, 101, buf, sizeof buf, nullptr) == PLAB_E_USAGE);
    plab_table* bad = nullptr;
    CHECK(plab_table_diff(t, 40, &bad) == PLAB_E_USAGE);
    plab_table_destroy(d1);
    plab_table_destroy(t);

    plab_table* m = nullptr;
    REQUIRE(plab_table_create(PLAB_SET_MINUS, 5, 10, &m) == PLAB_OK);
    plab_table* m1 = nullptr;
    REQUIRE(plab_table_diff(m, 1, &m1) == PLAB_OK);
    CHECK(plab_table_rho(m, m1, 1, buf, sizeof buf, nullptr) == PLAB_E_UNDEFINED);
    std::string path = "plab_capi_export.csv";
    REQUIRE(plab_table_export_csv(m, path.c_str()) == PLAB_OK);
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str().rfind("n,p(n)\n0,1\n1,0\n2,1\n", 0) == 0);
    std::remove(path.c_str());
    plab_table_destroy(m1);
    plab_table_destroy(m);
    CHECK(plab_table_create(PLAB_SET_PLUS, 7, 10, &m) == PLAB_E_USAGE);
  }

  TEST_CASE("q-series entry points") {
    char value[128], bound[32];
    REQUIRE(plab_u_breve(5, "0.05", 30, value, sizeof value, bound, sizeof bound) == PLAB_OK);
    CHECK(std::string(value).rfind("6.1803398873", 0) == 0);
    CHECK(plab_u_breve(5, "0", 30, value, sizeof value, nullptr, 0) == PLAB_E_USAGE);
    REQUIRE(plab_rr_cf("0.5", 200, 30, value, sizeof value) == PLAB_OK);
    char cmp[128];
    REQUIRE(plab_u_breve(5, "0.5", 30, cmp, sizeof cmp, nullptr, 0) == PLAB_OK);
    CHECK(std::string(value).substr(0, 25) == std::string(cmp).substr(0, 25));
  }

  TEST_CASE("runs and reports") {
    plab_command cmd;
    REQUIRE(plab_command_from_name("petersson", &cmd) == PLAB_OK);
    CHECK(plab_command_from_name("nope", &cmd) == PLAB_E_USAGE);
    plab_config cfg;
    plab_config_init(&cfg, cmd);
    cfg.n_max = 100;
    plab_report* r = nullptr;
    REQUIRE(plab_run(&cfg, &r) == PLAB_OK);
    CHECK(plab_report_passed(r) == 1);
    size_t needed = 0;
    CHECK(plab_report_render(r, PLAB_FORMAT_JSON, nullptr, 0, &needed) == PLAB_E_BUFFER);
    std::string out(needed + 1, '\0');
    REQUIRE(plab_report_render(r, PLAB_FORMAT_JSON, out.data(), out.size(), nullptr) == PLAB_OK);
    CHECK(out.find("\"command\": \"petersson\"") != std::string::npos);
    plab_report_destroy(r);

    cfg.p = 11;
    CHECK(plab_run(&cfg, &r) == PLAB_E_USAGE);
    plab_config_init(&cfg, PLAB_CMD_SCAN_CONJECTURE);
    cfg.p_max = 1987;
    cfg.n_max = 100000;
    CHECK(plab_run(&cfg, &r) == PLAB_E_BUDGET);
    plab_config_init(&cfg, PLAB_CMD_SCHUR);
    const char* grid[] = {"0.001"};
    cfg.t_values = grid;
    cfg.t_count = 1;
    cfg.digits = 30;
    CHECK(plab_run(&cfg, &r) == PLAB_E_PRECISION);
    CHECK(std::string(plab_last_error()).find("budget") != std::string::npos);
  }
}
