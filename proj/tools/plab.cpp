#include "plab/plab.h"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

namespace {

int exit_code(plab_status s) {
  switch (s) {
    case PLAB_OK: return 0;
    case PLAB_E_USAGE:
    case PLAB_E_BUDGET:
    case PLAB_E_UNDEFINED: return 1;
    case PLAB_E_PRECISION: return 2;
    case PLAB_E_ACCEPTANCE: return 3;
    default: return 4;
  }
}

const char* status_name(plab_status s) {
  switch (s) {
    case PLAB_E_USAGE: return "usage error";
    case PLAB_E_PRECISION: return "precision failure";
    case PLAB_E_ACCEPTANCE: return "acceptance failure";
    case PLAB_E_UNDEFINED: return "undefined ratio";
    case PLAB_E_BUFFER: return "buffer error";
    case PLAB_E_BUDGET: return "budget exceeded";
    default: return "internal error";
  }
}

struct Options {
  uint64_t p = 5;
  uint64_t p_max = 97;
  size_t n_max = 10000;
  std::string set = "plus";
  int k = 0;
  int k_min = -3;
  int k_max = 3;
  std::vector<std::string> t;
  std::vector<uint64_t> n;
  bool no_classical = false;
  unsigned digits = 64;
  unsigned jobs = 1;
  double budget = 2e10;
  std::string checkpoint_dir;
  std::string out;
  std::string format = "csv";
  std::string export_path;
};

int emit(const plab_report* report, const Options& o) {
  plab_format fmt = o.format == "json" ? PLAB_FORMAT_JSON : PLAB_FORMAT_CSV;
  size_t needed = 0;
  plab_report_render(report, fmt, nullptr, 0, &needed);
  std::string text(needed + 1, '\0');
  if (plab_status s = plab_report_render(report, fmt, text.data(), text.size(), nullptr); s != PLAB_OK) {
    std::cerr << "plab: " << plab_last_error() << '\n';
    return exit_code(s);
  }
  text.resize(needed);
  if (o.out.empty()) {
    std::cout << text;
    std::cout.flush();
  } else {
    std::ofstream f(o.out, std::ios::binary);
    f << text;
    if (!f) {
      std::cerr << "plab: cannot write " << o.out << '\n';
      return 1;
    }
  }
  return 0;
}

int export_series(const Options& o, plab_set_kind set) {
  plab_table* table = nullptr;
  plab_table* diff = nullptr;
  plab_status s = plab_table_create(set, o.p, o.n_max, &table);
  if (s == PLAB_OK) s = plab_table_diff(table, o.k, &diff);
  if (s == PLAB_OK) s = plab_table_export_csv(diff, o.export_path.c_str());
  if (s != PLAB_OK) std::cerr << "plab: " << status_name(s) << ": " << plab_last_error() << '\n';
  plab_table_destroy(diff);
  plab_table_destroy(table);
  return exit_code(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact partition ratio and unit-limit experiments for real quadratic fields"};
  app.set_version_flag("--version", plab_version());
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--digits", o.digits, "working precision in decimal digits")->capture_default_str();
    sub->add_option("--out", o.out, "write the report here instead of stdout");
    sub->add_option("--format", o.format, "report format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  };
  auto prime = [&](CLI::App* sub) { sub->add_option("--p", o.p, "prime p = 1 mod 4")->capture_default_str(); };
  auto nmax = [&](CLI::App* sub) { sub->add_option("--nmax", o.n_max, "largest n")->capture_default_str(); };

  std::map<std::string, CLI::App*> subs;
  auto add = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    common(sub);
    subs[name] = sub;
    return sub;
  };

  prime(add("invariants", "unit, regulator, class number, L(1,chi), Gauss sum and cusp order"));

  auto* series = add("series", "coefficients p^(k)(n) of a partition generating function");
  prime(series);
  nmax(series);
  series->add_option("--set", o.set, "part set")
      ->check(CLI::IsMember({"plus", "minus", "plus-excl1", "classical"}))
      ->capture_default_str();
  series->add_option("--k", o.k, "difference order, negative for iterated partial sums")->capture_default_str();
  series->add_option("--export", o.export_path, "also write a plain n,p(n) CSV to this path");

  auto* scan = add("scan-conjecture", "scan ratio sequences for eventual strict decrease");
  scan->add_option("--pmax", o.p_max, "largest prime")->capture_default_str();
  scan->add_option("--kmin", o.k_min, "smallest k")->capture_default_str();
  scan->add_option("--kmax", o.k_max, "largest k")->capture_default_str();
  nmax(scan);
  scan->add_flag("--no-classical", o.no_classical, "skip the classical partition function");
  scan->add_option("--jobs", o.jobs, "worker threads")->capture_default_str();
  scan->add_option("--checkpoint-dir", o.checkpoint_dir, "per-prime checkpoints for resumable scans");
  scan->add_option("--budget", o.budget, "refuse scans above this many big-integer additions")->capture_default_str();

  for (const char* name : {"petersson", "cesaro", "appendix-excl1"}) {
    auto* sub = add(name, std::string(name) == "petersson" ? "pointwise ratio p_+(n)/p_-(n)"
                          : std::string(name) == "cesaro" ? "ratio of partial sums"
                                                          : "parts > 1 that are residues against p_-(n)");
    prime(sub);
    nmax(sub);
  }

  auto* schur = add("schur", "unit limit of the eta quotient on the imaginary axis");
  prime(schur);
  schur->add_option("--t", o.t, "points t > 0 (repeatable)");
  schur->add_option("--budget", o.budget, "refuse series orders above this many big-integer additions")
      ->capture_default_str();

  auto* mein = add("meinardus", "main-term predictions against exact counts");
  prime(mein);
  mein->add_option("--n", o.n, "orders n (repeatable)");

  auto* acc = add("acceptance", "run the acceptance suite");
  acc->add_option("--jobs", o.jobs, "worker threads")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  std::string name;
  for (auto& [n, sub] : subs)
    if (sub->parsed()) name = n;

  plab_command cmd;
  if (plab_command_from_name(name.c_str(), &cmd) != PLAB_OK) {
    std::cerr << "plab: " << plab_last_error() << '\n';
    return 1;
  }
  plab_config cfg;
  plab_config_init(&cfg, cmd);
  cfg.p = o.p;
  cfg.p_max = o.p_max;
  cfg.n_max = o.n_max;
  cfg.set = o.set == "minus"        ? PLAB_SET_MINUS
            : o.set == "plus-excl1" ? PLAB_SET_PLUS_EXCL1
            : o.set == "classical"  ? PLAB_SET_CLASSICAL
                                    : PLAB_SET_PLUS;
  cfg.k = o.k;
  cfg.k_min = o.k_min;
  cfg.k_max = o.k_max;
  std::vector<const char*> t_ptrs;
  for (const auto& t : o.t) t_ptrs.push_back(t.c_str());
  if (!o.t.empty()) {
    cfg.t_values = t_ptrs.data();
    cfg.t_count = t_ptrs.size();
  }
  if (!o.n.empty()) {
    cfg.n_values = o.n.data();
    cfg.n_count = o.n.size();
  }
  cfg.classical = o.no_classical ? 0 : 1;
  cfg.digits = o.digits;
  cfg.jobs = o.jobs;
  cfg.budget = o.budget;
  cfg.checkpoint_dir = o.checkpoint_dir.empty() ? nullptr : o.checkpoint_dir.c_str();

  plab_report* report = nullptr;
  plab_status s = plab_run(&cfg, &report);
  if (s != PLAB_OK && s != PLAB_E_ACCEPTANCE) {
    std::cerr << "plab: " << status_name(s) << ": " << plab_last_error() << '\n';
    return exit_code(s);
  }
  int rc = emit(report, o);
  plab_report_destroy(report);
  if (rc == 0 && !o.export_path.empty() && cmd == PLAB_CMD_SERIES) rc = export_series(o, cfg.set);
  if (rc == 0 && s == PLAB_E_ACCEPTANCE) {
    std::cerr << "plab: acceptance criteria failed\n";
    rc = 3;
  }
  return rc;
}
