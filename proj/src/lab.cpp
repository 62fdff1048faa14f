#include "plab/lab.hpp"

#include "plab/arith.hpp"
#include "plab/asymptotics.hpp"
#include "plab/error.hpp"
#include "plab/qseries.hpp"
#include "plab/quadfield.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

namespace plab::lab {
namespace {

using partitions::PartitionTable;
using Json = nlohmann::ordered_json;

constexpr std::size_t kMaxOrder = 1000000;

std::string num(const Real& x, unsigned digits) { return format_real(x, digits); }

std::string ratio_text(const mpz_class& a, const mpz_class& b) {
  mpq_class q(a, b);
  q.canonicalize();
  return q.get_str();
}

Real ratio_real(const mpz_class& a, const mpz_class& b) { return to_real(a) / to_real(b); }

/// Strictly decreasing sequence.
bool strictly_decreasing(const std::vector<Real>& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (!(v[i] < v[i - 1])) return false;
  return true;
}

std::vector<std::size_t> checkpoints(std::size_t n_max) {
  std::vector<std::size_t> out;
  for (std::size_t n : {100u, 1000u, 5000u, 10000u, 50000u, 100000u})
    if (n <= n_max) out.push_back(n);
  if (out.empty() || out.back() != n_max) out.push_back(n_max);
  return out;
}

/// Shared body of the pointwise and partial-sum ratio reports.
void ratio_tables(Report& report, const std::vector<mpz_class>& plus, const std::vector<mpz_class>& minus,
                  const Real& target, unsigned digits, const std::string& lhs, const std::string& rhs) {
  Table& t = report.table("ratios", {"n", lhs, rhs, "ratio", "gap"});
  std::optional<std::size_t> last_bad;
  for (std::size_t n = 0; n < plus.size(); ++n) {
    if (minus[n] == 0) {
      t.add({n, plus[n].get_str(), minus[n].get_str(), "undefined", Cell()});
    } else {
      Real gap = abs(ratio_real(plus[n], minus[n]) - target);
      t.add({n, plus[n].get_str(), minus[n].get_str(), ratio_text(plus[n], minus[n]), num(gap, digits)});
    }
    if (!(minus[n] < plus[n])) last_bad = n;
  }
  Table& c = report.table("convergence", {"n", "gap"});
  std::vector<Real> gaps;
  for (std::size_t n : checkpoints(plus.size() - 1)) {
    if (minus[n] == 0) continue;
    gaps.push_back(abs(ratio_real(plus[n], minus[n]) - target));
    c.add({n, num(gaps.back(), digits)});
  }
  report.note("target", num(target, digits));
  report.note("final_gap", gaps.empty() ? Cell() : Cell(num(gaps.back(), digits)));
  report.note("gap_decreasing", strictly_decreasing(gaps));
  report.note("inequality_threshold",
              last_bad ? Cell(static_cast<std::int64_t>(*last_bad)) : Cell(static_cast<std::int64_t>(-1)));
}

}  // namespace

std::string to_string(Command c) {
  switch (c) {
    case Command::invariants: return "invariants";
    case Command::series: return "series";
    case Command::scan_conjecture: return "scan-conjecture";
    case Command::petersson: return "petersson";
    case Command::cesaro: return "cesaro";
    case Command::schur: return "schur";
    case Command::meinardus: return "meinardus";
    case Command::appendix_excl1: return "appendix-excl1";
    case Command::acceptance: return "acceptance";
  }
  return "?";
}

std::optional<Command> parse_command(const std::string& name) {
  for (Command c : {Command::invariants, Command::series, Command::scan_conjecture, Command::petersson,
                    Command::cesaro, Command::schur, Command::meinardus, Command::appendix_excl1,
                    Command::acceptance})
    if (to_string(c) == name) return c;
  return std::nullopt;
}

std::string to_string(SetKind s) {
  switch (s) {
    case SetKind::plus: return "plus";
    case SetKind::minus: return "minus";
    case SetKind::plus_excl1: return "plus-excl1";
    case SetKind::classical: return "classical";
  }
  return "?";
}

std::optional<SetKind> parse_set(const std::string& name) {
  for (SetKind s : {SetKind::plus, SetKind::minus, SetKind::plus_excl1, SetKind::classical})
    if (to_string(s) == name) return s;
  return std::nullopt;
}

partitions::PartSet make_set(SetKind kind, std::uint64_t p) {
  switch (kind) {
    case SetKind::plus: return partitions::PartSet::plus(p);
    case SetKind::minus: return partitions::PartSet::minus(p);
    case SetKind::plus_excl1: return partitions::PartSet::plus_excluding_one(p);
    case SetKind::classical: break;
  }
  return partitions::PartSet::classical();
}

void ExperimentConfig::validate() const {
  auto need_prime = [&] {
    auto a = arith::is_admissible_prime(p);
    if (!a.admissible)
      throw DomainError("--p " + std::to_string(p) +
                        " is not admissible: it must be a prime congruent to 1 mod 4 (e.g. 5, 13, 17, 29)");
  };
  if (digits < 20 || digits > 4000) throw DomainError("--digits must lie in [20, 4000]");
  if (jobs < 1 || jobs > 256) throw DomainError("--jobs must lie in [1, 256]");
  if (n_max > kMaxOrder) throw DomainError("--nmax exceeds " + std::to_string(kMaxOrder));
  if (!(budget > 0)) throw DomainError("--budget must be positive");
  switch (command) {
    case Command::invariants:
    case Command::schur:
    case Command::meinardus: need_prime(); break;
    case Command::petersson:
    case Command::cesaro:
    case Command::appendix_excl1:
      need_prime();
      if (n_max < 10) throw DomainError("--nmax must be at least 10");
      break;
    case Command::series:
      if (set != SetKind::classical) need_prime();
      if (k < -partitions::kMaxDiffOrder || k > partitions::kMaxDiffOrder)
        throw DomainError("--k must lie in [-16, 16]");
      break;
    case Command::scan_conjecture:
      if (p_max < 5) throw DomainError("--pmax must be at least 5");
      if (n_max < 2) throw DomainError("--nmax must be at least 2");
      if (k_min > k_max) throw DomainError("--kmin must not exceed --kmax");
      if (k_min < -partitions::kMaxDiffOrder || k_max > partitions::kMaxDiffOrder)
        throw DomainError("k range must lie in [-16, 16]");
      break;
    case Command::acceptance: break;
  }
  if (command == Command::schur) {
    if (t_grid.empty()) throw DomainError("--t needs at least one value");
    DigitsScope scope(digits);
    for (const auto& t : t_grid)
      if (parse_real(t) <= 0) throw DomainError("--t values must be positive");
  }
  if (command == Command::meinardus) {
    if (n_list.empty()) throw DomainError("--n needs at least one value");
    for (auto n : n_list)
      if (n < 1 || n > kMaxOrder) throw DomainError("--n values must lie in [1, 1000000]");
  }
}

KeyValues ExperimentConfig::header() const {
  KeyValues h;
  h.emplace_back("version", kVersion);
  h.emplace_back("digits", static_cast<std::int64_t>(digits));
  switch (command) {
    case Command::invariants: h.emplace_back("p", static_cast<std::int64_t>(p)); break;
    case Command::series:
      h.emplace_back("p", static_cast<std::int64_t>(p));
      h.emplace_back("set", to_string(set));
      h.emplace_back("nmax", n_max);
      h.emplace_back("k", k);
      break;
    case Command::scan_conjecture:
      h.emplace_back("pmax", static_cast<std::int64_t>(p_max));
      h.emplace_back("kmin", k_min);
      h.emplace_back("kmax", k_max);
      h.emplace_back("nmax", n_max);
      h.emplace_back("classical", classical);
      break;
    case Command::petersson:
    case Command::cesaro:
    case Command::appendix_excl1:
      h.emplace_back("p", static_cast<std::int64_t>(p));
      h.emplace_back("nmax", n_max);
      break;
    case Command::schur: {
      h.emplace_back("p", static_cast<std::int64_t>(p));
      std::string grid;
      for (const auto& t : t_grid) grid += (grid.empty() ? "" : " ") + t;
      h.emplace_back("t", grid);
      break;
    }
    case Command::meinardus: {
      h.emplace_back("p", static_cast<std::int64_t>(p));
      std::string list;
      for (auto n : n_list) list += (list.empty() ? "" : " ") + std::to_string(n);
      h.emplace_back("n", list);
      break;
    }
    case Command::acceptance: break;
  }
  return h;
}

Report run_invariants(std::uint64_t p, unsigned digits) {
  arith::require_admissible(p);
  DigitsScope scope(digits);
  quadfield::Invariants inv = quadfield::compute_invariants(p, digits);
  auto sine = quadfield::class_number_sine(p, inv.regulator);
  auto series = quadfield::l_one_series(p, 20000);
  Complex kappa = quadfield::kappa(p);
  Complex psi = qseries::psi_leading(p, digits);
  const unsigned shown = std::min(digits, 40u);

  Report report;
  report.command = "invariants";
  Table& t = report.table("invariants", {"name", "value"});
  t.add({"p", static_cast<std::int64_t>(p)});
  t.add({"above_five", p > 5});
  t.add({"unit_t", inv.unit.t.get_str()});
  t.add({"unit_u", inv.unit.u.get_str()});
  t.add({"unit_norm", inv.unit.norm_sign});
  t.add({"epsilon", num(inv.epsilon, shown)});
  t.add({"regulator", num(inv.regulator, shown)});
  t.add({"h_sine", static_cast<std::int64_t>(inv.h)});
  t.add({"h_sine_unrounded", num(sine.raw, shown)});
  t.add({"h_forms", static_cast<std::int64_t>(inv.h_forms)});
  t.add({"l1", num(inv.l1, shown)});
  t.add({"l1_series", num(Real(series.value), 15)});
  t.add({"l1_series_bound", num(Real(series.bound), 3)});
  t.add({"gauss_re", num(inv.gauss.re, shown)});
  t.add({"gauss_im", num(inv.gauss.im, 5)});
  t.add({"sqrt_p", num(sqrt(Real(p)), shown)});
  t.add({"psi_leading_re", num(psi.re, shown)});
  t.add({"kappa_re", num(kappa.re, shown)});
  t.add({"kappa_im", num(kappa.im, 5)});
  t.add({"eps_pow_minus_h", num(exp(-Real(inv.h) * inv.regulator), shown)});
  t.add({"cusp_order", arith::cusp_order(p).get_str()});
  report.note("h_routes_agree", inv.h == inv.h_forms);
  return report;
}

Report run_series(std::uint64_t p, SetKind set, std::size_t n_max, int k) {
  partitions::PartSet pset = make_set(set, p);
  PartitionTable table = partitions::generate_table(pset, n_max);
  partitions::DiffTable dt = partitions::diff_table(table, k);
  Report report;
  report.command = "series";
  Table& t = report.table("series", {"n", "value"});
  for (std::size_t n = 0; n <= n_max; ++n) t.add({n, dt.values[n].get_str()});
  report.note("set", pset.name());
  report.note("inverse_identity", partitions::verify_inverse_identity(table));
  return report;
}

Report run_petersson(std::uint64_t p, std::size_t n_max, unsigned digits) {
  arith::require_admissible(p);
  DigitsScope scope(digits);
  auto inv = quadfield::compute_invariants(p, digits);
  PartitionTable plus = partitions::generate_table(partitions::PartSet::plus(p), n_max);
  PartitionTable minus = partitions::generate_table(partitions::PartSet::minus(p), n_max);
  Report report;
  report.command = "petersson";
  ratio_tables(report, plus.coeffs, minus.coeffs, exp(Real(inv.h) * inv.regulator), digits, "p_plus", "p_minus");

  // rho^(0)(n) -> 0 for S_+
  auto d0 = partitions::diff_table(plus, 0);
  auto d1 = partitions::diff_table(plus, 1);
  Table& r = report.table("rho0_plus", {"n", "rho"});
  for (std::size_t n : checkpoints(n_max)) r.add({n, num(to_real(partitions::rho(d0, d1, n)), 12)});
  return report;
}

Report run_cesaro(std::uint64_t p, std::size_t n_max, unsigned digits) {
  arith::require_admissible(p);
  DigitsScope scope(digits);
  auto inv = quadfield::compute_invariants(p, digits);
  PartitionTable plus = partitions::generate_table(partitions::PartSet::plus(p), n_max);
  PartitionTable minus = partitions::generate_table(partitions::PartSet::minus(p), n_max);
  auto sp = partitions::diff_table(plus, -1);
  auto sm = partitions::diff_table(minus, -1);
  Report report;
  report.command = "cesaro";
  ratio_tables(report, sp.values, sm.values, exp(Real(inv.h) * inv.regulator), digits, "sum_plus", "sum_minus");

  // (S(n+h))/S(n) - 1 for h = 1..3 at decades; S is the partial sum of p_+.
  Table& l = report.table("partial_sum_shift", {"n", "h", "excess"});
  for (std::size_t n : {100u, 1000u, 10000u, 100000u}) {
    if (n + 3 > n_max) break;
    for (std::size_t h = 1; h <= 3; ++h)
      l.add({n, h, num(ratio_real(sp.values[n + h], sp.values[n]) - 1, 12)});
  }
  return report;
}

namespace {

struct ScanJob {
  std::uint64_t p = 0;  // 0: classical
  SetKind set = SetKind::classical;
};

struct ScanRow {
  std::uint64_t p = 0;
  std::string set;
  int k = 0;
  std::optional<std::size_t> last_violation;
  std::size_t violations = 0;
  std::vector<std::size_t> undefined;
  bool tail_clean = false;
  bool pk_certificate = false;
};

std::vector<ScanJob> scan_jobs(const ExperimentConfig& c) {
  std::vector<ScanJob> jobs;
  for (auto p : arith::admissible_primes(5, c.p_max)) {
    jobs.push_back({p, SetKind::plus});
    jobs.push_back({p, SetKind::minus});
  }
  if (c.classical) jobs.push_back({0, SetKind::classical});
  return jobs;
}

std::vector<ScanRow> run_scan_job(const ScanJob& job, const ExperimentConfig& c) {
  auto pset = make_set(job.set, job.p);
  PartitionTable table = partitions::generate_table(pset, c.n_max);
  std::vector<ScanRow> rows;
  for (int k = c.k_min; k <= c.k_max; ++k) {
    auto rep = partitions::monotonicity_scan(partitions::diff_table(table, k));
    ScanRow row;
    row.p = job.p;
    row.set = to_string(job.set);
    row.k = k;
    row.last_violation = rep.last_violation;
    row.violations = rep.violation_count;
    row.undefined = rep.undefined;
    row.tail_clean = !rep.last_violation || *rep.last_violation < c.n_max / 2;
    // Partial certificate for the hypothesis P_{k+1}, ..., P_{k+5}.
    row.pk_certificate = true;
    for (int j = k + 1; j <= k + 5; ++j)
      row.pk_certificate = row.pk_certificate && partitions::has_property_pk(pset, j, 64);
    rows.push_back(std::move(row));
  }
  return rows;
}

Json rows_to_json(const std::vector<ScanRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    Json j;
    j["p"] = r.p;
    j["set"] = r.set;
    j["k"] = r.k;
    j["last_violation"] = r.last_violation ? Json(*r.last_violation) : Json(nullptr);
    j["violations"] = r.violations;
    j["undefined"] = r.undefined;
    j["tail_clean"] = r.tail_clean;
    j["pk_certificate"] = r.pk_certificate;
    out.push_back(std::move(j));
  }
  return out;
}

std::vector<ScanRow> rows_from_json(const Json& in) {
  std::vector<ScanRow> rows;
  for (const auto& j : in) {
    ScanRow r;
    r.p = j.at("p").get<std::uint64_t>();
    r.set = j.at("set").get<std::string>();
    r.k = j.at("k").get<int>();
    if (!j.at("last_violation").is_null()) r.last_violation = j.at("last_violation").get<std::size_t>();
    r.violations = j.at("violations").get<std::size_t>();
    r.undefined = j.at("undefined").get<std::vector<std::size_t>>();
    r.tail_clean = j.at("tail_clean").get<bool>();
    r.pk_certificate = j.at("pk_certificate").get<bool>();
    rows.push_back(std::move(r));
  }
  return rows;
}

std::filesystem::path checkpoint_path(const ExperimentConfig& c, const ScanJob& job) {
  std::ostringstream name;
  name << "scan-" << (job.p ? "p" + std::to_string(job.p) : std::string("classical")) << '-' << to_string(job.set)
       << "-n" << c.n_max << "-k" << c.k_min << "_" << c.k_max << ".json";
  return std::filesystem::path(c.checkpoint_dir) / name.str();
}

std::string join(const std::vector<std::size_t>& v, std::size_t limit) {
  std::string s;
  for (std::size_t i = 0; i < v.size() && i < limit; ++i) s += (i ? ";" : "") + std::to_string(v[i]);
  if (v.size() > limit) s += ";...";
  return s;
}

}  // namespace

double scan_cost(const ExperimentConfig& c) {
  double cost = 0;
  const double n = static_cast<double>(c.n_max);
  for (const auto& job : scan_jobs(c)) {
    // Residue sets hold about half of all integers; the classical set all of them.
    double parts = job.set == SetKind::classical ? n : n / 2;
    cost += parts * n;
  }
  return cost;
}

Report run_scan(const ExperimentConfig& c) {
  double cost = scan_cost(c);
  if (cost > c.budget) {
    std::ostringstream os;
    os << "scan needs about " << cost << " big-integer additions, above the budget of " << c.budget
       << "; lower --pmax/--nmax or raise --budget";
    throw BudgetError(os.str(), cost);
  }
  const std::vector<ScanJob> jobs = scan_jobs(c);
  std::vector<std::vector<ScanRow>> results(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());
  if (!c.checkpoint_dir.empty()) std::filesystem::create_directories(c.checkpoint_dir);

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      try {
        if (!c.checkpoint_dir.empty()) {
          auto path = checkpoint_path(c, jobs[i]);
          if (std::filesystem::exists(path)) {
            std::ifstream in(path);
            results[i] = rows_from_json(Json::parse(in));
            continue;
          }
          results[i] = run_scan_job(jobs[i], c);
          auto tmp = path;
          tmp += ".tmp";
          {
            std::ofstream out(tmp);
            out << rows_to_json(results[i]).dump() << '\n';
          }
          std::filesystem::rename(tmp, path);
        } else {
          results[i] = run_scan_job(jobs[i], c);
        }
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(c.jobs, static_cast<unsigned>(jobs.size())));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  Report report;
  report.command = "scan-conjecture";
  Table& t = report.table("scan", {"p", "set", "k", "last_violation", "violations", "undefined_count",
                                   "undefined", "tail_clean", "pk_certificate"});
  bool all_clean = true;
  std::size_t total = 0;
  for (const auto& rows : results) {
    for (const auto& r : rows) {
      t.add({static_cast<std::int64_t>(r.p), r.set, r.k,
             r.last_violation ? Cell(*r.last_violation) : Cell(), r.violations, r.undefined.size(),
             join(r.undefined, 20), r.tail_clean, r.pk_certificate});
      all_clean = all_clean && r.tail_clean;
      ++total;
    }
  }
  report.note("rows", total);
  report.note("verdict", all_clean ? "supported: every sequence strictly decreasing over the upper half of the range"
                                   : "not supported at this scale");
  report.passed = all_clean;
  return report;
}

Report run_schur(std::uint64_t p, const std::vector<std::string>& t_grid, unsigned digits, double budget) {
  arith::require_admissible(p);
  DigitsScope scope(digits);
  auto inv = quadfield::compute_invariants(p, digits);
  const Real eps_h = exp(Real(inv.h) * inv.regulator);
  const Real e = to_real(arith::cusp_order(p));
  const Real tolerance = pow(Real(10), -static_cast<int>(digits / 2));
  const unsigned shown = std::min(digits, 30u);

  std::vector<qseries::QPoint> points;
  std::size_t n_needed = 64;
  for (const auto& t : t_grid) {
    points.push_back(qseries::QPoint::from_t(t, digits));
    for (;;) {
      auto tail = qseries::partition_series_tail(points.back().q, n_needed);
      if (tail && *tail < tolerance / 4) break;
      n_needed *= 2;
      // Two tables of about N/2 parts each.
      double cost = static_cast<double>(n_needed) * static_cast<double>(n_needed);
      if (n_needed > kMaxOrder || cost > budget)
        throw PrecisionError("t=" + t + " needs partition series beyond N=" + std::to_string(n_needed / 2) +
                             ", above the work budget; use larger t or raise --budget");
    }
  }
  PartitionTable plus = partitions::generate_table(partitions::PartSet::plus(p), n_needed);
  PartitionTable minus = partitions::generate_table(partitions::PartSet::minus(p), n_needed);

  Report report;
  report.command = "schur";
  Table& tab = report.table("schur", {"t", "q", "u_breve", "u_breve_bound", "limit_gap", "schur_ratio",
                                      "schur_bound", "identity_residual", "identity_ok", "u_via_involution"});
  std::vector<Real> gaps;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& pt = points[i];
    auto ub = qseries::u_breve(p, pt);
    auto sr = qseries::schur_ratio(pt, plus, minus, tolerance);
    auto u = qseries::u_at(p, pt);
    Real qe = exp(e * log(pt.q));
    Real residual = abs(sr.ratio * ub.value - qe);
    Real allowed = sr.bound * ub.value + sr.ratio * ub.bound + pow(Real(10), -static_cast<int>(digits - 10));
    gaps.push_back(abs(ub.value * eps_h - 1));
    tab.add({t_grid[i], num(pt.q, shown), num(ub.value, digits), num(ub.bound, 5), num(gaps.back(), 10),
             num(sr.ratio, digits), num(sr.bound, 5), num(residual, 5), residual <= allowed, num(u.value, shown)});
  }
  report.note("eps_pow_h", num(eps_h, shown));
  report.note("series_order", n_needed);
  report.note("limit_gap_decreasing", strictly_decreasing(gaps));

  // (t, value, bound) on 0.05..2.0, the neighbourhood of t = 0 plotted for the unit.
  std::vector<Real> grid;
  for (int i = 1; i <= 40; ++i) grid.push_back(Real(i) / 20);
  Table& fig = report.table("profile", {"t", "u_breve", "bound", "second_diff_log"});
  auto conc = qseries::log_concavity_of_h(p, grid, digits);
  bool monotone_decreasing = true;
  Real prev = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    auto ub = qseries::u_breve(p, qseries::QPoint::from_t(grid[i], digits));
    if (i > 0 && !(ub.value < prev)) monotone_decreasing = false;
    prev = ub.value;
    Cell second = (i > 0 && i + 1 < grid.size()) ? Cell(num(conc.second_diff[i - 1], 6)) : Cell();
    fig.add({num(grid[i], 4), num(ub.value, shown), num(ub.bound, 5), second});
  }
  report.note("log_concave_max_second_diff", conc.max_value ? Cell(num(*conc.max_value, 6)) : Cell());
  report.note("decreasing_on_profile", monotone_decreasing);
  if (p == 5) {
    Table& rr = report.table("rogers_ramanujan", {"t", "rr_cf", "gap", "difference"});
    for (const auto& pt : points) {
      auto cf = qseries::rr_cf(pt, 200);
      rr.add({num(pt.t, 6), num(cf.value, shown), num(cf.gap, 5),
              num(abs(cf.value - qseries::u_breve(5, pt).value), 5)});
    }
  }
  return report;
}

Report run_meinardus(std::uint64_t p, const std::vector<std::uint64_t>& n_list, unsigned digits) {
  arith::require_admissible(p);
  DigitsScope scope(digits);
  auto inv = quadfield::compute_invariants(p, digits);
  auto md = asymptotics::build_meinardus(inv);
  std::size_t n_max = *std::max_element(n_list.begin(), n_list.end());
  PartitionTable plus = partitions::generate_table(partitions::PartSet::plus(p), n_max);
  PartitionTable minus = partitions::generate_table(partitions::PartSet::minus(p), n_max);
  const unsigned shown = std::min(digits, 30u);

  Report report;
  report.command = "meinardus";
  Table& t = report.table("main_term", {"n", "set", "exact", "predicted_log", "exact_over_predicted",
                                        "predicted_ratio"});
  std::vector<Real> gaps_plus;
  for (auto n : n_list) {
    auto pp = asymptotics::predict(md, asymptotics::Sign::plus, n);
    auto pm = asymptotics::predict(md, asymptotics::Sign::minus, n);
    Real predicted_ratio = exp(pp.log_main_term - pm.log_main_term);
    Real rp = to_real(plus.coeffs[n]) / exp(pp.log_main_term);
    Real rm = to_real(minus.coeffs[n]) / exp(pm.log_main_term);
    gaps_plus.push_back(abs(rp - 1));
    t.add({static_cast<std::int64_t>(n), "plus", plus.coeffs[n].get_str(), num(pp.log_main_term, shown),
           num(rp, 12), num(predicted_ratio, shown)});
    t.add({static_cast<std::int64_t>(n), "minus", minus.coeffs[n].get_str(), num(pm.log_main_term, shown),
           num(rm, 12), num(predicted_ratio, shown)});
  }
  report.note("residue_a", num(md.residue_a, shown));
  report.note("exponent", md.exponent_power.get_str());
  report.note("d0_plus", num(md.d0_plus, 5));
  report.note("d0_minus", num(md.d0_minus, 5));
  report.note("dprime_plus", num(md.dp_plus, shown));
  report.note("dprime_minus", num(md.dp_minus, shown));
  report.note("dprime_difference", num(md.dp_plus - md.dp_minus, shown));
  report.note("h_log_eps", num(md.h_log_eps, shown));
  report.note("c_plus", num(md.c_plus, shown));
  report.note("c_minus", num(md.c_minus, shown));
  report.note("plus_ratio_trending_to_one", strictly_decreasing(gaps_plus));
  report.note("tolerance_note", "prediction tolerances are engineering choices; the error exponent is not modeled");
  return report;
}

Report run_appendix(std::uint64_t p, std::size_t n_max, unsigned digits) {
  arith::require_admissible(p);
  DigitsScope scope(digits);
  auto inv = quadfield::compute_invariants(p, digits);
  auto md = asymptotics::build_excluded_one(asymptotics::build_meinardus(inv));
  PartitionTable excl = partitions::generate_table(partitions::PartSet::plus_excluding_one(p), n_max);
  PartitionTable minus = partitions::generate_table(partitions::PartSet::minus(p), n_max);
  const unsigned shown = std::min(digits, 30u);

  std::optional<std::size_t> last_bad;
  for (std::size_t n = 0; n <= n_max; ++n)
    if (!(excl.coeffs[n] < minus.coeffs[n])) last_bad = n;

  Report report;
  report.command = "appendix-excl1";
  Table& t = report.table("excluded_one", {"n", "p_1plus", "p_minus", "scaled_ratio", "scaled_over_c3"});
  for (std::size_t n : checkpoints(n_max)) {
    if (minus.coeffs[n] == 0) continue;
    Real scaled = sqrt(Real(n)) * ratio_real(excl.coeffs[n], minus.coeffs[n]);
    t.add({n, excl.coeffs[n].get_str(), minus.coeffs[n].get_str(), num(scaled, shown),
           num(scaled / md.excl1->c3, 12)});
  }
  report.note("c3", num(md.excl1->c3, shown));
  report.note("exponent_excl1", md.excl1->exponent_power.get_str());
  report.note("exponent_minus", md.exponent_power.get_str());
  report.note("inequality_threshold",
              last_bad ? Cell(static_cast<std::int64_t>(*last_bad)) : Cell(static_cast<std::int64_t>(-1)));
  return report;
}

Report run(const ExperimentConfig& c) {
  c.validate();
  Report report;
  switch (c.command) {
    case Command::invariants: report = run_invariants(c.p, c.digits); break;
    case Command::series: report = run_series(c.p, c.set, c.n_max, c.k); break;
    case Command::scan_conjecture: report = run_scan(c); break;
    case Command::petersson: report = run_petersson(c.p, c.n_max, c.digits); break;
    case Command::cesaro: report = run_cesaro(c.p, c.n_max, c.digits); break;
    case Command::schur: report = run_schur(c.p, c.t_grid, c.digits, c.budget); break;
    case Command::meinardus: report = run_meinardus(c.p, c.n_list, c.digits); break;
    case Command::appendix_excl1: report = run_appendix(c.p, c.n_max, c.digits); break;
    case Command::acceptance: report = run_acceptance(c.jobs); break;
  }
  report.command = to_string(c.command);
  KeyValues header = c.header();
  header.insert(header.end(), report.header.begin(), report.header.end());
  report.header = std::move(header);
  return report;
}

}  // namespace plab::lab
