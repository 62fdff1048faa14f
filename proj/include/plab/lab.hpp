#pragma once

#include "plab/partitions.hpp"
#include "plab/report.hpp"

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

// Experiment orchestration: each command builds a self-describing Report.
namespace plab::lab {

inline constexpr const char* kVersion = "1.0.0";

enum class Command {
  invariants,
  series,
  scan_conjecture,
  petersson,
  cesaro,
  schur,
  meinardus,
  appendix_excl1,
  acceptance,
};

std::string to_string(Command c);
std::optional<Command> parse_command(const std::string& name);

enum class SetKind { plus, minus, plus_excl1, classical };

std::string to_string(SetKind s);
std::optional<SetKind> parse_set(const std::string& name);
partitions::PartSet make_set(SetKind kind, std::uint64_t p);

struct ExperimentConfig {
  Command command = Command::invariants;
  std::uint64_t p = 5;
  std::uint64_t p_max = 97;
  std::size_t n_max = 10000;
  SetKind set = SetKind::plus;
  int k = 0;
  int k_min = -3;
  int k_max = 3;
  std::vector<std::string> t_grid{"0.2", "0.1", "0.05"};
  std::vector<std::uint64_t> n_list{1000, 5000, 10000};
  bool classical = true;  // scan-conjecture: include the classical p(n)
  unsigned digits = 64;
  unsigned jobs = 1;
  double budget = 2e10;  // big-integer additions
  std::string checkpoint_dir;

  /// Throws DomainError naming the first invalid field.
  void validate() const;
  KeyValues header() const;
};

/// Validates, dispatches, and returns the report. Domain and precision
/// failures propagate as exceptions.
Report run(const ExperimentConfig& config);

Report run_invariants(std::uint64_t p, unsigned digits);
Report run_series(std::uint64_t p, SetKind set, std::size_t n_max, int k);
Report run_petersson(std::uint64_t p, std::size_t n_max, unsigned digits);
Report run_cesaro(std::uint64_t p, std::size_t n_max, unsigned digits);
Report run_scan(const ExperimentConfig& config);
/// Refuses with PrecisionError when the certified series order would cost
/// more than `budget` big-integer additions.
Report run_schur(std::uint64_t p, const std::vector<std::string>& t_grid, unsigned digits, double budget = 2e10);
Report run_meinardus(std::uint64_t p, const std::vector<std::uint64_t>& n_list, unsigned digits);
Report run_appendix(std::uint64_t p, std::size_t n_max, unsigned digits);

/// Estimated big-integer additions for a scan: sum over jobs of parts * N.
double scan_cost(const ExperimentConfig& config);

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  std::chrono::duration<double> elapsed{};
  double time_limit_s = 0;  // 0: none
};

using CriterionObserver = std::function<void(const CriterionResult&)>;

/// Runs every acceptance criterion except the rerun-determinism check,
/// which needs two full runs and lives with the callers.
std::vector<CriterionResult> run_acceptance_criteria(unsigned jobs, const CriterionObserver& observer = {});

/// Report over run_acceptance_criteria; timings are excluded so reruns are
/// byte-identical.
Report run_acceptance(unsigned jobs, const CriterionObserver& observer = {});

}  // namespace plab::lab
