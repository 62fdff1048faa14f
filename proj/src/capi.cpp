#include "plab/plab.h"

#include "plab/arith.hpp"
#include "plab/error.hpp"
#include "plab/lab.hpp"
#include "plab/partitions.hpp"
#include "plab/qseries.hpp"
#include "plab/quadfield.hpp"

#include <array>
#include <cstring>
#include <fstream>
#include <map>
#include <memory>
#include <optional>

struct plab_field {
  plab::quadfield::Invariants inv;
  std::map<std::string, std::string> values;
};

struct plab_table {
  plab::partitions::PartitionTable table;
  plab::partitions::DiffTable diff;
};

struct plab_report {
  plab::lab::Report report;
  std::array<std::optional<std::string>, 2> rendered;
};

namespace {

thread_local std::string last_error;

plab_status fail(plab_status status, const std::string& message) {
  last_error = message;
  return status;
}

template <class F>
plab_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const plab::UndefinedRatio& e) {
    return fail(PLAB_E_UNDEFINED, e.what());
  } catch (const plab::BudgetError& e) {
    return fail(PLAB_E_BUDGET, e.what());
  } catch (const plab::DomainError& e) {
    return fail(PLAB_E_USAGE, e.what());
  } catch (const plab::PrecisionError& e) {
    return fail(PLAB_E_PRECISION, e.what());
  } catch (const std::bad_alloc&) {
    return fail(PLAB_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(PLAB_E_INTERNAL, e.what());
  } catch (...) {
    return fail(PLAB_E_INTERNAL, "unknown failure");
  }
}

plab_status write_text(const std::string& text, char* buf, std::size_t cap, std::size_t* needed) {
  if (needed) *needed = text.size();
  if (!buf || cap < text.size() + 1)
    return fail(PLAB_E_BUFFER, "buffer holds " + std::to_string(cap) + " bytes, " +
                                   std::to_string(text.size() + 1) + " needed");
  std::memcpy(buf, text.data(), text.size());
  buf[text.size()] = '\0';
  return PLAB_OK;
}

plab_status null_argument(const char* name) { return fail(PLAB_E_USAGE, std::string(name) + " is null"); }

plab::lab::SetKind to_set(plab_set_kind s) {
  switch (s) {
    case PLAB_SET_PLUS: return plab::lab::SetKind::plus;
    case PLAB_SET_MINUS: return plab::lab::SetKind::minus;
    case PLAB_SET_PLUS_EXCL1: return plab::lab::SetKind::plus_excl1;
    case PLAB_SET_CLASSICAL: return plab::lab::SetKind::classical;
  }
  throw plab::DomainError("unknown set kind");
}

plab::lab::Command to_command(plab_command c) {
  if (c < PLAB_CMD_INVARIANTS || c > PLAB_CMD_ACCEPTANCE) throw plab::DomainError("unknown command");
  return static_cast<plab::lab::Command>(c);
}

}  // namespace

extern "C" {

const char* plab_version(void) { return plab::lab::kVersion; }

const char* plab_last_error(void) { return last_error.c_str(); }

int plab_is_admissible_prime(uint64_t p, int* above_five) {
  auto a = plab::arith::is_admissible_prime(p);
  if (above_five) *above_five = a.above_five ? 1 : 0;
  return a.admissible ? 1 : 0;
}

int plab_chi(uint64_t p, int64_t n) { return plab::arith::chi(p, n); }

plab_status plab_cusp_order(uint64_t p, char* buf, size_t cap, size_t* needed) {
  return guarded([&] {
    plab::arith::require_admissible(p);
    return write_text(plab::arith::cusp_order(p).get_str(), buf, cap, needed);
  });
}

plab_status plab_field_create(uint64_t p, unsigned digits, plab_field** out) {
  if (!out) return null_argument("out");
  return guarded([&] {
    plab::arith::require_admissible(p);
    if (digits < 20 || digits > 4000) throw plab::DomainError("digits must lie in [20, 4000]");
    plab::DigitsScope scope(digits);
    auto field = std::make_unique<plab_field>();
    field->inv = plab::quadfield::compute_invariants(p, digits);
    const auto& inv = field->inv;
    auto& v = field->values;
    v["t"] = inv.unit.t.get_str();
    v["u"] = inv.unit.u.get_str();
    v["norm"] = std::to_string(inv.unit.norm_sign);
    v["epsilon"] = plab::format_real(inv.epsilon, digits);
    v["regulator"] = plab::format_real(inv.regulator, digits);
    v["h"] = std::to_string(inv.h);
    v["h_forms"] = std::to_string(inv.h_forms);
    v["l1"] = plab::format_real(inv.l1, digits);
    v["gauss_re"] = plab::format_real(inv.gauss.re, digits);
    v["gauss_im"] = plab::format_real(inv.gauss.im, digits);
    v["cusp_order"] = plab::arith::cusp_order(p).get_str();
    *out = field.release();
    return PLAB_OK;
  });
}

void plab_field_destroy(plab_field* field) { delete field; }

plab_status plab_field_get(const plab_field* field, const char* key, char* buf, size_t cap, size_t* needed) {
  if (!field) return null_argument("field");
  if (!key) return null_argument("key");
  auto it = field->values.find(key);
  if (it == field->values.end()) return fail(PLAB_E_USAGE, std::string("unknown key '") + key + "'");
  return guarded([&] { return write_text(it->second, buf, cap, needed); });
}

long plab_field_class_number(const plab_field* field) { return field ? field->inv.h : 0; }

plab_status plab_table_create(plab_set_kind set, uint64_t p, size_t n_max, plab_table** out) {
  if (!out) return null_argument("out");
  return guarded([&] {
    auto kind = to_set(set);
    if (kind != plab::lab::SetKind::classical) plab::arith::require_admissible(p);
    if (n_max > 1000000) throw plab::DomainError("n_max exceeds 1000000");
    auto t = std::make_unique<plab_table>();
    t->table = plab::partitions::generate_table(plab::lab::make_set(kind, p), n_max);
    t->diff = plab::partitions::diff_table(t->table, 0);
    *out = t.release();
    return PLAB_OK;
  });
}

plab_status plab_table_diff(const plab_table* table, int k, plab_table** out) {
  if (!table) return null_argument("table");
  if (!out) return null_argument("out");
  return guarded([&] {
    auto t = std::make_unique<plab_table>();
    t->table = table->table;
    t->diff = plab::partitions::diff_table(table->table, k);
    *out = t.release();
    return PLAB_OK;
  });
}

void plab_table_destroy(plab_table* table) { delete table; }

size_t plab_table_order(const plab_table* table) { return table ? table->table.order() : 0; }

int plab_table_k(const plab_table* table) { return table ? table->diff.k : 0; }

plab_status plab_table_coeff(const plab_table* table, size_t n, char* buf, size_t cap, size_t* needed) {
  if (!table) return null_argument("table");
  if (n >= table->diff.values.size())
    return fail(PLAB_E_USAGE, "index " + std::to_string(n) + " beyond table order");
  return guarded([&] { return write_text(table->diff.values[n].get_str(), buf, cap, needed); });
}

plab_status plab_table_rho(const plab_table* dk, const plab_table* dk1, size_t n, char* buf, size_t cap,
                           size_t* needed) {
  if (!dk || !dk1) return null_argument("table");
  return guarded([&] {
    return write_text(plab::partitions::rho(dk->diff, dk1->diff, n).get_str(), buf, cap, needed);
  });
}

plab_status plab_table_export_csv(const plab_table* table, const char* path) {
  if (!table) return null_argument("table");
  if (!path) return null_argument("path");
  return guarded([&] {
    std::ofstream out(path);
    if (!out) throw plab::DomainError(std::string("cannot open ") + path);
    out << plab::partitions::to_csv(table->diff.values);
    if (!out) throw plab::DomainError(std::string("cannot write ") + path);
    return PLAB_OK;
  });
}

plab_status plab_table_scan(const plab_table* table, plab_scan_result* out) {
  if (!table) return null_argument("table");
  if (!out) return null_argument("out");
  return guarded([&] {
    auto rep = plab::partitions::monotonicity_scan(table->diff);
    out->last_violation = rep.last_violation ? static_cast<int64_t>(*rep.last_violation) : -1;
    out->violation_count = rep.violation_count;
    out->undefined_count = rep.undefined.size();
    return PLAB_OK;
  });
}

plab_status plab_u_breve(uint64_t p, const char* t, unsigned digits, char* value, size_t cap, char* bound,
                         size_t bound_cap) {
  if (!t) return null_argument("t");
  return guarded([&] {
    plab::arith::require_admissible(p);
    if (digits < 20 || digits > 4000) throw plab::DomainError("digits must lie in [20, 4000]");
    plab::DigitsScope scope(digits);
    auto ev = plab::qseries::u_breve(p, plab::qseries::QPoint::from_t(std::string(t), digits));
    std::string v = plab::format_real(ev.value, digits);
    std::string b = plab::format_real(ev.bound, 6);
    if (!value || cap < v.size() + 1 || (bound && bound_cap < b.size() + 1))
      return fail(PLAB_E_BUFFER, "output buffer too small");
    write_text(v, value, cap, nullptr);
    if (bound) write_text(b, bound, bound_cap, nullptr);
    return PLAB_OK;
  });
}

plab_status plab_rr_cf(const char* t, size_t depth, unsigned digits, char* value, size_t cap) {
  if (!t) return null_argument("t");
  return guarded([&] {
    if (depth < 1) throw plab::DomainError("depth must be at least 1");
    if (digits < 20 || digits > 4000) throw plab::DomainError("digits must lie in [20, 4000]");
    plab::DigitsScope scope(digits);
    auto cf = plab::qseries::rr_cf(plab::qseries::QPoint::from_t(std::string(t), digits), depth);
    return write_text(plab::format_real(cf.value, digits), value, cap, nullptr);
  });
}

void plab_config_init(plab_config* config, plab_command command) {
  if (!config) return;
  plab::lab::ExperimentConfig d;
  config->command = command;
  config->p = d.p;
  config->p_max = d.p_max;
  config->n_max = d.n_max;
  config->set = PLAB_SET_PLUS;
  config->k = d.k;
  config->k_min = d.k_min;
  config->k_max = d.k_max;
  config->t_values = nullptr;
  config->t_count = 0;
  config->n_values = nullptr;
  config->n_count = 0;
  config->classical = d.classical ? 1 : 0;
  config->digits = d.digits;
  config->jobs = d.jobs;
  config->budget = d.budget;
  config->checkpoint_dir = nullptr;
}

plab_status plab_command_from_name(const char* name, plab_command* out) {
  if (!name) return null_argument("name");
  if (!out) return null_argument("out");
  auto c = plab::lab::parse_command(name);
  if (!c) return fail(PLAB_E_USAGE, std::string("unknown command '") + name + "'");
  *out = static_cast<plab_command>(*c);
  return PLAB_OK;
}

plab_status plab_run(const plab_config* config, plab_report** out) {
  if (!config) return null_argument("config");
  if (!out) return null_argument("out");
  return guarded([&] {
    plab::lab::ExperimentConfig c;
    c.command = to_command(config->command);
    c.p = config->p;
    c.p_max = config->p_max;
    c.n_max = config->n_max;
    c.set = to_set(config->set);
    c.k = config->k;
    c.k_min = config->k_min;
    c.k_max = config->k_max;
    if (config->t_values) {
      c.t_grid.clear();
      for (size_t i = 0; i < config->t_count; ++i) {
        if (!config->t_values[i]) throw plab::DomainError("t value is null");
        c.t_grid.emplace_back(config->t_values[i]);
      }
    }
    if (config->n_values) c.n_list.assign(config->n_values, config->n_values + config->n_count);
    c.classical = config->classical != 0;
    c.digits = config->digits;
    c.jobs = config->jobs;
    c.budget = config->budget;
    if (config->checkpoint_dir) c.checkpoint_dir = config->checkpoint_dir;
    auto r = std::make_unique<plab_report>();
    r->report = plab::lab::run(c);
    bool failed = c.command == plab::lab::Command::acceptance && !r->report.passed;
    *out = r.release();
    return failed ? fail(PLAB_E_ACCEPTANCE, "acceptance criteria failed") : PLAB_OK;
  });
}

plab_status plab_report_render(const plab_report* report, plab_format format, char* buf, size_t cap,
                               size_t* needed) {
  if (!report) return null_argument("report");
  if (format != PLAB_FORMAT_CSV && format != PLAB_FORMAT_JSON) return fail(PLAB_E_USAGE, "unknown format");
  return guarded([&] {
    auto& slot = const_cast<plab_report*>(report)->rendered[format];
    if (!slot)
      slot = report->report.render(format == PLAB_FORMAT_CSV ? plab::lab::Format::csv : plab::lab::Format::json);
    return write_text(*slot, buf, cap, needed);
  });
}

int plab_report_passed(const plab_report* report) { return report && report->report.passed ? 1 : 0; }

void plab_report_destroy(plab_report* report) { delete report; }

}  // extern "C"
