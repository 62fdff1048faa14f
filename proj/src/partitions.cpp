#include "plab/partitions.hpp"

#include "plab/error.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace plab::partitions {
namespace {

PartSet residue_set(std::uint64_t p, int sign, std::set<std::uint64_t> excluded) {
  arith::require_admissible(p);
  std::vector<std::uint64_t> residues;
  for (std::uint64_t r = 1; r < p; ++r)
    if (arith::chi(p, static_cast<std::int64_t>(r)) == sign) residues.push_back(r);
  PartSet s = PartSet::custom(p, std::move(residues), std::move(excluded));
  return s;
}

}  // namespace

PartSet PartSet::plus(std::uint64_t p) {
  PartSet s = residue_set(p, 1, {});
  s.kind_ = Kind::plus;
  return s;
}

PartSet PartSet::minus(std::uint64_t p) {
  PartSet s = residue_set(p, -1, {});
  s.kind_ = Kind::minus;
  return s;
}

PartSet PartSet::plus_excluding_one(std::uint64_t p) {
  PartSet s = residue_set(p, 1, {1});
  s.kind_ = Kind::plus_excl1;
  return s;
}

PartSet PartSet::classical() { return PartSet{}; }

PartSet PartSet::custom(std::uint64_t modulus, std::vector<std::uint64_t> residues,
                        std::set<std::uint64_t> excluded, std::uint64_t min_part) {
  if (min_part == 0) throw DomainError("min_part must be positive");
  PartSet s;
  s.kind_ = Kind::custom;
  s.modulus_ = modulus;
  s.excluded_ = std::move(excluded);
  s.min_part_ = min_part;
  if (modulus > 0) {
    s.allowed_.assign(modulus, false);
    bool any = false;
    for (std::uint64_t r : residues) {
      if (r >= modulus) throw DomainError("residue out of range");
      s.allowed_[r] = true;
      any = true;
    }
    if (!any) throw DomainError("part set has no allowed residues");
  }
  return s;
}

bool PartSet::contains(std::uint64_t m) const {
  if (m < min_part_ || excluded_.count(m)) return false;
  return modulus_ == 0 || allowed_[m % modulus_];
}

std::vector<std::uint64_t> PartSet::parts_up_to(std::uint64_t limit) const {
  std::vector<std::uint64_t> parts;
  for (std::uint64_t m = 1; m <= limit; ++m)
    if (contains(m)) parts.push_back(m);
  return parts;
}

std::vector<std::uint64_t> PartSet::first_parts(std::size_t count) const {
  std::vector<std::uint64_t> parts;
  for (std::uint64_t m = 1; parts.size() < count; ++m)
    if (contains(m)) parts.push_back(m);
  return parts;
}

std::string PartSet::name() const {
  switch (kind_) {
    case Kind::plus: return "plus";
    case Kind::minus: return "minus";
    case Kind::plus_excl1: return "plus-excl1";
    case Kind::classical: return "classical";
    case Kind::custom: break;
  }
  return "custom";
}

PartitionTable generate_table(const PartSet& pset, std::size_t n_max) {
  PartitionTable table{pset, std::vector<mpz_class>(n_max + 1)};
  auto& c = table.coeffs;
  c[0] = 1;
  for (std::uint64_t a : pset.parts_up_to(n_max)) {
    for (std::size_t n = a; n <= n_max; ++n)
      mpz_add(c[n].get_mpz_t(), c[n].get_mpz_t(), c[n - a].get_mpz_t());
  }
  return table;
}

mpz_class brute_force_count(const PartSet& pset, std::size_t n) {
  if (n > kBruteForceLimit)
    throw BudgetError("brute-force enumeration is limited to n <= " + std::to_string(kBruteForceLimit),
                      static_cast<double>(n));
  // Walk every non-increasing sequence of allowed parts and count the ones
  // that land exactly on zero.
  std::uint64_t count = 0;
  std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t remaining, std::size_t largest) {
    if (remaining == 0) {
      ++count;
      return;
    }
    for (std::size_t part = std::min(remaining, largest); part >= 1; --part)
      if (pset.contains(part)) walk(remaining - part, part);
  };
  walk(n, n);
  return mpz_class(std::to_string(count));
}

bool verify_inverse_identity(const PartitionTable& table) {
  std::vector<mpz_class> c = table.coeffs;
  const std::size_t n_max = table.order();
  for (std::uint64_t a : table.pset.parts_up_to(n_max)) {
    for (std::size_t n = n_max; n >= a; --n) mpz_sub(c[n].get_mpz_t(), c[n].get_mpz_t(), c[n - a].get_mpz_t());
  }
  if (c[0] != 1) return false;
  return std::all_of(c.begin() + 1, c.end(), [](const mpz_class& v) { return v == 0; });
}

std::vector<mpz_class> forward_difference(const std::vector<mpz_class>& values) {
  std::vector<mpz_class> out(values.size());
  for (std::size_t n = 0; n < values.size(); ++n) out[n] = n == 0 ? values[0] : values[n] - values[n - 1];
  return out;
}

DiffTable diff_table(const PartitionTable& table, int k, int bound) {
  if (k > bound || k < -bound)
    throw DomainError("difference order " + std::to_string(k) + " exceeds bound " + std::to_string(bound));
  DiffTable dt{k, table.coeffs};
  for (int i = 0; i < k; ++i) dt.values = forward_difference(dt.values);
  for (int i = 0; i < -k; ++i)
    for (std::size_t n = 1; n < dt.values.size(); ++n) dt.values[n] += dt.values[n - 1];
  return dt;
}

arith::ExactRational rho(const DiffTable& dk, const DiffTable& dk1, std::size_t n) {
  if (dk1.k != dk.k + 1) throw DomainError("rho needs tables of orders k and k+1");
  if (n >= dk.values.size() || n >= dk1.values.size()) throw DomainError("index beyond table order");
  if (dk.values[n] == 0) throw UndefinedRatio(static_cast<long long>(n));
  arith::ExactRational r(dk1.values[n], dk.values[n]);
  r.canonicalize();
  return r;
}

ScanReport monotonicity_scan(const DiffTable& dk) {
  const auto& a = dk.values;
  if (a.size() < 3) throw DomainError("scan needs N >= 2");
  ScanReport report;
  report.k = dk.k;
  report.n_max = a.size() - 1;
  for (std::size_t n = 0; n < a.size(); ++n)
    if (a[n] == 0) report.undefined.push_back(n);

  const mpz_class zero = 0;
  mpz_class lhs, rhs;
  for (std::size_t n = 0; n + 1 < a.size(); ++n) {
    const mpz_class& prev = n == 0 ? zero : a[n - 1];
    const mpz_class& cur = a[n];
    const mpz_class& nxt = a[n + 1];
    if (cur == 0 || nxt == 0) continue;
    bool decreasing;
    if (sgn(cur) > 0 && sgn(nxt) > 0) {
      // rho(n) > rho(n+1)  <=>  a_n^2 - a_{n-1} a_{n+1} > 0
      mpz_mul(lhs.get_mpz_t(), cur.get_mpz_t(), cur.get_mpz_t());
      mpz_mul(rhs.get_mpz_t(), prev.get_mpz_t(), nxt.get_mpz_t());
      decreasing = lhs > rhs;
    } else {
      arith::ExactRational r0 = 1 - arith::ExactRational(prev, cur);
      arith::ExactRational r1 = 1 - arith::ExactRational(cur, nxt);
      r0.canonicalize();
      r1.canonicalize();
      decreasing = r0 > r1;
    }
    if (!decreasing) {
      ++report.violation_count;
      report.last_violation = n;
    }
  }
  return report;
}

ScanReport monotonicity_scan(const PartSet& pset, int k, std::size_t n_max) {
  if (n_max < 2) throw DomainError("scan needs N >= 2");
  return monotonicity_scan(diff_table(generate_table(pset, n_max), k));
}

bool has_property_pk(const PartSet& pset, int k, std::size_t prefix_len) {
  if (k < 0) return true;
  if (prefix_len < static_cast<std::size_t>(k) + 2)
    throw DomainError("prefix must hold at least k + 2 parts");
  std::vector<std::uint64_t> parts = pset.first_parts(prefix_len);
  // Removing k parts leaves gcd > 1 iff some prime divides all but at most
  // k parts. Only primes dividing a part can do that.
  std::set<std::uint64_t> primes;
  for (std::uint64_t a : parts) {
    std::uint64_t x = a;
    for (std::uint64_t q = 2; q * q <= x; ++q) {
      if (x % q) continue;
      primes.insert(q);
      while (x % q == 0) x /= q;
    }
    if (x > 1) primes.insert(x);
  }
  for (std::uint64_t q : primes) {
    auto coprime = std::count_if(parts.begin(), parts.end(), [q](std::uint64_t a) { return a % q != 0; });
    if (coprime <= k) return false;
  }
  return true;
}

std::string to_csv(const std::vector<mpz_class>& values) {
  std::ostringstream os;
  os << "n,p(n)\n";
  for (std::size_t n = 0; n < values.size(); ++n) os << n << ',' << values[n].get_str() << '\n';
  return os.str();
}

}  // namespace plab::partitions
