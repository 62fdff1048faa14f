#pragma once

#include "plab/arith.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace plab::partitions {

/// Allowed parts. A positive integer m is a part iff m >= min_part,
/// m is not excluded, and (for residue sets) m mod modulus is allowed.
class PartSet {
 public:
  enum class Kind { plus, minus, plus_excl1, classical, custom };

  /// Quadratic residues mod p.
  static PartSet plus(std::uint64_t p);
  /// Quadratic non-residues mod p.
  static PartSet minus(std::uint64_t p);
  /// Quadratic residues mod p, excluding the part 1.
  static PartSet plus_excluding_one(std::uint64_t p);
  /// All positive integers.
  static PartSet classical();
  /// Residue classes mod `modulus`; `modulus == 0` means no residue filter.
  static PartSet custom(std::uint64_t modulus, std::vector<std::uint64_t> residues,
                        std::set<std::uint64_t> excluded = {}, std::uint64_t min_part = 1);

  bool contains(std::uint64_t m) const;
  /// Parts in increasing order up to and including `limit`.
  std::vector<std::uint64_t> parts_up_to(std::uint64_t limit) const;
  /// The first `count` parts.
  std::vector<std::uint64_t> first_parts(std::size_t count) const;

  Kind kind() const { return kind_; }
  std::uint64_t modulus() const { return modulus_; }
  std::string name() const;

 private:
  Kind kind_ = Kind::classical;
  std::uint64_t modulus_ = 0;
  std::vector<bool> allowed_;  // indexed by residue, empty when modulus_ == 0
  std::set<std::uint64_t> excluded_;
  std::uint64_t min_part_ = 1;
};

struct PartitionTable {
  PartSet pset;
  std::vector<mpz_class> coeffs;  // coeffs[n] = p_A(n), n = 0..N

  std::size_t order() const { return coeffs.size() - 1; }
};

/// Coefficients of prod_{a in A, a <= N} 1/(1 - X^a) up to X^N.
PartitionTable generate_table(const PartSet& pset, std::size_t n_max);

inline constexpr std::size_t kBruteForceLimit = 60;

/// Recursive enumeration of non-increasing part sequences. Test oracle only;
/// throws BudgetError for n > kBruteForceLimit.
mpz_class brute_force_count(const PartSet& pset, std::size_t n);

/// True iff (sum coeffs[n] X^n) * prod_{a<=N} (1 - X^a) == 1 mod X^{N+1}.
bool verify_inverse_identity(const PartitionTable& table);

inline constexpr int kMaxDiffOrder = 16;

struct DiffTable {
  int k = 0;
  std::vector<mpz_class> values;  // p^(k)(0..N)
};

/// k > 0: k-fold forward difference (p(n) = 0 for n < 0).
/// k < 0: |k|-fold prefix sums. Throws DomainError if |k| > bound.
DiffTable diff_table(const PartitionTable& table, int k, int bound = kMaxDiffOrder);

/// One forward difference of an arbitrary sequence.
std::vector<mpz_class> forward_difference(const std::vector<mpz_class>& values);

/// rho^(k)(n) = p^(k+1)(n) / p^(k)(n). Throws UndefinedRatio when p^(k)(n) = 0.
arith::ExactRational rho(const DiffTable& dk, const DiffTable& dk1, std::size_t n);

struct ScanReport {
  int k = 0;
  std::size_t n_max = 0;
  std::optional<std::size_t> last_violation;  // largest n with rho(n) <= rho(n+1)
  std::size_t violation_count = 0;
  std::vector<std::size_t> undefined;  // n <= N with p^(k)(n) = 0
};

/// Strict-decrease scan of rho^(k) over 0 <= n < N, on a precomputed p^(k).
ScanReport monotonicity_scan(const DiffTable& dk);

/// Builds the table and scans. Requires N >= 2.
ScanReport monotonicity_scan(const PartSet& pset, int k, std::size_t n_max);

/// Every removal of k elements from the first `prefix_len` parts leaves a
/// set with gcd 1 (and prefix_len > k). k < 0 is trivially true.
bool has_property_pk(const PartSet& pset, int k, std::size_t prefix_len);

/// Decimal CSV with header "n,p(n)".
std::string to_csv(const std::vector<mpz_class>& values);

}  // namespace plab::partitions
