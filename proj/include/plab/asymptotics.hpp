#pragma once

#include "plab/arith.hpp"
#include "plab/quadfield.hpp"
#include "plab/real.hpp"

#include <cstdint>
#include <optional>

// Meinardus main terms for p_+(n), p_-(n) and the excluded-one variant.
namespace plab::asymptotics {

enum class Sign { plus, minus };

struct ExcludedOne {
  Real d0;                             // D_{1,+}(0) = -1
  arith::ExactRational exponent_power; // -5/4
  Real dp;                             // D_{1,+}'(0) = D_+'(0)
  Real c_1plus;
  Real c3;                             // C_{1,+} / C_-
};

struct MeinardusData {
  std::uint64_t p = 0;
  unsigned digits = kDefaultDigits;
  Real alpha;      // 1
  Real residue_a;  // residue of D_+- at s = 1: (1 - 1/p)/2
  Real d0_plus;    // 0
  Real d0_minus;   // 0
  Real dp_plus;
  Real dp_minus;
  Real c_plus;
  Real c_minus;
  arith::ExactRational exponent_power;  // -3/4
  Real h_log_eps;                       // h * regulator, carried for cross-checks
  std::optional<ExcludedOne> excl1;
};

/// Main-term constants from the field invariants. D'(0) uses the L(1,chi)
/// route: D_+-'(0) = -(log p)/4 +- (sqrt p/4) L(1,chi).
MeinardusData build_meinardus(const quadfield::Invariants& inv);

/// Adds the excluded-one block (parts > 1 that are quadratic residues).
MeinardusData build_excluded_one(MeinardusData md);

struct Prediction {
  std::uint64_t n = 0;
  Real log_main_term;
};

/// log C + exponent * log n + 2 sqrt(A zeta(2) n). Requires n >= 1.
Prediction predict(const MeinardusData& md, Sign sign, std::uint64_t n);

/// Same with the excluded-one constants. Requires md.excl1.
Prediction predict_excluded_one(const MeinardusData& md, std::uint64_t n);

/// pi^2/6
Real zeta2();

}  // namespace plab::asymptotics
