#include "plab/asymptotics.hpp"

#include "plab/error.hpp"

namespace plab::asymptotics {
namespace {

// alpha = 1 throughout, so Gamma(alpha + 1) = 1 and zeta(alpha + 1) = zeta(2).

// zeta(0); not zeta(-1) = -1/12.
const arith::ExactRational kZetaAtZero(-1, 2);

arith::ExactRational growth_exponent(const arith::ExactRational& d0) {
  // (2 D(0) - 2 - alpha) / (2 (1 + alpha))
  arith::ExactRational e = (2 * d0 - 3) / 4;
  e.canonicalize();
  return e;
}

Real main_term_constant(const Real& dp, const arith::ExactRational& d0, const Real& a_zeta) {
  // e^{D'(0)} (2 pi (1 + alpha))^{-1/2} (A zeta(2))^{(1 - 2 D(0)) / (2 (1 + alpha))}
  arith::ExactRational power = (1 - 2 * d0) / 4;
  power.canonicalize();
  return exp(dp) / sqrt(4 * pi()) * pow(a_zeta, to_real(power));
}

// L(0, chi) = -B_{1,chi} = -(1/p) sum_{a=1}^{p} chi(a) a, exactly.
arith::ExactRational l_at_zero(std::uint64_t p) {
  mpz_class sum = 0;
  for (std::uint64_t a = 1; a < p; ++a) {
    int c = arith::chi(p, static_cast<std::int64_t>(a));
    if (c > 0)
      sum += static_cast<unsigned long>(a);
    else if (c < 0)
      sum -= static_cast<unsigned long>(a);
  }
  arith::ExactRational v(-sum, static_cast<unsigned long>(p));
  v.canonicalize();
  return v;
}

}  // namespace

Real zeta2() { return pi() * pi() / 6; }

MeinardusData build_meinardus(const quadfield::Invariants& inv) {
  arith::require_admissible(inv.p);
  if (inv.h < 1 || inv.regulator <= 0 || inv.l1 <= 0) throw DomainError("field invariants are inconsistent");
  DigitsScope scope(inv.digits);
  MeinardusData md;
  md.p = inv.p;
  md.digits = inv.digits;
  md.alpha = 1;
  // D_+- has a simple pole at s = 1 with residue (1/2)(1 - 1/p): half the
  // residue of zeta(s)(1 - p^{-s}).
  md.residue_a = (1 - Real(1) / Real(inv.p)) / 2;

  // D_+-(0) = (1/2)(zeta(0)(1 - p^0) +- L(0,chi)); the zeta term is zero.
  const arith::ExactRational l0 = l_at_zero(inv.p);
  arith::ExactRational d0_plus = l0 / 2, d0_minus = -l0 / 2;
  d0_plus.canonicalize();
  d0_minus.canonicalize();
  if (d0_plus != d0_minus) throw ConsistencyError("D_+(0) and D_-(0) differ; chi is not even");
  md.d0_plus = to_real(d0_plus);
  md.d0_minus = to_real(d0_minus);

  // D_+-'(0) = (1/2) zeta(0) log p +- (1/2) L'(0,chi) = -(log p)/4 +- (1/2) L'(0,chi),
  // with L'(0,chi) = (sqrt p / 2) L(1,chi).
  const Real half_lprime = sqrt(Real(inv.p)) / 4 * inv.l1;
  const Real zeta_term = to_real(kZetaAtZero) * log(Real(inv.p)) / 2;
  md.dp_plus = zeta_term + half_lprime;
  md.dp_minus = zeta_term - half_lprime;

  const Real a_zeta = md.residue_a * zeta2();
  md.c_plus = main_term_constant(md.dp_plus, d0_plus, a_zeta);
  md.c_minus = main_term_constant(md.dp_minus, d0_minus, a_zeta);
  md.exponent_power = growth_exponent(d0_plus);
  md.h_log_eps = Real(inv.h) * inv.regulator;
  return md;
}

MeinardusData build_excluded_one(MeinardusData md) {
  DigitsScope scope(md.digits);
  // D_{1,+}(s) = D_+(s) - 1: the value drops by one, the derivative is unchanged.
  if (md.d0_plus != 0) throw ConsistencyError("D_+(0) expected to vanish");
  const arith::ExactRational d0 = -1;
  ExcludedOne ex;
  ex.d0 = to_real(d0);
  ex.exponent_power = growth_exponent(d0);
  ex.dp = md.dp_plus;
  ex.c_1plus = main_term_constant(ex.dp, d0, md.residue_a * zeta2());
  ex.c3 = ex.c_1plus / md.c_minus;
  md.excl1 = std::move(ex);
  return md;
}

namespace {

Prediction assemble(const MeinardusData& md, const Real& c, const arith::ExactRational& power,
                    std::uint64_t n) {
  if (n < 1) throw DomainError("prediction needs n >= 1");
  DigitsScope scope(md.digits);
  Prediction out;
  out.n = n;
  const Real nn(n);
  out.log_main_term = log(c) + to_real(power) * log(nn) + 2 * sqrt(md.residue_a * zeta2() * nn);
  return out;
}

}  // namespace

Prediction predict(const MeinardusData& md, Sign sign, std::uint64_t n) {
  return assemble(md, sign == Sign::plus ? md.c_plus : md.c_minus, md.exponent_power, n);
}

Prediction predict_excluded_one(const MeinardusData& md, std::uint64_t n) {
  if (!md.excl1) throw DomainError("excluded-one block not built");
  return assemble(md, md.excl1->c_1plus, md.excl1->exponent_power, n);
}

}  // namespace plab::asymptotics
