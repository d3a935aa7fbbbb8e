#pragma once

#include <stdexcept>
#include <string>

#include "primezeta/real.hpp"

namespace primezeta {

/// Precision and tolerance regime shared by every evaluation.
///
/// All fields are derived deterministically from `digits` by make_context;
/// the struct is immutable after construction and freely shareable.
struct NumericContext {
  int digits;              ///< working precision in significant decimal digits
  mpfr_prec_t prec;        ///< mantissa bits: ceil(digits * 3.33) + 32 guard bits
  Real eps_eval;           ///< absolute tolerance certified by evaluations
  Real eps_root;           ///< residual tolerance for root finding
  Real eps_work;           ///< internal full-precision target, 10^-(digits+2)
  int max_quad_level;      ///< cap on quadrature refinement levels
  int max_moebius_terms;   ///< cap on Moebius-series truncation
  int zeta_em_nodes;       ///< direct terms in Euler-Maclaurin zeta
  int zeta_em_bernoulli;   ///< cap on Bernoulli correction terms
};

/// Build a context for the given number of working decimal digits.
///
/// digits < 15 is rejected: double-width arithmetic cannot certify the
/// default 13-digit evaluation tolerance with any safety margin.
inline NumericContext make_context(int digits) {
  if (digits < 15) {
    throw std::domain_error("make_context: digits must be >= 15, got " + std::to_string(digits));
  }
  NumericContext ctx{
      .digits = digits,
      .prec = static_cast<mpfr_prec_t>((digits * 333 + 99) / 100 + 32),
      .eps_eval = Real(MPFR_PREC_MIN),
      .eps_root = Real(MPFR_PREC_MIN),
      .eps_work = Real(MPFR_PREC_MIN),
      .max_quad_level = 12,
      .max_moebius_terms = 256,
      .zeta_em_nodes = std::max(20, (3 * digits + 1) / 2),
      .zeta_em_bernoulli = std::max(24, digits),
  };
  ctx.eps_eval = Real::pow10(-std::max(8, digits - 17), ctx.prec);
  ctx.eps_root = Real::pow10(-std::max(6, digits - 20), ctx.prec);
  ctx.eps_work = Real::pow10(-(digits + 2), ctx.prec);
  return ctx;
}

/// Round-half-even decimal string with exactly `places` fractional digits.
inline std::string round_for_display(const Real& x, int places) {
  if (places < 0) throw std::domain_error("round_for_display: places must be >= 0");
  return format_fixed(x, places);
}

}  // namespace primezeta
