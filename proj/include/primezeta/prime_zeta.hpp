#pragma once

#include <optional>
#include <stdexcept>

#include "primezeta/special_functions.hpp"

namespace primezeta {

/// An evaluation of the prime zeta function P(s) = sum_p p^-s, and
/// optionally its derivative, with a conservative absolute error bound.
struct PrimeZetaEval {
  Real s;
  Real value;
  std::optional<Real> derivative;
  Real err_bound;
  long terms_used = 0;
};

namespace detail {

inline const std::vector<int8_t>& moebius_table() {
  static const std::vector<int8_t> mu = moebius_upto(1024);
  return mu;
}

/// Moebius-series truncation point: |log zeta(ms)| decays like 2^-ms, so
/// M = ceil((log2(1/eps) + 4)/s) + 4 makes the tail majorant negligible.
inline int moebius_cutoff(double s_d, const NumericContext& ctx) {
  double bits = (ctx.digits + 2) * 3.3219280948873623 + 4.0;
  int m = static_cast<int>(std::ceil(bits / s_d)) + 4;
  if (m < 1) m = 1;
  if (m > ctx.max_moebius_terms) m = ctx.max_moebius_terms;
  return m;
}

/// P(1 + eps) via P(s) = sum_m mu(m)/m log zeta(ms), with the derivative
/// P'(s) = sum_m mu(m) zeta'(ms)/zeta(ms) sharing the loop.
inline PrimeZetaEval prime_zeta_core(const Real& eps, bool want_deriv, const NumericContext& ctx) {
  if (!(eps > 0)) throw std::domain_error("prime_zeta: argument must satisfy s > 1");
  const mpfr_prec_t p = ctx.prec;
  const double s_d = 1.0 + eps.to_double();
  const int m_cut = moebius_cutoff(s_d, ctx);
  const auto& mu = moebius_table();

  PrimeZetaEval out{eps + 1, Real::of(0L, p), std::nullopt, Real::of(0L, p), 0};
  Real acc = Real::of(0L, p);
  Real dacc = Real::of(0L, p);
  Real err = Real::of(0L, p);
  Real derr = Real::of(0L, p);

  const double log10_cut = -(ctx.digits + 5);
  int m_stop = m_cut;
  for (int m = 1; m <= m_cut; ++m) {
    if (m > 1 && -0.30103 * m * s_d < log10_cut) {  // 2^-ms below working target
      m_stop = m - 1;
      break;
    }
    m_stop = m;
    if (mu[static_cast<size_t>(m)] == 0) continue;
    // Argument m*s = m + m*eps, passed in shifted form: no cancellation.
    Real eps_m = (m == 1) ? eps : Real::of(m - 1, p) + eps * m;
    auto z = zeta_em_core(eps_m, want_deriv, ctx);
    Real lz = log(z.value);
    if (mu[static_cast<size_t>(m)] > 0) {
      acc += lz / m;
    } else {
      acc -= lz / m;
    }
    err += z.err / (z.value * m);
    if (want_deriv) {
      Real ratio = z.dvalue / z.value;
      if (mu[static_cast<size_t>(m)] > 0) {
        dacc += ratio;
      } else {
        dacc -= ratio;
      }
      derr += (z.derr + abs(ratio) * z.err) / z.value;
    }
    ++out.terms_used;
  }

  // Tail majorants from |log zeta(sigma)| <= 2^{1-sigma} and
  // |zeta'(sigma)/zeta(sigma)| <= 8 * 2^-sigma, valid for sigma >= 2.
  {
    Real s = eps + 1;
    Real two_ms = exp(Real::of(m_stop + 1, p) * s * log(Real::of(2L, p)));
    Real geom = 1 - exp(-(s * log(Real::of(2L, p))));
    err += 2 / (two_ms * geom * (m_stop + 1));
    if (want_deriv) derr += 8 / (two_ms * geom);
  }

  out.value = acc;
  out.err_bound = err + abs(acc) * Real::pow10(-(ctx.digits + 6), p);
  if (want_deriv) {
    out.derivative = dacc;
    out.err_bound += derr;
  }
  return out;
}

}  // namespace detail

/// P(s) for s > 1 to certified tolerance.
inline PrimeZetaEval prime_zeta(const Real& s, const NumericContext& ctx) {
  auto r = detail::prime_zeta_core(s - 1, false, ctx);
  if (!(r.err_bound <= ctx.eps_eval)) {
    throw std::runtime_error("prime_zeta: could not certify requested tolerance");
  }
  return r;
}

/// P(1 + eps): shifted entry point for arguments very close to the pole.
inline PrimeZetaEval prime_zeta_1p(const Real& eps, const NumericContext& ctx) {
  return detail::prime_zeta_core(eps, false, ctx);
}

/// P(s) together with P'(s) = sum_m mu(m) zeta'(ms)/zeta(ms).
inline PrimeZetaEval prime_zeta_deriv(const Real& s, const NumericContext& ctx) {
  auto r = detail::prime_zeta_core(s - 1, true, ctx);
  if (!(r.err_bound <= ctx.eps_eval)) {
    throw std::runtime_error("prime_zeta_deriv: could not certify requested tolerance");
  }
  return r;
}

inline PrimeZetaEval prime_zeta_deriv_1p(const Real& eps, const NumericContext& ctx) {
  return detail::prime_zeta_core(eps, true, ctx);
}

}  // namespace primezeta
