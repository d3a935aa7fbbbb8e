#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "primezeta/translated_sums.hpp"

namespace primezeta {

/// A located root with its final sign-changing bracket.
struct RootResult {
  Real root;
  Real residual;
  Real bracket_lo;
  Real bracket_hi;
  int iterations = 0;
  bool converged = false;
};

/// One row of the crossing-constants table.
struct TableRow {
  int k;
  Real s_k;
  Real t_k;
  Real s_prime_k;
  Real sigma_k;
  Real h_k;
};

/// Per-row ordering facts. t_lt_sprime is reported, not asserted: the k = 2
/// row genuinely violates it.
struct OrderingReport {
  int k;
  bool s_lt_sigma;
  bool sigma_lt_t;
  bool t_lt_sprime;
};

/// Bracketed root finding: Illinois-damped regula falsi on a sign change.
///
/// Deterministic iteration order; stops when |g(x)| <= eps_root. The
/// bracket never widens, so the returned (lo, hi) still straddles the root.
inline RootResult find_root(const std::function<Real(const Real&)>& g, Real lo, Real hi,
                            const NumericContext& ctx) {
  const mpfr_prec_t p = ctx.prec;
  Real f_lo = g(lo);
  Real f_hi = g(hi);
  if (abs(f_lo) <= ctx.eps_root) return {lo, f_lo, lo, hi, 0, true};
  if (abs(f_hi) <= ctx.eps_root) return {hi, f_hi, lo, hi, 0, true};
  if (f_lo.sign() * f_hi.sign() >= 0) {
    throw std::invalid_argument("find_root: endpoints do not bracket a sign change");
  }
  const int max_iter = 160;
  int last_side = 0;
  for (int it = 1; it <= max_iter; ++it) {
    Real x(p);
    Real denom = f_hi - f_lo;
    if (denom.sign() == 0) {
      x = (lo + hi) / 2;
    } else {
      x = hi - f_hi * (hi - lo) / denom;
      // Keep strictly interior; fall back to bisection otherwise.
      if (!(x > lo) || !(x < hi)) x = (lo + hi) / 2;
    }
    Real fx = g(x);
    if (abs(fx) <= ctx.eps_root) {
      return {x, fx, lo, hi, it, true};
    }
    if (fx.sign() == f_lo.sign()) {
      lo = x;
      f_lo = fx;
      if (last_side == -1) f_hi /= 2;  // Illinois damping
      last_side = -1;
    } else {
      hi = x;
      f_hi = fx;
      if (last_side == 1) f_lo /= 2;
      last_side = 1;
    }
    if (hi - lo <= abs(hi) * Real::pow10(-(ctx.digits - 1), p)) {
      // Bracket collapsed to working precision without meeting the residual
      // target; report the midpoint honestly rather than looping.
      Real mid = (lo + hi) / 2;
      Real fm = g(mid);
      return {mid, fm, lo, hi, it, abs(fm) <= ctx.eps_root};
    }
  }
  throw std::runtime_error("find_root: iteration cap reached without convergence");
}

namespace detail {

/// Expand geometrically in (s - 1) from the seed until g changes sign.
/// All root families here are monotone through their root, so the sign of
/// g at the seed tells which direction to march.
inline RootResult solve_on_s(const std::function<Real(const Real&)>& g, int k,
                             const NumericContext& ctx) {
  const mpfr_prec_t p = ctx.prec;
  Real seed_off = 1 / Real::of(static_cast<long>(k) * k * k, p);
  Real x = seed_off + 1;
  Real gx = g(x);
  if (abs(gx) <= ctx.eps_root) return {x, gx, x, x, 0, true};
  const bool march_right = gx.sign() > 0;  // g decreasing through the root
  Real lo = x, hi = x, f_lo = gx, f_hi = gx;
  Real off = seed_off;
  for (int step = 0; step < 140; ++step) {
    if (march_right) {
      off *= 2;
      if (off > 2) throw std::runtime_error("root bracket expansion exceeded s = 3");
      hi = off + 1;
      f_hi = g(hi);
      if (f_hi.sign() != f_lo.sign()) return find_root(g, lo, hi, ctx);
      lo = hi;
      f_lo = f_hi;
    } else {
      off /= 2;
      if (off < Real::pow10(-14, p)) {
        throw std::runtime_error("root bracket expansion ran into s = 1");
      }
      lo = off + 1;
      f_lo = g(lo);
      if (f_lo.sign() != f_hi.sign()) return find_root(g, lo, hi, ctx);
      hi = lo;
      f_hi = f_lo;
    }
  }
  throw std::runtime_error("root bracket expansion failed");
}

inline void require_k_range(int k, const char* what) {
  if (k < 2 || k > 20) {
    throw std::domain_error(std::string(what) + ": k must be in 2..20");
  }
}

}  // namespace detail

/// s_k: the unique s > 1 with P(s) = (k!)^{1/(k-1)}.
inline RootResult aux_root_s_k(int k, const NumericContext& ctx) {
  detail::require_k_range(k, "aux_root_s_k");
  const mpfr_prec_t p = ctx.prec;
  Real target = rootn(Real::factorial(static_cast<unsigned long>(k), p),
                      static_cast<unsigned long>(k - 1));
  auto g = [&, target](const Real& s) { return prime_zeta(s, ctx).value - target; };
  return detail::solve_on_s(g, k, ctx);
}

/// t_k: the unique t > 1 with P_k(t)/(2^-t + 3^-t) = 1.
inline RootResult aux_root_t_k(int k, const NumericContext& ctx) {
  detail::require_k_range(k, "aux_root_t_k");
  const mpfr_prec_t p = ctx.prec;
  Real two = Real::of(2L, p), three = Real::of(3L, p);
  auto g = [&, two, three](const Real& t) {
    Real denom = pow(two, -t) + pow(three, -t);
    return almost_zeta(k, t, ctx).value / denom - 1;
  };
  return detail::solve_on_s(g, k, ctx);
}

/// s'_k: the unique s > 1 with P_{k-1}(s) = 1.
inline RootResult aux_root_s_prime_k(int k, const NumericContext& ctx) {
  detail::require_k_range(k, "aux_root_s_prime_k");
  auto g = [&](const Real& s) { return almost_zeta(k - 1, s, ctx).value - 1; };
  return detail::solve_on_s(g, k, ctx);
}

/// sigma_k: the unique s > 1 with P_k(s) = P(s).
inline RootResult sigma_k(int k, const NumericContext& ctx) {
  detail::require_k_range(k, "sigma_k");
  auto g = [&](const Real& s) {
    detail::AlmostZetaKernel kern(s - 1, ctx);
    std::vector<Real> values, errs;
    kern.recursion(k, values, errs);
    return values[static_cast<size_t>(k)] - values[1];
  };
  return detail::solve_on_s(g, k, ctx);
}

/// h_k: the unique h > 0 with f(N_k, h) = f(N_1, h). The integrand samples
/// are cached once; each candidate h only re-weights them.
inline RootResult h_k(int k, const NumericContext& ctx) {
  detail::require_k_range(k, "h_k");
  const mpfr_prec_t p = ctx.prec;
  detail::TranslatedIntegralCache cache(k, true, ctx);
  auto g = [&cache](const Real& h) { return cache.value_at(h); };
  return find_root(g, Real::of(0L, p), Real::of(2L, p), ctx);
}

/// h_infinity: the unique t > 0 with int_1^inf P(s) e^{(1-s)t} ds = 1.
inline RootResult h_infinity(const NumericContext& ctx) {
  const mpfr_prec_t p = ctx.prec;
  detail::TranslatedIntegralCache cache(1, false, ctx);
  auto g = [&cache](const Real& h) { return cache.value_at(h) - 1; };
  return find_root(g, Real::of(0L, p), Real::of(2L, p), ctx);
}

/// All five crossing constants for k = 2..kmax, in k order.
inline std::vector<TableRow> build_table(int kmax, const NumericContext& ctx) {
  if (kmax < 2 || kmax > 20) throw std::domain_error("build_table: kmax must be in 2..20");
  std::vector<TableRow> rows;
  rows.reserve(static_cast<size_t>(kmax - 1));
  for (int k = 2; k <= kmax; ++k) {
    try {
      rows.push_back(TableRow{k, aux_root_s_k(k, ctx).root, aux_root_t_k(k, ctx).root,
                              aux_root_s_prime_k(k, ctx).root, sigma_k(k, ctx).root,
                              h_k(k, ctx).root});
    } catch (const std::exception& e) {
      throw std::runtime_error("build_table: row k=" + std::to_string(k) + " failed: " + e.what());
    }
  }
  return rows;
}

/// Per-row ordering facts; the k = 2 row's t_k > s'_k is expected.
inline std::vector<OrderingReport> check_orderings(const std::vector<TableRow>& rows) {
  std::vector<OrderingReport> out;
  out.reserve(rows.size());
  for (const auto& r : rows) {
    out.push_back({r.k, r.s_k < r.sigma_k, r.sigma_k < r.t_k, r.t_k < r.s_prime_k});
  }
  return out;
}

}  // namespace primezeta
