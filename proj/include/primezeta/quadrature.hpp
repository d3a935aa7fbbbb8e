#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "primezeta/numeric_context.hpp"

namespace primezeta {

/// Result of one adaptive tanh-sinh integration.
struct QuadratureResult {
  Real value;
  Real err_estimate;   ///< last level-to-level difference plus truncation slack
  Real tail_bound;     ///< bound on any analytically truncated tail (0 if none)
  int levels_used = 0;
  Real split_point;    ///< right end of the numerically integrated range
};

namespace detail {

/// A sampled tanh-sinh node: distance from the left endpoint, raw trapezoid
/// weight (final step size not yet applied), and the integrand sample.
struct CachedNode {
  Real off_a;
  Real weight;
  Real fval;
};

/// Tanh-sinh (double-exponential) quadrature on [a, b].
///
/// The substitution x = mid + hw * tanh((pi/2) sinh t) clusters nodes
/// doubly exponentially at both endpoints, which is what lets integrands
/// with log-power singularities at an endpoint converge at full precision.
/// Node positions are produced as exact offsets from each endpoint
/// (1 -+ tanh(u) evaluated via 2/(1+e^{+-2u})), so an integrand that is
/// singular at an endpoint can be evaluated without any cancellation:
/// the callback receives f(off_from_a, off_from_b).
///
/// Levels halve the step until the level-to-level difference drops below
/// abs_tol; exhausting ctx.max_quad_level is an explicit error. When
/// `record` is non-null every contributing node is appended to it, which
/// lets callers re-weight the same samples cheaply (see translated_sums).
template <class F>
QuadratureResult tanh_sinh(F&& f, const Real& a, const Real& b, const NumericContext& ctx,
                           const Real& abs_tol, std::vector<CachedNode>* record = nullptr) {
  const mpfr_prec_t p = ctx.prec;
  const Real hw = (b - a) / 2;
  if (!(hw > 0)) throw std::domain_error("tanh_sinh: requires b > a");
  const Real pi_half = Real::pi(p) / 2;
  const double t_max = 5.0;

  Real node_sum = Real::of(0L, p);   // running sum of w_i * f_i over all nodes
  Real slack = Real::of(0L, p);      // bound on dropped below-cutoff terms

  // t = 0 node.
  {
    Real w0 = hw * pi_half;
    Real fv = f(hw, hw);
    node_sum += w0 * fv;
    if (record) record->push_back({hw, w0, std::move(fv)});
  }

  Real i_prev = Real::of(0L, p);
  Real diff = Real::of(0L, p);
  bool have_prev = false;
  int level = 0;
  for (;; ++level) {
    if (level > ctx.max_quad_level) {
      throw std::runtime_error("tanh_sinh: no convergence within level cap");
    }
    const long stride = (level == 0) ? 1 : 2;       // odd indices only after level 0
    const long i_cap = static_cast<long>(t_max * (1L << level)) + 1;
    Real h = scale2(Real::of(1L, p), -level);
    Real cut = abs_tol * scale2(Real::of(1L, p), -14) / h;
    int quiet = 0;

    // Integrands concentrated at an endpoint put their mass at large |t|,
    // so the below-cutoff break only arms past t_scan_min.
    const double t_scan_min = 3.0;

    for (long i = 1; i <= i_cap; i += stride) {
      Real t = scale2(Real::of(i, p), -level);
      double t_d = t.to_double();
      if (t_d > t_max) break;
      Real sh(p), ch(p);
      sinh_cosh(sh, ch, t);
      Real u2 = pi_half * sh * 2;
      Real e2u = exp(u2);
      Real off_near = hw * 2 / (e2u + 1);        // distance to the close endpoint
      Real off_far = hw * 2 / (1 / e2u + 1);     // distance to the far endpoint
      Real eu = sqrt(e2u);
      Real cu = (eu + 1 / eu) / 2;
      Real w = hw * pi_half * ch / (cu * cu);

      // +t node sits near b, -t node sits near a.
      Real f_plus = f(off_far, off_near);
      Real f_minus = f(off_near, off_far);
      Real term = w * (f_plus + f_minus);
      node_sum += term;
      if (record) {
        record->push_back({off_far, w, std::move(f_plus)});
        record->push_back({off_near, w, std::move(f_minus)});
      }
      if (t_d >= t_scan_min && abs(term) < cut) {
        if (++quiet >= 3) {
          slack += cut * h * 32;
          break;
        }
      } else {
        quiet = 0;
      }
    }

    Real i_cur = h * node_sum;
    if (have_prev) {
      diff = abs(i_cur - i_prev);
      if (level >= 2 && diff <= abs_tol) {
        QuadratureResult out{i_cur, diff + slack, Real::of(0L, p), level, b};
        out.err_estimate += abs(i_cur) * Real::pow10(-(ctx.digits + 4), p);
        return out;
      }
    }
    i_prev = i_cur;
    have_prev = true;
  }
}

}  // namespace detail

/// Adaptive tanh-sinh integration of f over [a, b].
///
/// Endpoint singularities up to log-power type are handled by the node
/// clustering; interior singularities are not supported.
inline QuadratureResult integrate_de(const std::function<Real(const Real&)>& f, const Real& a,
                                     const Real& b, const NumericContext& ctx) {
  return detail::tanh_sinh(
      [&](const Real& off_a, const Real& off_b) {
        // Reconstruct x from the nearer endpoint to preserve precision.
        return off_a <= off_b ? f(a + off_a) : f(b - off_b);
      },
      a, b, ctx, ctx.eps_eval);
}

}  // namespace primezeta
