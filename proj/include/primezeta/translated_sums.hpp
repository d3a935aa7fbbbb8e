#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "primezeta/almost_prime_zeta.hpp"
#include "primezeta/quadrature.hpp"

namespace primezeta {

/// Upper bound for the truncated tail of the translated sum integral:
///
///   int_S^inf P_k(s) e^{(1-s)h} ds  <=  P_k(S) e^{(1-S)h} / (k log 2 + h)
///
/// using the majorant P_k(s) <= P_k(S) 2^{k(S-s)} for s >= S, which holds
/// because P_k(s) 2^{ks} is nonincreasing on s > 1.
inline Real tail_bound(int k, const Real& h, const Real& S, const NumericContext& ctx) {
  if (!(S > 1)) throw std::domain_error("tail_bound: S must be > 1");
  if (k < 1) throw std::domain_error("tail_bound: k must be >= 1");
  const mpfr_prec_t p = ctx.prec;
  Real pk = almost_zeta(k, S, ctx).value;
  Real ln2 = log(Real::of(2L, p));
  return pk * exp((1 - S) * h) / (ln2 * k + h);
}

namespace detail {

inline const std::array<long, 4>& split_ladder() {
  static const std::array<long, 4> ladder{10, 20, 40, 80};
  return ladder;
}

/// Smallest ladder split S with the (combined) tail below eps_eval/2.
/// `difference` selects the integrand P_k - P_1, whose tail needs both bounds.
inline Real choose_split(int k, const Real& h, bool difference, const NumericContext& ctx) {
  Real budget = ctx.eps_eval / 2;
  for (long s_val : split_ladder()) {
    Real S = Real::of(s_val, ctx.prec);
    Real tb = tail_bound(k, h, S, ctx);
    if (difference) tb += tail_bound(1, h, S, ctx);
    if (tb < budget) return S;
  }
  throw std::runtime_error("translated_sums: no ladder split point reaches the tail budget");
}

/// Weighted sum of per-node inner error bounds: the node lists from the
/// engine and the integrand's side channel align one to one in call order.
inline Real weighted_inner_err(const std::vector<CachedNode>& nodes, const std::vector<Real>& errs,
                               int levels, mpfr_prec_t p) {
  Real acc = Real::of(0L, p);
  for (size_t i = 0; i < nodes.size() && i < errs.size(); ++i) {
    acc += nodes[i].weight * errs[i];
  }
  return scale2(acc, -levels);
}

/// Integrand samples of eps |-> P_k(1+eps) (or P_k - P_1) on a converged
/// tanh-sinh grid over [0, S-1], reusable for any translation h >= 0.
///
/// The base values do not depend on h; only the exponential weight does.
/// Root solves in h therefore sample the expensive zeta machinery once and
/// evaluate each candidate h in milliseconds.
class TranslatedIntegralCache {
 public:
  TranslatedIntegralCache(int k, bool difference, const NumericContext& ctx)
      : ctx_(ctx), k_(k), difference_(difference), split_(Real(ctx.prec)),
        step_(Real(ctx.prec)), build_err_(Real(ctx.prec)), tail_scale_(Real(ctx.prec)) {
    if (k < 1) throw std::domain_error("translated sum: k must be >= 1");
    if (difference && k < 2) throw std::domain_error("f_difference: k must be >= 2");
    const mpfr_prec_t p = ctx.prec;
    Real h0 = Real::of(0L, p);
    split_ = choose_split(k, h0, difference, ctx);
    std::vector<Real> inner_errs;
    auto base = [&](const Real& eps, const Real&) {
      detail::AlmostZetaKernel kern(eps, ctx_);
      std::vector<Real> values, errs;
      kern.recursion(k_, values, errs);
      Real v = values[static_cast<size_t>(k_)];
      if (difference_) {
        v -= values[1];
        inner_errs.push_back(errs[static_cast<size_t>(k_)] + errs[1]);
      } else {
        inner_errs.push_back(errs[static_cast<size_t>(k_)]);
      }
      return v;
    };
    // Converge at h = 0, the slowest-decaying weight; larger h only damps
    // the integrand further.
    auto q = detail::tanh_sinh(base, Real::of(0L, p), split_ - 1, ctx_, ctx_.eps_eval, &nodes_);
    levels_ = q.levels_used;
    step_ = scale2(Real::of(1L, p), -q.levels_used);
    build_err_ = q.err_estimate + weighted_inner_err(nodes_, inner_errs, levels_, p);
    // Tail majorant scale: P_k(S) (and P(S) for differences), reused per h.
    tail_scale_ = almost_zeta(k_, split_, ctx_).value / (log(Real::of(2L, p)) * k_);
    if (difference_) {
      tail_scale_ += prime_zeta(split_, ctx_).value / log(Real::of(2L, p));
    }
  }

  /// integral_0^{S-1} base(eps) e^{-eps h} d eps from the cached samples.
  Real value_at(const Real& h) const {
    Real acc = Real::of(0L, ctx_.prec);
    for (const auto& n : nodes_) {
      acc += n.weight * n.fval * exp(-(n.off_a * h));
    }
    return acc * step_;
  }

  /// Tail bound at h (crude but rigorous; already below eps_eval/2 at h=0).
  Real tail_at(const Real& h) const { return tail_scale_ * exp((1 - split_) * h); }

  Real err_at(const Real& h) const { return build_err_ + tail_at(h); }

  const Real& split() const { return split_; }
  int levels() const { return levels_; }
  size_t node_count() const { return nodes_.size(); }

 private:
  const NumericContext& ctx_;
  int k_;
  bool difference_;
  Real split_;
  Real step_;
  Real build_err_;
  Real tail_scale_;
  int levels_ = 0;
  std::vector<detail::CachedNode> nodes_;
};

}  // namespace detail

/// f(N_k, h) = int_1^inf P_k(s) e^{(1-s)h} ds, evaluated as a tanh-sinh
/// integral over [1, S] plus a certified tail bound beyond the split.
inline EvalResult f_translated(int k, const Real& h, const NumericContext& ctx) {
  if (k < 1) throw std::domain_error("f_translated: k must be >= 1");
  if (h < 0) throw std::domain_error("f_translated: h must be >= 0");
  const mpfr_prec_t p = ctx.prec;
  Real S = detail::choose_split(k, h, false, ctx);
  std::vector<Real> inner_errs;
  auto integrand = [&](const Real& eps, const Real&) {
    auto pk = almost_zeta_1p(k, eps, ctx);
    inner_errs.push_back(pk.err_bound);
    return pk.value * exp(-(eps * h));
  };
  std::vector<detail::CachedNode> nodes;
  auto q = detail::tanh_sinh(integrand, Real::of(0L, p), S - 1, ctx, ctx.eps_eval, &nodes);
  Real tb = tail_bound(k, h, S, ctx);
  Real inner = detail::weighted_inner_err(nodes, inner_errs, q.levels_used, p);
  return {q.value, q.err_estimate + tb + inner,
          {static_cast<long>(nodes.size()), q.levels_used}};
}

/// D(h) = f(N_k, h) - f(N_1, h), computed as a single integral of
/// [P_k(s) - P(s)] e^{(1-s)h} to avoid cancellation between two almost
/// equal translated sums near the crossing translation.
inline EvalResult f_difference(int k, const Real& h, const NumericContext& ctx) {
  if (k < 2) throw std::domain_error("f_difference: k must be >= 2");
  if (h < 0) throw std::domain_error("f_difference: h must be >= 0");
  const mpfr_prec_t p = ctx.prec;
  Real S = detail::choose_split(k, h, true, ctx);
  std::vector<Real> inner_errs;
  auto integrand = [&](const Real& eps, const Real&) {
    detail::AlmostZetaKernel kern(eps, ctx);
    std::vector<Real> values, errs;
    kern.recursion(k, values, errs);
    inner_errs.push_back(errs[static_cast<size_t>(k)] + errs[1]);
    return (values[static_cast<size_t>(k)] - values[1]) * exp(-(eps * h));
  };
  std::vector<detail::CachedNode> nodes;
  auto q = detail::tanh_sinh(integrand, Real::of(0L, p), S - 1, ctx, ctx.eps_eval, &nodes);
  Real tb = tail_bound(k, h, S, ctx) + tail_bound(1, h, S, ctx);
  Real inner = detail::weighted_inner_err(nodes, inner_errs, q.levels_used, p);
  return {q.value, q.err_estimate + tb + inner,
          {static_cast<long>(nodes.size()), q.levels_used}};
}

}  // namespace primezeta
