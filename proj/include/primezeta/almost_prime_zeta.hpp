#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "primezeta/prime_zeta.hpp"

namespace primezeta {

/// One term of the partition expansion of P_k: a multiset of parts encoded
/// as (part j, multiplicity n_j) with sum j * n_j = k.
struct PartitionTerm {
  std::vector<std::pair<int, int>> multiplicities;
};

/// All partitions of k, duplicate-free, in deterministic order.
inline std::vector<PartitionTerm> partitions(int k) {
  if (k < 1) throw std::domain_error("partitions: k must be >= 1");
  std::vector<PartitionTerm> out;
  PartitionTerm current;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (int j = std::min(max_part, remaining); j >= 1; --j) {
      for (int c = remaining / j; c >= 1; --c) {
        current.multiplicities.emplace_back(j, c);
        self(self, remaining - j * c, j - 1);
        current.multiplicities.pop_back();
      }
    }
  };
  rec(rec, k, k);
  return out;
}

/// An evaluation of the k-almost-prime zeta function P_k(s), optionally with
/// P_k'(s), carrying a conservative (first-order, x2 inflated) error bound.
struct AlmostPrimeZetaEval {
  int k;
  Real s;
  Real value;
  std::optional<Real> derivative;
  Real err_bound;
};

namespace detail {

/// Shared evaluation state for one P_k computation at a fixed s = 1 + eps.
///
/// Every zeta argument that appears anywhere in the tree is an integer
/// multiple r * s, so inner evaluations are memoized by r. The cache lives
/// only for the duration of one public call.
class AlmostZetaKernel {
 public:
  AlmostZetaKernel(Real eps, const NumericContext& ctx) : ctx_(ctx), eps_(std::move(eps)) {
    if (!(eps_ > 0)) throw std::domain_error("almost_zeta: argument must satisfy s > 1");
  }

  const NumericContext& ctx() const { return ctx_; }
  const Real& eps() const { return eps_; }

  /// P(j * s) (plus derivative on demand), cached by j.
  const PrimeZetaEval& prime_part(int j, bool want_deriv) {
    auto it = pcache_.find(j);
    if (it != pcache_.end() && (!want_deriv || it->second.derivative)) return it->second;
    PrimeZetaEval eval = compute_prime(j, want_deriv);
    auto [pos, _] = pcache_.insert_or_assign(j, std::move(eval));
    return pos->second;
  }

  /// P_0..P_k at s via the recursion P_i = (1/i) sum_j P_{i-j} P(js).
  /// Returns values and first-order error bounds.
  void recursion(int k, std::vector<Real>& values, std::vector<Real>& errs) {
    const mpfr_prec_t p = ctx_.prec;
    values.clear();
    errs.clear();
    values.push_back(Real::of(1L, p));
    errs.push_back(Real::of(0L, p));
    for (int i = 1; i <= k; ++i) {
      Real acc = Real::of(0L, p);
      Real err = Real::of(0L, p);
      for (int j = 1; j <= i; ++j) {
        const auto& pj = prime_part(j, false);
        acc += values[static_cast<size_t>(i - j)] * pj.value;
        err += abs(values[static_cast<size_t>(i - j)]) * pj.err_bound +
               errs[static_cast<size_t>(i - j)] * abs(pj.value);
      }
      values.push_back(acc / i);
      errs.push_back(err / i);
    }
  }

 private:
  PrimeZetaEval compute_prime(int j, bool want_deriv) {
    const mpfr_prec_t p = ctx_.prec;
    const double s_d = (1.0 + eps_.to_double()) * j;
    const int m_cut = moebius_cutoff(s_d, ctx_);
    const auto& mu = moebius_table();

    PrimeZetaEval out{eps_ * j + j, Real::of(0L, p), std::nullopt, Real::of(0L, p), 0};
    Real acc = Real::of(0L, p);
    Real dacc = Real::of(0L, p);
    Real err = Real::of(0L, p);
    Real derr = Real::of(0L, p);
    const double log10_cut = -(ctx_.digits + 5);
    int m_stop = m_cut;
    for (int m = 1; m <= m_cut; ++m) {
      if (m > 1 && -0.30103 * m * s_d < log10_cut) {
        m_stop = m - 1;
        break;
      }
      m_stop = m;
      if (mu[static_cast<size_t>(m)] == 0) continue;
      const ZetaEval& z = zeta_multiple(static_cast<long>(m) * j, want_deriv);
      Real lz = log(z.value);
      if (mu[static_cast<size_t>(m)] > 0) {
        acc += lz / m;
      } else {
        acc -= lz / m;
      }
      err += z.err / (z.value * m);
      if (want_deriv) {
        // d/ds log zeta(m j s) contributes mu(m) * j * zeta'(mjs)/zeta(mjs).
        Real ratio = z.dvalue / z.value * j;
        if (mu[static_cast<size_t>(m)] > 0) {
          dacc += ratio;
        } else {
          dacc -= ratio;
        }
        derr += (z.derr * j + abs(ratio) * z.err) / z.value;
      }
      ++out.terms_used;
    }
    {
      Real s = (eps_ + 1) * j;
      Real ln2 = log(Real::of(2L, p));
      Real two_ms = exp(Real::of(m_stop + 1, p) * s * ln2);
      Real geom = 1 - exp(-(s * ln2));
      err += 2 / (two_ms * geom * (m_stop + 1));
      if (want_deriv) derr += 8 * j / (two_ms * geom);
    }
    out.value = acc;
    out.err_bound = err + abs(acc) * Real::pow10(-(ctx_.digits + 6), p);
    if (want_deriv) {
      out.derivative = dacc;
      out.err_bound += derr;
    }
    return out;
  }

  /// zeta(r * s) in shifted form, cached by the integer multiple r.
  const ZetaEval& zeta_multiple(long r, bool want_deriv) {
    auto it = zcache_.find(r);
    if (it != zcache_.end() && (!want_deriv || it->second.has_deriv)) return it->second;
    Real eps_r = (r == 1) ? eps_ : Real::of(r - 1, ctx_.prec) + eps_ * r;
    ZetaEval z = zeta_em_core(eps_r, want_deriv, ctx_);
    auto [pos, _] = zcache_.insert_or_assign(r, std::move(z));
    return pos->second;
  }

  const NumericContext& ctx_;
  Real eps_;
  std::map<long, ZetaEval> zcache_;
  std::map<int, PrimeZetaEval> pcache_;
};

/// caution: prime_part derivatives are with respect to s (chain rule applied),
/// i.e. prime_part(j).derivative = d/ds P(js) = j P'(js).
inline AlmostPrimeZetaEval almost_zeta_core(int k, const Real& eps, bool want_deriv,
                                            const NumericContext& ctx) {
  if (k < 0) throw std::domain_error("almost_zeta: k must be >= 0");
  const mpfr_prec_t p = ctx.prec;
  if (k == 0) {
    AlmostPrimeZetaEval r{0, eps + 1, Real::of(1L, p), std::nullopt, Real::of(0L, p)};
    if (want_deriv) r.derivative = Real::of(0L, p);
    return r;
  }
  AlmostZetaKernel kern(eps, ctx);
  std::vector<Real> values, errs;
  kern.recursion(k, values, errs);
  AlmostPrimeZetaEval out{k, eps + 1, values[static_cast<size_t>(k)],
                          std::nullopt, errs[static_cast<size_t>(k)] * 2};
  if (want_deriv) {
    // P_k'(s) = sum_{j=1..k} P_{k-j}(s) P'(js); prime_part carries j P'(js).
    Real dacc = Real::of(0L, p);
    Real derr = Real::of(0L, p);
    for (int j = 1; j <= k; ++j) {
      const auto& pj = kern.prime_part(j, true);
      Real pprime = *pj.derivative / j;
      dacc += values[static_cast<size_t>(k - j)] * pprime;
      derr += abs(values[static_cast<size_t>(k - j)]) * pj.err_bound +
              errs[static_cast<size_t>(k - j)] * abs(pprime);
    }
    out.derivative = dacc;
    out.err_bound += derr * 2;
  }
  return out;
}

}  // namespace detail

/// P_k(s) by the recursion P_k = (1/k) sum_{j<=k} P_{k-j} P(js), P_0 = 1.
inline AlmostPrimeZetaEval almost_zeta(int k, const Real& s, const NumericContext& ctx) {
  return detail::almost_zeta_core(k, s - 1, false, ctx);
}

/// Shifted entry point: P_k(1 + eps) for arguments very close to the pole.
inline AlmostPrimeZetaEval almost_zeta_1p(int k, const Real& eps, const NumericContext& ctx) {
  return detail::almost_zeta_core(k, eps, false, ctx);
}

/// P_k(s) together with P_k'(s).
inline AlmostPrimeZetaEval almost_zeta_deriv(int k, const Real& s, const NumericContext& ctx) {
  return detail::almost_zeta_core(k, s - 1, true, ctx);
}

/// P_k(s) by the explicit partition sum
///   P_k(s) = sum_{partitions of k} prod_j (1/n_j!) (P(js)/j)^{n_j}.
/// Exponential in k; intended as an independent cross-check for k <= 20.
inline AlmostPrimeZetaEval almost_zeta_partition(int k, const Real& s, const NumericContext& ctx) {
  if (k < 1 || k > 20) {
    throw std::domain_error("almost_zeta_partition: k must be in 1..20");
  }
  const mpfr_prec_t p = ctx.prec;
  detail::AlmostZetaKernel kern(s - 1, ctx);
  auto parts = partitions(k);
  Real acc = Real::of(0L, p);
  Real err = Real::of(0L, p);
  for (const auto& part : parts) {
    Real term = Real::of(1L, p);
    Real rel = Real::of(0L, p);  // accumulated relative error of the product
    for (const auto& [j, nj] : part.multiplicities) {
      const auto& pj = kern.prime_part(j, false);
      Real base = pj.value / j;
      term *= pow_si(base, nj) / Real::factorial(static_cast<unsigned long>(nj), p);
      rel += Real::of(nj, p) * pj.err_bound / abs(pj.value);
    }
    acc += term;
    err += abs(term) * rel;
  }
  return {k, s, acc, std::nullopt, err * 2};
}

}  // namespace primezeta
