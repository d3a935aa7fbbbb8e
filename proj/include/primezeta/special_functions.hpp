#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "primezeta/numeric_context.hpp"
#include "primezeta/real.hpp"

namespace primezeta {

struct WorkCounters {
  long terms = 0;
  int levels = 0;
};

/// A computed value with a conservative absolute error bound.
struct EvalResult {
  Real value;
  Real err_bound;
  WorkCounters work;
};

/// Even-index Bernoulli numbers B_2, B_4, ... as exact rationals.
///
/// Built once from the defining recurrence
///   B_m = -1/(m+1) * sum_{j<m} C(m+1, j) B_j
/// and shared read-only afterwards.
class BernoulliCache {
 public:
  static const BernoulliCache& instance() {
    static const BernoulliCache cache(96);
    return cache;
  }

  /// B_{2j} for 1 <= j <= count().
  const mpq_class& at(int j) const {
    if (j < 1 || j > static_cast<int>(even_.size())) {
      throw std::out_of_range("BernoulliCache: index out of range");
    }
    return even_[static_cast<size_t>(j - 1)];
  }
  int count() const { return static_cast<int>(even_.size()); }

 private:
  explicit BernoulliCache(int pairs) {
    const int m_max = 2 * pairs;
    std::vector<mpq_class> b(static_cast<size_t>(m_max) + 1);
    b[0] = 1;
    for (int m = 1; m <= m_max; ++m) {
      mpq_class acc = 0;
      mpz_class binom = 1;  // C(m+1, 0)
      for (int j = 0; j < m; ++j) {
        acc += mpq_class(binom) * b[static_cast<size_t>(j)];
        binom *= (m + 1 - j);
        binom /= (j + 1);
      }
      b[static_cast<size_t>(m)] = -acc / (m + 1);
    }
    even_.reserve(static_cast<size_t>(pairs));
    for (int j = 1; j <= pairs; ++j) even_.push_back(b[static_cast<size_t>(2 * j)]);
  }

  std::vector<mpq_class> even_;
};

namespace detail {

/// Natural logs of 1..n, cached per precision. The returned vector is
/// immutable once built, so concurrent readers are safe.
inline const std::vector<Real>& log_table(mpfr_prec_t prec, int upto) {
  static std::mutex mu;
  static std::map<std::pair<mpfr_prec_t, int>, std::unique_ptr<std::vector<Real>>> tables;
  int bucket = 128;
  while (bucket < upto) bucket *= 2;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = tables[{prec, bucket}];
  if (!slot) {
    auto t = std::make_unique<std::vector<Real>>();
    t->reserve(static_cast<size_t>(bucket) + 1);
    for (int n = 0; n <= bucket; ++n) {
      t->push_back(n == 0 ? Real::of(0L, prec) : log(Real::of(n, prec)));
    }
    slot = std::move(t);
  }
  return *slot;
}

/// B_{2j}/(2j)! as Reals, cached per precision.
inline const std::vector<Real>& bernoulli_over_fact(mpfr_prec_t prec) {
  static std::mutex mu;
  static std::map<mpfr_prec_t, std::unique_ptr<std::vector<Real>>> tables;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = tables[prec];
  if (!slot) {
    const auto& bern = BernoulliCache::instance();
    auto t = std::make_unique<std::vector<Real>>();
    t->reserve(static_cast<size_t>(bern.count()));
    for (int j = 1; j <= bern.count(); ++j) {
      Real b(prec);
      mpfr_set_q(b.raw(), bern.at(j).get_mpq_t(), MPFR_RNDN);
      t->push_back(b / Real::factorial(static_cast<unsigned long>(2 * j), prec));
    }
    slot = std::move(t);
  }
  return *slot;
}

struct ZetaEval {
  Real value;
  Real err;
  Real dvalue;  // d/ds zeta(s); meaningful only when has_deriv
  Real derr;
  bool has_deriv = false;
  long terms = 0;
};

/// zeta(1 + eps) for eps > 0 by Euler-Maclaurin summation, optionally with
/// the derivative zeta'(1 + eps) from the term-wise differentiated formula.
///
/// The shifted argument keeps the evaluation well conditioned arbitrarily
/// close to the pole: the dominant tail term is N^{-eps}/eps, computed from
/// eps directly, so no cancellation ever forms s - 1.
///
///   zeta(s) = sum_{n<N} n^-s + N^{1-s}/(s-1) + N^-s/2
///           + sum_{j>=1} B_{2j}/(2j)! (s)_{2j-1} N^{-s-2j+1}
///
/// Corrections stop once the first omitted term drops below the working
/// target; that term is the standard error majorant.
inline ZetaEval zeta_em_core(const Real& eps, bool want_deriv, const NumericContext& ctx) {
  if (!(eps > 0)) throw std::domain_error("zeta: argument must satisfy s > 1");
  const mpfr_prec_t p = ctx.prec;
  ZetaEval out{Real::of(0L, p), Real::of(0L, p), Real::of(0L, p), Real::of(0L, p), want_deriv, 0};

  const double eps_d = eps.to_double();
  const double s_d = 1.0 + (eps_d < 1e300 ? eps_d : 1e300);
  const Real s = eps + 1;

  // Large arguments: the direct sum alone reaches the working target with a
  // handful of terms, and Euler-Maclaurin corrections would be pure overhead.
  if (s_d >= 24.0) {
    int n0 = static_cast<int>(std::ceil(std::pow(10.0, (ctx.digits + 6) / s_d))) + 1;
    if (n0 < 3) n0 = 3;
    const auto& logs = log_table(p, n0);
    Real acc = Real::of(1L, p);
    Real dacc = Real::of(0L, p);
    for (int n = 2; n <= n0; ++n) {
      Real term = exp(-(s * logs[static_cast<size_t>(n)]));
      acc += term;
      if (want_deriv) dacc -= logs[static_cast<size_t>(n)] * term;
      ++out.terms;
    }
    // Integral tail bound: sum_{n>n0} n^-s < n0^{1-s}/(s-1).
    Real tail = exp((1 - s) * logs[static_cast<size_t>(n0)]) / (s - 1);
    out.value = acc;
    out.err = tail + abs(acc) * Real::pow10(-(ctx.digits + 6), p);
    if (want_deriv) {
      out.dvalue = dacc;
      out.derr = tail * (logs[static_cast<size_t>(n0)] + 2);
    }
    return out;
  }

  const int N = ctx.zeta_em_nodes;
  const auto& logs = log_table(p, N);
  const auto& bq = bernoulli_over_fact(p);

  Real acc = Real::of(1L, p);
  Real dacc = Real::of(0L, p);
  for (int n = 2; n < N; ++n) {
    Real term = exp(-(s * logs[static_cast<size_t>(n)]));
    acc += term;
    if (want_deriv) dacc -= logs[static_cast<size_t>(n)] * term;
    ++out.terms;
  }

  const Real& lnN = logs[static_cast<size_t>(N)];
  Real n_meps = exp(-(eps * lnN));            // N^-eps
  Real tail_a = n_meps / eps;                 // N^{1-s}/(s-1)
  Real n_ms = exp(-(s * lnN));                // N^-s
  acc += tail_a;
  acc += n_ms / 2;
  if (want_deriv) {
    dacc -= n_meps * (lnN * eps + 1) / (eps * eps);
    dacc -= lnN * n_ms / 2;
  }

  // Bernoulli corrections. R tracks the rising factorial (s)_{2j-1},
  // H its logarithmic derivative, q the power N^{-s-2j+1}.
  Real thr = ctx.eps_work * (abs(acc) + 1);
  mpfr_div_si(thr.raw(), thr.raw(), 100, MPFR_RNDN);
  Real R = s;
  Real H = 1 / s;
  Real q = n_ms / N;
  bool certified = false;
  for (int j = 1; j <= ctx.zeta_em_bernoulli; ++j) {
    if (j > static_cast<int>(bq.size())) break;
    Real term = bq[static_cast<size_t>(j - 1)] * R * q;
    Real tmag = abs(term);
    if (tmag < thr) {
      out.err = tmag * 2;
      if (want_deriv) out.derr = tmag * (H + lnN) * 2;
      certified = true;
      break;
    }
    acc += term;
    if (want_deriv) dacc += term * (H - lnN);
    ++out.terms;
    R *= (s + (2 * j - 1)) * (s + 2 * j);
    H += 1 / (s + (2 * j - 1)) + 1 / (s + 2 * j);
    q /= static_cast<long>(N) * N;
  }
  if (!certified) {
    throw std::runtime_error("zeta: Euler-Maclaurin corrections exhausted before reaching tolerance");
  }

  Real slack = abs(acc) * Real::pow10(-(ctx.digits + 6), p);
  out.value = acc;
  out.err += slack;
  if (want_deriv) {
    out.dvalue = dacc;
    out.derr += (abs(dacc) + 1) * Real::pow10(-(ctx.digits + 6), p);
  }
  return out;
}

}  // namespace detail

/// Riemann zeta on the real ray s > 1. Certifies |value - zeta(s)| <= err_bound.
inline EvalResult zeta(const Real& s, const NumericContext& ctx) {
  auto z = detail::zeta_em_core(s - 1, false, ctx);
  if (!(z.err <= ctx.eps_eval)) {
    throw std::runtime_error("zeta: could not certify requested tolerance");
  }
  return {std::move(z.value), std::move(z.err), {z.terms, 0}};
}

/// zeta(1 + eps); use this entry point when eps is tiny, so the caller never
/// forms s - 1 by subtraction.
inline EvalResult zeta_1p(const Real& eps, const NumericContext& ctx) {
  auto z = detail::zeta_em_core(eps, false, ctx);
  return {std::move(z.value), std::move(z.err), {z.terms, 0}};
}

/// zeta'(s) for s > 1 by the differentiated Euler-Maclaurin formula.
inline EvalResult zeta_prime(const Real& s, const NumericContext& ctx) {
  auto z = detail::zeta_em_core(s - 1, true, ctx);
  if (!(z.derr <= ctx.eps_eval)) {
    throw std::runtime_error("zeta_prime: could not certify requested tolerance");
  }
  return {std::move(z.dvalue), std::move(z.derr), {z.terms, 0}};
}

inline EvalResult zeta_prime_1p(const Real& eps, const NumericContext& ctx) {
  auto z = detail::zeta_em_core(eps, true, ctx);
  return {std::move(z.dvalue), std::move(z.derr), {z.terms, 0}};
}

/// Moebius function mu(1..M) by sieve.
inline std::vector<int8_t> moebius_upto(uint32_t m_max) {
  if (m_max < 1) throw std::domain_error("moebius_upto: M must be >= 1");
  std::vector<int8_t> mu(m_max + 1, 1);
  mu[0] = 0;
  std::vector<uint8_t> composite(m_max + 1, 0);
  for (uint32_t p = 2; p <= m_max; ++p) {
    if (composite[p]) continue;
    for (uint32_t n = p; n <= m_max; n += p) {
      if (n > p) composite[n] = 1;
      mu[n] = static_cast<int8_t>(-mu[n]);
    }
    uint64_t p2 = static_cast<uint64_t>(p) * p;
    for (uint64_t n = p2; n <= m_max; n += p2) mu[n] = 0;
  }
  return mu;
}

/// Ordered primes <= N by sieve of Eratosthenes.
inline std::vector<uint32_t> primes_upto(uint32_t n_max) {
  if (n_max < 2) throw std::domain_error("primes_upto: N must be >= 2");
  std::vector<uint8_t> is_comp(n_max + 1, 0);
  std::vector<uint32_t> primes;
  for (uint32_t i = 2; i <= n_max; ++i) {
    if (is_comp[i]) continue;
    primes.push_back(i);
    for (uint64_t j = static_cast<uint64_t>(i) * i; j <= n_max; j += i) is_comp[j] = 1;
  }
  return primes;
}

/// Upper incomplete gamma of integer order:
///   Gamma(k+1, x) = k! e^-x sum_{j<=k} x^j/j!   (exact closed form).
inline Real upper_incomplete_gamma_int(unsigned long k, const Real& x) {
  if (x < 0) throw std::domain_error("upper_incomplete_gamma_int: x must be >= 0");
  const mpfr_prec_t p = x.prec();
  Real sum = Real::of(1L, p);
  Real term = Real::of(1L, p);
  for (unsigned long j = 1; j <= k; ++j) {
    term *= x;
    term /= static_cast<long>(j);
    sum += term;
  }
  return Real::factorial(k, p) * exp(-x) * sum;
}

}  // namespace primezeta
