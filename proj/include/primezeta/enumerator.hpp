#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "primezeta/special_functions.hpp"

namespace primezeta {

/// Omega(n): number of prime factors counted with multiplicity, by trial
/// division. Exact for any 64-bit n >= 2.
inline int big_omega(uint64_t n) {
  if (n < 2) throw std::domain_error("big_omega: n must be >= 2");
  int count = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++count;
  }
  for (uint64_t d = 3; d * d <= n; d += 2) {
    while (n % d == 0) {
      n /= d;
      ++count;
    }
  }
  if (n > 1) ++count;
  return count;
}

/// Ordered enumeration of {n <= N : Omega(n) = k} by a segmented sieve that
/// divides out every prime up to sqrt(N) and counts the leftover cofactor.
/// Memory stays bounded by the segment, so limits up to 1e8 are practical.
class AlmostPrimeStream {
 public:
  AlmostPrimeStream(int k, uint64_t limit) : k_(k), limit_(limit) {
    if (k < 1) throw std::domain_error("AlmostPrimeStream: k must be >= 1");
    uint32_t root = 1;
    while (static_cast<uint64_t>(root + 1) * (root + 1) <= limit_) ++root;
    if (root >= 2) primes_ = primes_upto(root);
    seg_lo_ = 2;
    idx_ = 0;
    sieve_segment();
  }

  int k() const { return k_; }
  uint64_t limit() const { return limit_; }

  /// Next k-almost prime in increasing order, or nullopt when exhausted.
  std::optional<uint64_t> next() {
    for (;;) {
      while (idx_ < omega_.size()) {
        size_t i = idx_++;
        if (omega_[i] == k_) return seg_base_ + i;
      }
      if (seg_lo_ > limit_) return std::nullopt;
      sieve_segment();
      if (omega_.empty() && seg_lo_ > limit_) return std::nullopt;
    }
  }

 private:
  static constexpr uint64_t kSegment = 1u << 20;

  void sieve_segment() {
    omega_.clear();
    idx_ = 0;
    if (seg_lo_ > limit_) return;
    uint64_t lo = seg_lo_;
    uint64_t hi = std::min(limit_ + 1, lo + kSegment);
    seg_base_ = lo;
    seg_lo_ = hi;
    size_t len = static_cast<size_t>(hi - lo);
    omega_.assign(len, 0);
    rem_.resize(len);
    for (size_t i = 0; i < len; ++i) rem_[i] = lo + i;
    for (uint32_t p : primes_) {
      uint64_t p64 = p;
      if (p64 * p64 >= hi) break;
      uint64_t first = ((lo + p64 - 1) / p64) * p64;
      for (uint64_t m = first; m < hi; m += p64) {
        size_t i = static_cast<size_t>(m - lo);
        while (rem_[i] % p64 == 0) {
          rem_[i] /= p64;
          ++omega_[i];
        }
      }
    }
    for (size_t i = 0; i < len; ++i) {
      if (rem_[i] > 1) ++omega_[i];
    }
  }

  int k_;
  uint64_t limit_;
  uint64_t seg_lo_ = 2;
  uint64_t seg_base_ = 2;
  size_t idx_ = 0;
  std::vector<uint32_t> primes_;
  std::vector<uint8_t> omega_;
  std::vector<uint64_t> rem_;
};

/// Convenience factory mirroring the stream constructor.
inline AlmostPrimeStream enumerate_almost_primes(int k, uint64_t limit) {
  return AlmostPrimeStream(k, limit);
}

/// Truncated Dirichlet sum sum_{n in N_k, n <= N} n^-s. The error field is
/// the zeta-based tail majorant N^{1-s}/(s-1) + N^-s, an upper window for
/// everything the truncation dropped.
inline EvalResult partial_zeta(int k, const Real& s, uint64_t n_limit, const NumericContext& ctx) {
  if (!(s > 1)) throw std::domain_error("partial_zeta: s must be > 1");
  const mpfr_prec_t p = ctx.prec;
  AlmostPrimeStream stream(k, n_limit);
  Real acc = Real::of(0L, p);
  long terms = 0;
  while (auto n = stream.next()) {
    acc += exp(-(s * log(Real::of(static_cast<long>(*n), p))));
    ++terms;
  }
  Real n_real = Real::of(static_cast<long>(n_limit), p);
  Real tail = exp((1 - s) * log(n_real)) / (s - 1) + exp(-(s * log(n_real)));
  return {acc, tail, {terms, 0}};
}

/// Truncated translated sum sum_{n in N_k, n <= N} 1/(n (log n + h)).
/// Converges only like 1/log N; the error field is a coarse heuristic
/// window, reported rather than certified.
inline EvalResult partial_f(int k, const Real& h, uint64_t n_limit, const NumericContext& ctx) {
  if (h < 0) throw std::domain_error("partial_f: h must be >= 0");
  const mpfr_prec_t p = ctx.prec;
  AlmostPrimeStream stream(k, n_limit);
  Real acc = Real::of(0L, p);
  long terms = 0;
  while (auto n = stream.next()) {
    Real nr = Real::of(static_cast<long>(*n), p);
    acc += 1 / (nr * (log(nr) + h));
    ++terms;
  }
  Real ln_n = log(Real::of(static_cast<long>(n_limit), p));
  Real lnln = log(ln_n);
  Real window = scale2(Real::of(1L, p), k) * pow_si(lnln, k - 1) /
                (Real::factorial(static_cast<unsigned long>(k - 1), p) * ln_n);
  return {acc, window, {terms, 0}};
}

}  // namespace primezeta
