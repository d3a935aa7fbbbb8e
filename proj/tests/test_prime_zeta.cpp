#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <primezeta/bounds.hpp>
#include <primezeta/prime_zeta.hpp>

#include "test_helpers.hpp"

using namespace primezeta;
using pztest::show;
using pztest::within_abs;

namespace {

// Prime-sum partial for the enumerator-style oracle brackets.
Real prime_power_partial(const Real& s, uint32_t n_cut, mpfr_prec_t prec) {
  auto ctx_primes = primes_upto(n_cut);
  Real acc = Real::of(0L, prec);
  for (uint32_t p : ctx_primes) {
    acc += exp(-(s * log(Real::of(p, prec))));
  }
  return acc;
}

}  // namespace

TEST_CASE("prime_zeta(2) matches the prime-sum oracle bracket") {
  auto ctx = make_context(30);
  const uint32_t n_cut = 10000000;
  Real partial = prime_power_partial(Real::of(2, ctx.prec), n_cut, ctx.prec);
  auto p2 = prime_zeta(Real::of(2, ctx.prec), ctx);
  // 0 < sum_{p>N} p^-2 < sum_{n>N} n^-2 < 1/N.
  CHECK(p2.value > partial);
  CHECK(p2.value < partial + 1 / Real::of(n_cut, ctx.prec));
  CHECK(within_abs(p2.value, "0.452247420041", 1e-11));
  CHECK(p2.err_bound <= ctx.eps_eval);
}

TEST_CASE("prime_zeta near the crossing of 1") {
  auto ctx = make_context(30);
  auto r = prime_zeta(Real::of_str("1.39943", ctx.prec), ctx);
  CHECK(within_abs(r.value, "1", 2e-5));
}

TEST_CASE("prime_zeta at large argument reduces to the leading prime powers") {
  auto ctx = make_context(30);
  auto r = prime_zeta(Real::of(30, ctx.prec), ctx);
  Real three_terms = pow_si(Real::of(2, ctx.prec), -30) + pow_si(Real::of(3, ctx.prec), -30) +
                     pow_si(Real::of(5, ctx.prec), -30);
  CHECK(abs(r.value - three_terms) < Real::pow10(-20, ctx.prec));
}

TEST_CASE("prime_zeta rejects s <= 1 and reports terms used") {
  auto ctx = make_context(30);
  CHECK_THROWS_AS(prime_zeta(Real::of(1, ctx.prec), ctx), std::domain_error);
  auto r = prime_zeta(Real::of(2, ctx.prec), ctx);
  CHECK(r.terms_used > 0);
}

TEST_CASE("prime_zeta_deriv(2) sits inside the log-weighted prime oracle bracket") {
  auto ctx = make_context(30);
  const uint32_t n_cut = 10000000;
  auto primes = primes_upto(n_cut);
  Real s = Real::of(2, ctx.prec);
  Real partial = Real::of(0L, ctx.prec);
  for (uint32_t p : primes) {
    Real lp = log(Real::of(p, ctx.prec));
    partial -= lp * exp(-(s * lp));
  }
  auto d = prime_zeta_deriv(s, ctx);
  // Coarse rigorous tail: 0 < sum_{p>N} ln p / p^2 < (ln N + 1)/N.
  Real tail_cap = (log(Real::of(n_cut, ctx.prec)) + 1) / n_cut;
  CHECK(*d.derivative < partial);
  CHECK(*d.derivative > partial - tail_cap);
  CHECK(within_abs(*d.derivative, "-0.493091109368", 2e-6));
}

TEST_CASE("prime_zeta_deriv is negative across the ray") {
  auto ctx = make_context(30);
  for (const char* s : {"1.01", "1.5", "3", "6"}) {
    auto d = prime_zeta_deriv(Real::of_str(s, ctx.prec), ctx);
    CHECK(*d.derivative < 0);
  }
}

TEST_CASE("prime_zeta_deriv agrees with the central finite difference at s = 2.5") {
  auto ctx = make_context(30);
  Real s = Real::of_str("2.5", ctx.prec);
  Real delta = Real::pow10(-9, ctx.prec);
  Real fd = (prime_zeta(s + delta, ctx).value - prime_zeta(s - delta, ctx).value) / (delta * 2);
  auto d = prime_zeta_deriv(s, ctx);
  CHECK(abs(fd - *d.derivative) < Real::pow10(-6, ctx.prec));
}

TEST_CASE("prime_zeta decreases strictly along the ray") {
  auto ctx = make_context(30);
  Real prev(ctx.prec);
  bool first = true;
  for (const char* s : {"1.0001", "1.01", "1.2", "1.7", "2.5", "5", "11", "23", "40"}) {
    auto r = prime_zeta(Real::of_str(s, ctx.prec), ctx);
    if (!first) CHECK(r.value < prev);
    prev = r.value;
    first = false;
  }
}

TEST_CASE("envelope bound around log(alpha/(s-1)) holds on the grid") {
  auto ctx = make_context(30);
  Real a = alpha(ctx).value;
  Real c14 = Real::of_str("1.4", ctx.prec);
  for (const char* s_str : {"1.001", "1.01", "1.1", "1.25", "1.5", "1.75", "2"}) {
    Real s = Real::of_str(s_str, ctx.prec);
    Real gap = prime_zeta(s, ctx).value - log(a / (s - 1));
    CHECK(gap > 0);
    CHECK(gap < c14 * (s - 1));
  }
}

TEST_CASE("prime_zeta matches enumerator partial sums with tail brackets") {
  auto ctx = make_context(30);
  const uint32_t n_cut = 1000000;
  for (const char* s_str : {"1.5", "2", "3"}) {
    Real s = Real::of_str(s_str, ctx.prec);
    Real partial = prime_power_partial(s, n_cut, ctx.prec);
    auto full = prime_zeta(s, ctx);
    Real tail_cap = exp((1 - s) * log(Real::of(n_cut, ctx.prec))) / (s - 1);
    CHECK(full.value > partial);
    CHECK(full.value < partial + tail_cap);
  }
}

TEST_CASE("shifted entry point stays well conditioned arbitrarily close to 1") {
  auto ctx = make_context(30);
  // P(1+eps) ~ log(1/eps) + log(alpha): check against the envelope far below
  // any double-representable distance from the pole.
  Real eps = Real::pow10(-60, ctx.prec);
  auto r = prime_zeta_1p(eps, ctx);
  Real a = alpha(ctx).value;
  Real predicted = log(a / eps);
  CHECK(abs(r.value - predicted) < Real::of_str("1.4", ctx.prec) * eps + Real::pow10(-25, ctx.prec));
}
