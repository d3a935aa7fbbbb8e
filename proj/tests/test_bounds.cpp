#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <primezeta/bounds.hpp>

#include "test_helpers.hpp"

using namespace primezeta;
using pztest::show;
using pztest::within_abs;

TEST_CASE("alpha reproduces the published leading digits") {
  auto ctx = make_context(30);
  auto a = alpha(ctx);
  CHECK(within_abs(a.value, "0.7292", 1e-4));
  CHECK(a.value > Real::of_str("0.72", ctx.prec));
  CHECK(a.value < Real::of_str("0.73", ctx.prec));
  CHECK(a.err_bound <= ctx.eps_eval);
}

TEST_CASE("log(1/alpha) is dominated by P(2)/2") {
  auto ctx = make_context(30);
  Real log_inv = -log(alpha(ctx).value);
  Real lead = prime_zeta(Real::of(2, ctx.prec), ctx).value / 2;
  CHECK(log_inv > lead);
  CHECK(log_inv - lead < Real::of_str("0.1", ctx.prec));
}

TEST_CASE("alpha series truncation self-consistency at M = 60 vs 120") {
  auto ctx = make_context(30);
  Real acc60 = Real::of(0L, ctx.prec);
  Real acc120 = Real::of(0L, ctx.prec);
  for (int m = 2; m <= 120; ++m) {
    Real t = prime_zeta(Real::of(m, ctx.prec), ctx).value / m;
    if (m <= 60) acc60 += t;
    acc120 += t;
  }
  // The omitted block m = 61..120 is ~P(61)/61 ~ 1e-20: nineteen-digit
  // agreement, measured rather than assumed.
  Real diff = abs(exp(-acc60) - exp(-acc120));
  CHECK(diff < Real::pow10(-19, ctx.prec));
  CHECK(diff > Real::pow10(-22, ctx.prec));
}

TEST_CASE("ell_20 reproduces the published lower bound") {
  auto ctx = make_context(30);
  Real l20 = ell_k(20, ctx);
  CHECK(within_abs(l20, "0.99069", 1e-5));
}

TEST_CASE("ell_k rejects short partitions") {
  auto ctx = make_context(30);
  CHECK_THROWS_AS(ell_k(8, ctx), std::domain_error);
  CHECK_THROWS_AS(ell_k(5, ctx), std::domain_error);
}

TEST_CASE("ell_k increases strictly on a nearby window") {
  auto ctx = make_context(30);
  Real prev(ctx.prec);
  bool first = true;
  for (int k = 21; k <= 40; ++k) {
    Real v = ell_k(k, ctx);
    if (!first) CHECK(v > prev);
    prev = v;
    first = false;
  }
}

TEST_CASE("ell_k saturates: the 2^-k corrections vanish") {
  auto ctx = make_context(30);
  Real diff = ell_k(200, ctx) - ell_k(100, ctx);
  CHECK(abs(diff) < Real::pow10(-20, ctx.prec));
  CHECK(diff >= 0);
}

TEST_CASE("ell_k is bounded by its k -> infinity limit, which exceeds 0.99") {
  auto ctx = make_context(30);
  // Limit: every 2^{-k} term dropped (P' < 0, so dropping them increases).
  Real p2 = prime_zeta(Real::of(2, ctx.prec), ctx).value;
  Real bracket = Real::of(1L, ctx.prec);
  for (int j = 2; j <= 6; ++j) {
    bracket += prime_zeta(Real::of(j, ctx.prec), ctx).value / j;
  }
  bracket += p2 * p2 / 8;
  for (int j = 3; j <= 6; ++j) {
    bracket += p2 * prime_zeta(Real::of(j, ctx.prec), ctx).value / (2 * j);
  }
  Real limit = Real::of_str("0.729", ctx.prec) * bracket;
  CHECK(limit > Real::of_str("0.99", ctx.prec));
  // At k = 200 the 2^-k corrections sit below one ulp, so ell saturates at
  // the limit; at k = 20 they are still visible.
  CHECK(ell_k(200, ctx) <= limit);
  CHECK(ell_k(20, ctx) < limit);
}

TEST_CASE("chain arithmetic on the two published constants") {
  auto ctx = make_context(30);
  Real lhs = exp(-(Real::of_str("0.01", ctx.prec) * Real::of_str("1.04466", ctx.prec))) *
             Real::of_str("0.99069", ctx.prec);
  CHECK(within_abs(lhs, "0.98034", 1e-4));
  CHECK(lhs > Real::of_str("0.98", ctx.prec));
}

TEST_CASE("face-value corner bound fails for small k, as direct quadrature shows") {
  // The printed chain int_1^{1.01} P^k > .729 k! only takes over for large k;
  // at k <= 8 the left side is far smaller. Frozen from the quadrature oracle.
  auto ctx = make_context(30);
  for (int k = 1; k <= 8; ++k) {
    CHECK_FALSE(verify_psk_bound(k, ctx));
  }
  CHECK_THROWS_AS(verify_psk_bound(9, ctx), std::domain_error);
  CHECK_THROWS_AS(verify_psk_bound(0, ctx), std::domain_error);
}

TEST_CASE("the large-k form of the corner bound does hold: alpha Gamma(k+1,4) > .729 k!") {
  auto ctx = make_context(30);
  Real a = alpha(ctx).value;
  Real x4 = Real::of(4, ctx.prec);
  Real threshold = Real::of_str("0.729", ctx.prec);
  for (unsigned long k : {20ul, 25ul, 60ul, 200ul}) {
    Real lhs = a * upper_incomplete_gamma_int(k, x4) / Real::factorial(k, ctx.prec);
    CHECK(lhs > threshold);
  }
}

TEST_CASE("spot check: f(N_k, h2) clears the explicit bound route for k > 20") {
  auto ctx = make_context(30);
  Real h2 = Real::of_str("1.0446645", ctx.prec);
  Real damping = exp(-(Real::of_str("0.01", ctx.prec) * h2));
  for (int k : {21, 25, 30}) {
    Real f_val = f_translated(k, h2, ctx).value;
    CHECK(f_val > damping * ell_k(k, ctx));
  }
}
