#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <primezeta/numeric_context.hpp>
#include <primezeta/special_functions.hpp>

#include "test_helpers.hpp"

using namespace primezeta;
using pztest::within_abs;

TEST_CASE("make_context derives the documented defaults") {
  auto ctx = make_context(30);
  CHECK(ctx.digits == 30);
  CHECK(ctx.prec == 132);
  CHECK(ctx.eps_eval == Real::pow10(-13, ctx.prec));
  CHECK(ctx.eps_root == Real::pow10(-10, ctx.prec));
  CHECK(ctx.eps_root >= ctx.eps_eval);
  CHECK(ctx.zeta_em_nodes == 45);
  CHECK(ctx.max_quad_level == 12);
  CHECK(ctx.max_moebius_terms == 256);
}

TEST_CASE("make_context boundary and rejection") {
  auto minimal = make_context(15);
  CHECK(minimal.digits == 15);
  CHECK(minimal.eps_eval > 0);
  CHECK(minimal.eps_root >= minimal.eps_eval);
  CHECK_THROWS_AS(make_context(10), std::domain_error);
  CHECK_THROWS_AS(make_context(14), std::domain_error);
}

TEST_CASE("derived cutoffs are monotone in digits") {
  auto a = make_context(15);
  auto b = make_context(30);
  auto c = make_context(50);
  CHECK(a.prec < b.prec);
  CHECK(b.prec < c.prec);
  CHECK(a.zeta_em_nodes <= b.zeta_em_nodes);
  CHECK(b.zeta_em_nodes <= c.zeta_em_nodes);
  CHECK(a.zeta_em_bernoulli <= b.zeta_em_bernoulli);
  CHECK(b.zeta_em_bernoulli <= c.zeta_em_bernoulli);
  CHECK(b.eps_eval < a.eps_eval);
  CHECK(c.eps_eval < b.eps_eval);
}

TEST_CASE("round_for_display fixed-point formatting") {
  auto ctx = make_context(30);
  CHECK(round_for_display(Real::of_str("1.044655", ctx.prec), 5) == "1.04466");
  CHECK(round_for_display(Real::of_str("1.0", ctx.prec), 5) == "1.00000");
  // The half-way-looking 7th digit resolves by the parsed binary value;
  // both neighbors are acceptable and the outcome must be stable.
  auto s = round_for_display(Real::of_str("0.8035245", ctx.prec), 6);
  CHECK((s == "0.803524" || s == "0.803525"));
  CHECK(s == round_for_display(Real::of_str("0.8035245", ctx.prec), 6));
}

TEST_CASE("round_for_display is round-half-even on exact binary halves") {
  auto ctx = make_context(30);
  CHECK(round_for_display(Real::of_str("2.5", ctx.prec), 0) == "2");
  CHECK(round_for_display(Real::of_str("3.5", ctx.prec), 0) == "4");
  CHECK(round_for_display(Real::of_str("0.25", ctx.prec), 1) == "0.2");
  CHECK(round_for_display(Real::of_str("0.75", ctx.prec), 1) == "0.8");
  CHECK_THROWS_AS(round_for_display(Real::of(1, ctx.prec), -1), std::domain_error);
}

TEST_CASE("evaluations are deterministic for a fixed context") {
  auto ctx1 = make_context(30);
  auto ctx2 = make_context(30);
  auto z1 = zeta(Real::of_str("1.7", ctx1.prec), ctx1);
  auto z2 = zeta(Real::of_str("1.7", ctx2.prec), ctx2);
  CHECK(z1.value == z2.value);  // bit identical
  CHECK(z1.err_bound == z2.err_bound);
}

TEST_CASE("increasing digits never increases the certified error bound") {
  auto c30 = make_context(30);
  auto c50 = make_context(50);
  auto z30 = zeta(Real::of(2, c30.prec), c30);
  auto z50 = zeta(Real::of(2, c50.prec), c50);
  CHECK(z50.err_bound <= z30.err_bound);
}
