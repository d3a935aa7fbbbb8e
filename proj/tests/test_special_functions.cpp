#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <primezeta/special_functions.hpp>

#include "test_helpers.hpp"

using namespace primezeta;
using pztest::show;
using pztest::within_abs;

namespace {

// Trial-division oracles, independent of the sieves under test.
int naive_mu(uint32_t n) {
  int factors = 0;
  for (uint32_t p = 2; p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    ++factors;
  }
  return factors % 2 == 0 ? 1 : -1;
}

bool naive_is_prime(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("Bernoulli cache matches the exact rationals") {
  const auto& b = BernoulliCache::instance();
  CHECK(b.at(1) == mpq_class(1, 6));
  CHECK(b.at(2) == mpq_class(-1, 30));
  CHECK(b.at(3) == mpq_class(1, 42));
  CHECK(b.at(4) == mpq_class(-1, 30));
  CHECK(b.at(5) == mpq_class(5, 66));
  CHECK(b.at(6) == mpq_class(-691, 2730));
  CHECK(b.count() >= 64);
}

TEST_CASE("zeta matches the closed forms at even integers") {
  auto ctx = make_context(30);
  Real pi = Real::pi(ctx.prec);
  auto z2 = zeta(Real::of(2, ctx.prec), ctx);
  CHECK(abs(z2.value - pi * pi / 6) < Real::pow10(-30, ctx.prec));
  auto z4 = zeta(Real::of(4, ctx.prec), ctx);
  CHECK(abs(z4.value - pow_si(pi, 4) / 90) < Real::pow10(-30, ctx.prec));
}

TEST_CASE("zeta(1.5) sits inside the direct-sum oracle bracket") {
  auto ctx = make_context(30);
  const long n_cut = 1000000;
  Real s = Real::of_str("1.5", ctx.prec);
  Real partial = Real::of(0L, ctx.prec);
  for (long n = 1; n <= n_cut; ++n) {
    partial += exp(-(s * log(Real::of(n, ctx.prec))));
  }
  // Integral bracket for the tail: 2/sqrt(N+1) < sum_{n>N} n^-1.5 < 2/sqrt(N).
  Real lo = partial + 2 / sqrt(Real::of(n_cut + 1, ctx.prec));
  Real hi = partial + 2 / sqrt(Real::of(n_cut, ctx.prec));
  auto z = zeta(s, ctx);
  CHECK(z.value > lo - ctx.eps_eval);
  CHECK(z.value < hi + ctx.eps_eval);
  CHECK(within_abs(z.value, "2.612375348685", 1e-11));
}

TEST_CASE("zeta rejects the closed half-plane s <= 1") {
  auto ctx = make_context(30);
  CHECK_THROWS_AS(zeta(Real::of(1, ctx.prec), ctx), std::domain_error);
  CHECK_THROWS_AS(zeta(Real::of_str("0.5", ctx.prec), ctx), std::domain_error);
}

TEST_CASE("zeta_prime(2) sits inside the log-weighted oracle bracket") {
  auto ctx = make_context(30);
  const long n_cut = 1000000;
  Real s = Real::of(2, ctx.prec);
  Real partial = Real::of(0L, ctx.prec);
  for (long n = 2; n <= n_cut; ++n) {
    Real ln = log(Real::of(n, ctx.prec));
    partial -= ln * exp(-(s * ln));
  }
  // sum_{n>N} ln n / n^2 lies between the integrals at N+1 and N:
  //   int_N^inf ln x / x^2 dx = (ln N + 1)/N.
  Real ln_n1 = log(Real::of(n_cut + 1, ctx.prec));
  Real ln_n = log(Real::of(n_cut, ctx.prec));
  Real lo = partial - (ln_n + 1) / n_cut;
  Real hi = partial - (ln_n1 + 1) / (n_cut + 1);
  auto zp = zeta_prime(s, ctx);
  CHECK(zp.value > lo - ctx.eps_eval);
  CHECK(zp.value < hi + ctx.eps_eval);
  CHECK(within_abs(zp.value, "-0.937548254316", 1e-10));
}

TEST_CASE("zeta_prime is negative across the ray") {
  auto ctx = make_context(30);
  for (const char* s : {"1.1", "2", "5", "10"}) {
    auto zp = zeta_prime(Real::of_str(s, ctx.prec), ctx);
    CHECK(zp.value < 0);
  }
}

TEST_CASE("zeta_prime agrees with the central finite difference at s = 3") {
  auto ctx = make_context(30);
  Real s = Real::of(3, ctx.prec);
  Real delta = Real::pow10(-8, ctx.prec);
  Real fd = (zeta(s + delta, ctx).value - zeta(s - delta, ctx).value) / (delta * 2);
  auto zp = zeta_prime(s, ctx);
  CHECK(abs(fd - zp.value) < Real::pow10(-6, ctx.prec));
}

TEST_CASE("zeta decreases strictly and flattens to 1") {
  auto ctx = make_context(30);
  Real prev(ctx.prec);
  bool first = true;
  for (const char* s : {"1.0001", "1.2", "2", "3.7", "10", "25", "40"}) {
    auto z = zeta(Real::of_str(s, ctx.prec), ctx);
    if (!first) CHECK(z.value < prev);
    prev = z.value;
    first = false;
  }
  auto z50 = zeta(Real::of(50, ctx.prec), ctx);
  CHECK(z50.value - 1 < Real::pow10(-14, ctx.prec));
  CHECK(z50.value > 1);
}

TEST_CASE("Euler-Maclaurin values at 30 and 50 digits agree to >= 28 digits") {
  auto c30 = make_context(30);
  auto c50 = make_context(50);
  for (const char* s : {"1.001", "1.1", "2", "10"}) {
    auto z30 = zeta(Real::of_str(s, c30.prec), c30);
    auto z50 = zeta(Real::of_str(s, c50.prec), c50);
    Real rel = abs(z30.value - z50.value) / z50.value;
    CHECK(rel < Real::pow10(-28, c50.prec));
  }
}

TEST_CASE("moebius values and partial sum") {
  auto mu = moebius_upto(30);
  CHECK(mu[1] == 1);
  CHECK(mu[2] == -1);
  CHECK(mu[4] == 0);
  CHECK(mu[6] == 1);
  CHECK(mu[30] == -1);
  int sum10 = 0;
  for (int m = 1; m <= 10; ++m) sum10 += mu[static_cast<size_t>(m)];
  CHECK(sum10 == -1);
}

TEST_CASE("sieves agree with trial-division oracles up to 10^4") {
  auto mu = moebius_upto(10000);
  for (uint32_t n = 1; n <= 10000; ++n) {
    REQUIRE(mu[n] == naive_mu(n));
  }
  auto primes = primes_upto(10000);
  size_t idx = 0;
  for (uint32_t n = 2; n <= 10000; ++n) {
    if (naive_is_prime(n)) {
      REQUIRE(idx < primes.size());
      REQUIRE(primes[idx] == n);
      ++idx;
    }
  }
  CHECK(idx == primes.size());
}

TEST_CASE("prime counts") {
  CHECK(primes_upto(10) == std::vector<uint32_t>{2, 3, 5, 7});
  CHECK(primes_upto(100).size() == 25);
  CHECK(primes_upto(1000000).size() == 78498);
}

TEST_CASE("integer-order upper incomplete gamma closed forms") {
  auto ctx = make_context(30);
  Real x = Real::of(4, ctx.prec);
  Real em4 = exp(-x);
  CHECK(abs(upper_incomplete_gamma_int(0, x) - em4) < Real::pow10(-30, ctx.prec));
  CHECK(abs(upper_incomplete_gamma_int(1, x) - em4 * 5) < Real::pow10(-29, ctx.prec));
  Real ratio = upper_incomplete_gamma_int(20, x) / Real::factorial(20, ctx.prec);
  CHECK(ratio > Real::of_str("0.99", ctx.prec));
  CHECK(ratio < 1);
  CHECK_THROWS_AS(upper_incomplete_gamma_int(3, Real::of(-1, ctx.prec)), std::domain_error);
}

TEST_CASE("Gamma(k+1,4)/k! increases in k up to 200") {
  // The increment e^-4 4^{k+1}/(k+1)! is positive for every k but falls
  // below one ulp of 1 near k = 45 at 132-bit precision. Strict comparison
  // is meaningful while the increments are representable; beyond that the
  // ratio has saturated at 1 up to rounding noise.
  auto ctx = make_context(30);
  Real x = Real::of(4, ctx.prec);
  Real prev(ctx.prec);
  for (unsigned long k = 0; k <= 200; ++k) {
    Real ratio = upper_incomplete_gamma_int(k, x) / Real::factorial(k, ctx.prec);
    if (k > 0 && k <= 40) {
      CHECK(ratio > prev);
      CHECK(ratio < 1);
    }
    if (k > 40) CHECK(abs(ratio - 1) < Real::pow10(-25, ctx.prec));
    prev = ratio;
  }
}
