#pragma once

#include <mpfr.h>

#include <stdexcept>
#include <string>

namespace primezeta {

/// Arbitrary-precision real number: a thin RAII wrapper over mpfr_t.
///
/// Each value carries its own mantissa precision in bits. Binary operations
/// round to nearest at the wider of the two operand precisions, so mixing
/// values from contexts of different working precision is well defined.
class Real {
 public:
  explicit Real(mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_nan(v_);
  }
  Real(const Real& o) {
    mpfr_init2(v_, o.prec());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, o.prec());
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  static Real of(long n, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_si(r.v_, n, MPFR_RNDN);
    return r;
  }
  static Real of_double(double d, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_d(r.v_, d, MPFR_RNDN);
    return r;
  }
  /// Parse a decimal literal, correctly rounded to `prec` bits.
  static Real of_str(const std::string& s, mpfr_prec_t prec) {
    Real r(prec);
    if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0) {
      throw std::invalid_argument("Real::of_str: cannot parse '" + s + "'");
    }
    return r;
  }
  static Real pi(mpfr_prec_t prec) {
    Real r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
  }
  static Real factorial(unsigned long k, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_fac_ui(r.v_, k, MPFR_RNDN);
    return r;
  }
  /// 10^e as a correctly rounded value (e may be negative).
  static Real pow10(long e, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_si(r.v_, 10, MPFR_RNDN);
    mpfr_pow_si(r.v_, r.v_, e, MPFR_RNDN);
    return r;
  }

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  Real& operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator/=(const Real& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator+=(long n) { mpfr_add_si(v_, v_, n, MPFR_RNDN); return *this; }
  Real& operator-=(long n) { mpfr_sub_si(v_, v_, n, MPFR_RNDN); return *this; }
  Real& operator*=(long n) { mpfr_mul_si(v_, v_, n, MPFR_RNDN); return *this; }
  Real& operator/=(long n) { mpfr_div_si(v_, v_, n, MPFR_RNDN); return *this; }

 private:
  mpfr_t v_;
};

inline mpfr_prec_t wider(const Real& a, const Real& b) {
  return a.prec() > b.prec() ? a.prec() : b.prec();
}

inline Real operator+(const Real& a, const Real& b) {
  Real r(wider(a, b));
  mpfr_add(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}
inline Real operator-(const Real& a, const Real& b) {
  Real r(wider(a, b));
  mpfr_sub(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}
inline Real operator*(const Real& a, const Real& b) {
  Real r(wider(a, b));
  mpfr_mul(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}
inline Real operator/(const Real& a, const Real& b) {
  Real r(wider(a, b));
  mpfr_div(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}
inline Real operator-(const Real& a) {
  Real r(a.prec());
  mpfr_neg(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}

inline Real operator+(const Real& a, long n) {
  Real r(a.prec());
  mpfr_add_si(r.raw(), a.raw(), n, MPFR_RNDN);
  return r;
}
inline Real operator+(long n, const Real& a) { return a + n; }
inline Real operator-(const Real& a, long n) {
  Real r(a.prec());
  mpfr_sub_si(r.raw(), a.raw(), n, MPFR_RNDN);
  return r;
}
inline Real operator-(long n, const Real& a) {
  Real r(a.prec());
  mpfr_si_sub(r.raw(), n, a.raw(), MPFR_RNDN);
  return r;
}
inline Real operator*(const Real& a, long n) {
  Real r(a.prec());
  mpfr_mul_si(r.raw(), a.raw(), n, MPFR_RNDN);
  return r;
}
inline Real operator*(long n, const Real& a) { return a * n; }
inline Real operator/(const Real& a, long n) {
  Real r(a.prec());
  mpfr_div_si(r.raw(), a.raw(), n, MPFR_RNDN);
  return r;
}
inline Real operator/(long n, const Real& a) {
  Real r(a.prec());
  mpfr_si_div(r.raw(), n, a.raw(), MPFR_RNDN);
  return r;
}

inline bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.raw(), b.raw()) != 0; }
inline bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.raw(), b.raw()) != 0; }
inline bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.raw(), b.raw()) != 0; }
inline bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.raw(), b.raw()) != 0; }
inline bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.raw(), b.raw()) != 0; }
inline bool operator!=(const Real& a, const Real& b) { return !(a == b); }

inline bool operator<(const Real& a, long n) { return mpfr_cmp_si(a.raw(), n) < 0; }
inline bool operator>(const Real& a, long n) { return mpfr_cmp_si(a.raw(), n) > 0; }
inline bool operator<=(const Real& a, long n) { return mpfr_cmp_si(a.raw(), n) <= 0; }
inline bool operator>=(const Real& a, long n) { return mpfr_cmp_si(a.raw(), n) >= 0; }
inline bool operator==(const Real& a, long n) { return mpfr_cmp_si(a.raw(), n) == 0; }

inline Real exp(const Real& x) {
  Real r(x.prec());
  mpfr_exp(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}
inline Real log(const Real& x) {
  Real r(x.prec());
  mpfr_log(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}
inline Real sqrt(const Real& x) {
  Real r(x.prec());
  mpfr_sqrt(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}
inline Real abs(const Real& x) {
  Real r(x.prec());
  mpfr_abs(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}
inline Real pow(const Real& x, const Real& y) {
  Real r(wider(x, y));
  mpfr_pow(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
  return r;
}
inline Real pow_si(const Real& x, long n) {
  Real r(x.prec());
  mpfr_pow_si(r.raw(), x.raw(), n, MPFR_RNDN);
  return r;
}
/// k-th root, k >= 1.
inline Real rootn(const Real& x, unsigned long k) {
  Real r(x.prec());
  mpfr_rootn_ui(r.raw(), x.raw(), k, MPFR_RNDN);
  return r;
}
/// x * 2^e (exact apart from final rounding).
inline Real scale2(const Real& x, long e) {
  Real r(x.prec());
  mpfr_mul_2si(r.raw(), x.raw(), e, MPFR_RNDN);
  return r;
}
inline void sinh_cosh(Real& sh, Real& ch, const Real& t) {
  mpfr_sinh_cosh(sh.raw(), ch.raw(), t.raw(), MPFR_RNDN);
}
inline Real max(const Real& a, const Real& b) { return a < b ? b : a; }
inline Real min(const Real& a, const Real& b) { return a < b ? a : b; }

/// Fixed-point decimal string with exactly `places` fractional digits,
/// rounded to nearest with ties to even.
inline std::string format_fixed(const Real& x, int places) {
  char* out = nullptr;
  mpfr_asprintf(&out, "%.*R*f", places, MPFR_RNDN, x.raw());
  std::string s(out);
  mpfr_free_str(out);
  return s;
}

/// Scientific-style string with `digits` significant digits.
inline std::string format_sig(const Real& x, int digits) {
  char* out = nullptr;
  mpfr_asprintf(&out, "%.*R*g", digits, MPFR_RNDN, x.raw());
  std::string s(out);
  mpfr_free_str(out);
  return s;
}

}  // namespace primezeta
