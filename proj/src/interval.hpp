#pragma once

// Closed real intervals with MPFR endpoints and outward rounding. Only the
// handful of operations the sign test needs.

#include <gmpxx.h>
#include <mpfr.h>

#include <utility>

namespace skein::detail {

class Interval {
 public:
  explicit Interval(long precision) {
    mpfr_init2(lo_, precision);
    mpfr_init2(hi_, precision);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
  }
  Interval(const Interval& other) {
    mpfr_init2(lo_, mpfr_get_prec(other.lo_));
    mpfr_init2(hi_, mpfr_get_prec(other.hi_));
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
  }
  Interval& operator=(Interval other) {
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
    return *this;
  }
  ~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
  }

  long precision() const { return mpfr_get_prec(lo_); }

  void set_exact(long value) {
    mpfr_set_si(lo_, value, MPFR_RNDD);
    mpfr_set_si(hi_, value, MPFR_RNDU);
  }
  void set_whole(double lo, double hi) {
    mpfr_set_d(lo_, lo, MPFR_RNDD);
    mpfr_set_d(hi_, hi, MPFR_RNDU);
  }

  /// cos(pi * num / den) for 0 <= num < 2*den.
  void set_cos_pi_fraction(long num, long den) {
    if (num == 0) return set_exact(1);
    if (num == den) return set_exact(-1);
    if (2 * num == den || 2 * num == 3 * den) return set_exact(0);

    const long prec = precision();
    mpfr_t pi_lo, pi_hi, t_lo, t_hi, two_pi_lo;
    mpfr_inits2(prec, pi_lo, pi_hi, t_lo, t_hi, two_pi_lo, static_cast<mpfr_ptr>(nullptr));
    mpfr_const_pi(pi_lo, MPFR_RNDD);
    mpfr_const_pi(pi_hi, MPFR_RNDU);
    mpfr_mul_ui(two_pi_lo, pi_lo, 2, MPFR_RNDD);
    mpfr_mul_ui(t_lo, pi_lo, static_cast<unsigned long>(num), MPFR_RNDD);
    mpfr_div_ui(t_lo, t_lo, static_cast<unsigned long>(den), MPFR_RNDD);
    mpfr_mul_ui(t_hi, pi_hi, static_cast<unsigned long>(num), MPFR_RNDU);
    mpfr_div_ui(t_hi, t_hi, static_cast<unsigned long>(den), MPFR_RNDU);

    if (num < den && mpfr_cmp(t_hi, pi_lo) < 0) {
      // decreasing on (0, pi)
      mpfr_cos(lo_, t_hi, MPFR_RNDD);
      mpfr_cos(hi_, t_lo, MPFR_RNDU);
    } else if (num > den && mpfr_cmp(t_lo, pi_hi) > 0 && mpfr_cmp(t_hi, two_pi_lo) < 0) {
      // increasing on (pi, 2pi)
      mpfr_cos(lo_, t_lo, MPFR_RNDD);
      mpfr_cos(hi_, t_hi, MPFR_RNDU);
    } else {
      set_whole(-1.0, 1.0);
    }
    mpfr_clears(pi_lo, pi_hi, t_lo, t_hi, two_pi_lo, static_cast<mpfr_ptr>(nullptr));
  }

  /// this += other * q
  void add_scaled(const Interval& other, const mpq_class& q) {
    mpfr_t a, b;
    mpfr_inits2(precision(), a, b, static_cast<mpfr_ptr>(nullptr));
    if (sgn(q) >= 0) {
      mpfr_mul_q(a, other.lo_, q.get_mpq_t(), MPFR_RNDD);
      mpfr_mul_q(b, other.hi_, q.get_mpq_t(), MPFR_RNDU);
    } else {
      mpfr_mul_q(a, other.hi_, q.get_mpq_t(), MPFR_RNDD);
      mpfr_mul_q(b, other.lo_, q.get_mpq_t(), MPFR_RNDU);
    }
    mpfr_add(lo_, lo_, a, MPFR_RNDD);
    mpfr_add(hi_, hi_, b, MPFR_RNDU);
    mpfr_clears(a, b, static_cast<mpfr_ptr>(nullptr));
  }

  bool positive() const { return mpfr_sgn(lo_) > 0; }
  bool negative() const { return mpfr_sgn(hi_) < 0; }
  double midpoint() const { return 0.5 * (mpfr_get_d(lo_, MPFR_RNDN) + mpfr_get_d(hi_, MPFR_RNDN)); }

 private:
  mpfr_t lo_;
  mpfr_t hi_;
};

}  // namespace skein::detail
